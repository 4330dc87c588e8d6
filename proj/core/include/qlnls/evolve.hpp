#ifndef QLNLS_EVOLVE_HPP
#define QLNLS_EVOLVE_HPP

#include <string>
#include <vector>

#include "qlnls/field.hpp"
#include "qlnls/groundstate.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

struct EvolutionConfig {
    double t_end = 1.0;
    long n_steps = 100000;
    long record_every = 1000; // diagnostic cadence in steps
    double delta_guard = kDefaultGuard;
    double c_stab = 1.0; // warn when dt (N/L)^2 exceeds this
    bool dealias = true; // 2/3-rule mask on stage derivatives (see README)

    double dt() const { return t_end / n_steps; }
};

/// Accuracy-control time series sampled every record_every steps.
struct Diagnostics {
    std::vector<double> times;
    std::vector<double> energy;
    std::vector<double> energy_rel_drift; // (E - E0)/|E0|, exactly 0 at t=0
    std::vector<double> linf;             // max |phi|
    std::vector<double> fourier_tail;     // max |coeff|, top octave
    std::vector<double> mass;             // int |phi|^2
};

struct EvolveResult {
    ComplexField final_state;
    Diagnostics diagnostics;
    bool completed = false;
    std::string error;      // non-empty when aborted (singularity guard)
    double stop_time = 0.0; // time reached
    std::vector<std::string> warnings;
};

// One classical RK4 step; throws SingularityError (with the stage) on guard
// violation at any of the four stage evaluations.
ComplexField rk4_step(const ComplexField& field, double dt, const ModelParams& params,
                      double delta_guard = kDefaultGuard, bool dealias = true);

// Fixed-step RK4 over [0, t_end]. A guard violation mid-run aborts and
// returns the last good state plus partial diagnostics (completed=false).
EvolveResult evolve(const ComplexField& initial, const EvolutionConfig& cfg,
                    const ModelParams& params);

struct InitialCondition {
    enum class Kind {
        ground_state_scaled,       // lambda * phi(x)
        ground_state_plus_gaussian,// phi(x) + sign * amplitude * exp(-x^2)
        gaussian,                  // mu * exp(-x^2)
    };
    Kind kind = Kind::ground_state_scaled;
    double lambda = 1.0;
    int sign = +1;
    double amplitude = 1e-3;
    double mu = 0.9;
};

// Samples the initial condition; throws ValidationError if the amplitude
// violates the guard (max|phi0|^{2 alpha} >= 1 - delta_guard) or, for the
// ground-state kinds, if a <= (alpha+1) b.
ComplexField make_initial(const InitialCondition& ic, const ModelParams& params,
                          std::shared_ptr<const Grid> grid, double delta_guard = kDefaultGuard);

// Generic classical RK4 update, y <- y + dt/6 (k1 + 2 k2 + 2 k3 + k4).
// State needs +, scalar *; shared by the field stepper and the phase-plane
// orbit integrators (which instantiate it with long double states).
template <class State, class Scalar, class F>
State rk4_advance(const State& y, Scalar dt, F&& f) {
    const State k1 = f(y);
    const State k2 = f(y + (dt / Scalar(2)) * k1);
    const State k3 = f(y + (dt / Scalar(2)) * k2);
    const State k4 = f(y + dt * k3);
    return y + (dt / Scalar(6)) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
}

} // namespace qlnls

#endif

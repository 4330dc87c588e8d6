#include "qlnls/evolve.hpp"

#include <cmath>
#include <sstream>

#include "qlnls/energy.hpp"
#include "qlnls/spectral.hpp"

namespace qlnls {

namespace {

std::vector<unsigned char> make_dealias_mask(const Grid& grid) {
    std::vector<unsigned char> mask(grid.n);
    for (int j = 0; j < grid.n; ++j)
        mask[j] = std::abs(grid.mode_number(j)) <= grid.n / 3 ? 1 : 0;
    return mask;
}

// Coefficient-space RK4 stepper with preallocated buffers.
class Stepper {
  public:
    Stepper(const Grid& grid, const ModelParams& params, double delta_guard, bool dealias)
        : grid_(grid), fft_(Fft::plan_for(grid.n)), params_(params), guard_(delta_guard) {
        if (dealias) mask_ = make_dealias_mask(grid);
        const int n = grid.n;
        k1_.resize(n);
        k2_.resize(n);
        k3_.resize(n);
        k4_.resize(n);
        tmp_.resize(n);
    }

    const unsigned char* mask() const { return mask_.empty() ? nullptr : mask_.data(); }

    void apply_mask(complexd* hat) const {
        if (mask_.empty()) return;
        for (int j = 0; j < grid_.n; ++j)
            if (!mask_[j]) hat[j] = 0.0;
    }

    // hat <- RK4 step of d(hat)/dt = rhs_hat(hat)
    void step(cvector& hat, double dt) {
        const int n = grid_.n;
        detail::rhs_hat(hat.data(), k1_.data(), grid_, fft_, params_, guard_, mask(), scratch_, 1);
        for (int j = 0; j < n; ++j) tmp_[j] = hat[j] + 0.5 * dt * k1_[j];
        detail::rhs_hat(tmp_.data(), k2_.data(), grid_, fft_, params_, guard_, mask(), scratch_, 2);
        for (int j = 0; j < n; ++j) tmp_[j] = hat[j] + 0.5 * dt * k2_[j];
        detail::rhs_hat(tmp_.data(), k3_.data(), grid_, fft_, params_, guard_, mask(), scratch_, 3);
        for (int j = 0; j < n; ++j) tmp_[j] = hat[j] + dt * k3_[j];
        detail::rhs_hat(tmp_.data(), k4_.data(), grid_, fft_, params_, guard_, mask(), scratch_, 4);
        const double w = dt / 6.0;
        for (int j = 0; j < n; ++j)
            hat[j] += w * (k1_[j] + 2.0 * k2_[j] + 2.0 * k3_[j] + k4_[j]);
    }

    const Fft& fft() const { return fft_; }

  private:
    const Grid& grid_;
    const Fft& fft_;
    ModelParams params_;
    double guard_;
    std::vector<unsigned char> mask_;
    detail::RhsScratch scratch_;
    cvector k1_, k2_, k3_, k4_, tmp_;
};

} // namespace

ComplexField rk4_step(const ComplexField& field, double dt, const ModelParams& params,
                      double delta_guard, bool dealias) {
    if (!field.grid) throw ValidationError("rk4_step: field has no grid");
    Stepper stepper(*field.grid, params, delta_guard, dealias);
    cvector hat(field.size());
    stepper.fft().forward(field.values.data(), hat.data());
    stepper.step(hat, dt);
    cvector out(field.size());
    stepper.fft().inverse(hat.data(), out.data());
    return ComplexField{std::move(out), field.grid};
}

EvolveResult evolve(const ComplexField& initial, const EvolutionConfig& cfg,
                    const ModelParams& params) {
    if (!initial.grid) throw ValidationError("evolve: field has no grid");
    if (!(cfg.t_end > 0.0)) throw ValidationError("evolve: t_end must be positive");
    if (cfg.n_steps < 1) throw ValidationError("evolve: n_steps must be positive");
    if (cfg.record_every < 1) throw ValidationError("evolve: record_every must be positive");
    if (!(cfg.delta_guard > 0.0 && cfg.delta_guard < 1.0))
        throw ValidationError("evolve: delta_guard must lie in (0,1)");
    check_guard(initial, params.alpha, cfg.delta_guard);

    const Grid& grid = *initial.grid;
    const double dt = cfg.dt();
    EvolveResult result;

    const double stab = dt * (grid.n / grid.scale) * (grid.n / grid.scale);
    if (stab > cfg.c_stab) {
        std::ostringstream os;
        os << "stability heuristic exceeded: dt*(N/L)^2 = " << stab << " > " << cfg.c_stab;
        result.warnings.push_back(os.str());
    }

    Stepper stepper(grid, params, cfg.delta_guard, cfg.dealias);
    cvector hat(grid.n);
    stepper.fft().forward(initial.values.data(), hat.data());
    stepper.apply_mask(hat.data());

    ComplexField state{cvector(grid.n), initial.grid};
    auto snapshot = [&]() {
        stepper.fft().inverse(hat.data(), state.values.data());
    };

    Diagnostics& diag = result.diagnostics;
    double e0 = 0.0;
    auto record = [&](double t) {
        snapshot();
        const double e = energy(state, params, cfg.delta_guard);
        if (diag.times.empty()) e0 = e;
        diag.times.push_back(t);
        diag.energy.push_back(e);
        diag.energy_rel_drift.push_back(diag.times.size() == 1 ? 0.0 : (e - e0) / std::abs(e0));
        diag.linf.push_back(max_abs(state));
        diag.fourier_tail.push_back(fourier_tail(state));
        diag.mass.push_back(mass(state));
    };

    record(0.0);
    long step = 0;
    try {
        for (step = 1; step <= cfg.n_steps; ++step) {
            stepper.step(hat, dt);
            if (step % cfg.record_every == 0 || step == cfg.n_steps) record(step * dt);
        }
        result.completed = true;
        result.stop_time = cfg.t_end;
    } catch (const SingularityError& e) {
        // keep the last representable state and the partial time series
        result.completed = false;
        result.error = e.what();
        result.stop_time = (step - 1) * dt;
    }
    snapshot();
    result.final_state = std::move(state);
    return result;
}

ComplexField make_initial(const InitialCondition& ic, const ModelParams& params,
                          std::shared_ptr<const Grid> grid, double delta_guard) {
    if (!grid) throw ValidationError("make_initial: null grid");
    cvector v(grid->n);
    switch (ic.kind) {
        case InitialCondition::Kind::ground_state_scaled: {
            GroundState gs(params);
            for (int j = 0; j < grid->n; ++j) v[j] = ic.lambda * gs.eval(grid->xs[j]);
            break;
        }
        case InitialCondition::Kind::ground_state_plus_gaussian: {
            GroundState gs(params);
            const double s = ic.sign >= 0 ? 1.0 : -1.0;
            for (int j = 0; j < grid->n; ++j) {
                const double x = grid->xs[j];
                v[j] = gs.eval(x) + s * ic.amplitude * std::exp(-x * x);
            }
            break;
        }
        case InitialCondition::Kind::gaussian: {
            for (int j = 0; j < grid->n; ++j) {
                const double x = grid->xs[j];
                v[j] = ic.mu * std::exp(-x * x);
            }
            break;
        }
    }
    ComplexField f{std::move(v), std::move(grid)};
    double m2max = 0.0;
    for (const auto& z : f.values) m2max = std::max(m2max, std::norm(z));
    if (ipow(m2max, params.alpha) >= 1.0 - delta_guard) {
        std::ostringstream os;
        os << "initial condition amplitude too large: max|phi0| = " << std::sqrt(m2max)
           << " violates the singularity guard";
        throw ValidationError(os.str());
    }
    return f;
}

} // namespace qlnls

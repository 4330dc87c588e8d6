#ifndef QLNLS_PHASEPLANE_HPP
#define QLNLS_PHASEPLANE_HPP

#include <vector>

#include "qlnls/grid.hpp"
#include "qlnls/groundstate.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

/// State of the first-order stationary system
///   chi' = alpha chi^2 phi^{2a-1} - a phi^{2a+1} + b phi,
///   phi' = chi (1 - phi^{2a}).
struct PhasePoint {
    double chi = 0.0;
    double phi = 0.0;
};

// H(chi, phi) = chi^2 (1 - phi^{2a})/2 + a phi^{2a+2}/(2(a+1)) - b phi^2/2;
// conserved along orbits, identically 0 on the ground-state orbit.
double hamiltonian(const PhasePoint& p, const ModelParams& params);

enum class CriticalKind { local_min, saddle };
enum class ParamRegime { a_gt_b, a_eq_b, a_lt_b };

struct CriticalPoint {
    double chi = 0.0;
    double phi = 0.0;
    CriticalKind kind = CriticalKind::saddle;
};

struct CriticalPointReport {
    std::vector<CriticalPoint> points;
    ParamRegime regime = ParamRegime::a_gt_b;
};

/// All zeros of grad H with their classification:
///   a > b: (0,0) saddle, (0, +-(b/a)^{1/2a}) minima, (+-sqrt((a-b)/alpha), +-1) saddles;
///   a = b: (0,0) saddle, (0,+-1) degenerate (Hessian singular; H takes both
///          signs arbitrarily close, reported as saddles);
///   a < b: (0,0), (0, +-(b/a)^{1/2a}) all saddles.
CriticalPointReport critical_points(const ModelParams& params);

// chi^2 on the zero level set Gamma_0 at the given phi (phi^2 < 1 required,
// else ValidationError); a negative return means no real branch there.
double zero_level_set(double phi, const ModelParams& params);

struct OrbitSample {
    double x = 0.0;
    PhasePoint p;
};

/// Reconstructs the ground-state orbit by integrating the first-order system
/// from the turning point (chi, phi) = (0, ((alpha+1)b/a)^{1/(2 alpha)}) at
/// x = 0, n_steps RK4 steps of size x_span/n_steps in each direction. The
/// integration state is long double (double-precision shooting saturates
/// near 1e-7 on [-10,10]; see README). Throws ValidationError if the orbit
/// leaves 0 < phi < 1 (step size too large) or if a <= (alpha+1) b.
std::vector<OrbitSample> shoot_ground_state(const ModelParams& params, double x_span,
                                            long n_steps);

/// Applies the linearized operator L (around the ground state) to samples v
/// on the grid, second-order conservative finite differences with
/// homogeneous Dirichlet values beyond both ends:
///   (L v)_j = -[p_{j+1/2}(v_{j+1}-v_j) - p_{j-1/2}(v_j-v_{j-1})]/h^2 + q_j v_j,
/// p = 1/(1 - phi^{2 alpha}) at midpoints, q from the closed forms.
std::vector<double> linearized_apply(const std::vector<double>& v, const GroundState& gs,
                                     const Grid& grid);

struct NondegeneracyReport {
    double eigenvalue_near_zero = 0.0;
    double eigvec_alignment = 0.0; // |<e0, phi'>| / (||e0|| ||phi'||)
    int zero_multiplicity = 0;     // eigenvalues within tol_zero of 0
    double tol_zero = 0.0;         // 10 h^2
};

/// Discrete spectrum of the symmetric discretization of L on the truncated
/// domain. Requires phi(edge) < 1e-6. Throws on eigensolver failure.
NondegeneracyReport nondegeneracy_check(const GroundState& gs, const Grid& grid);

struct WronskianResult {
    double variation = 0.0; // max - min of u phi' - v chi' along the integration
    double value = 0.0;     // the constant (alpha b phi(x0) v0 in exact arithmetic)
};

/// Integrates the linearization of the first-order system along the
/// ground-state orbit (closed-form coefficients) across the grid's span with
/// the given initial data (u0, v0) at the center, RK4 with `substeps`
/// sub-steps per grid cell, and reports the variation of u phi' - v chi'.
WronskianResult wronskian_constancy(const GroundState& gs, const Grid& grid, double u0, double v0,
                                    int substeps = 32);

} // namespace qlnls

#endif

#ifndef QLNLS_PARAMS_HPP
#define QLNLS_PARAMS_HPP

namespace qlnls {

// Default singularity guard: fields must satisfy max|phi|^{2 alpha} <= 1 - delta.
inline constexpr double kDefaultGuard = 1e-8;

/// Model parameters (a, b, alpha) of the quasilinear Schrodinger equation:
/// a > 0 the nonlinear coupling, b > 0 the solitary-wave frequency,
/// alpha >= 1 the integer nonlinearity exponent.
struct ModelParams {
    double a = 0.0;
    double b = 0.0;
    int alpha = 1;

    // True when a decaying positive stationary profile exists.
    bool has_ground_state() const { return a > (alpha + 1) * b; }
};

// Validates a > 0, b > 0, alpha >= 1; throws ValidationError otherwise.
ModelParams make_params(double a, double b, int alpha);

// Throws ValidationError with the nonexistence message unless a > (alpha+1) b.
void require_ground_state_regime(const ModelParams& p);

// x^n for small non-negative integer n.
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace qlnls

#endif

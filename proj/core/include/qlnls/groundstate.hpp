#ifndef QLNLS_GROUNDSTATE_HPP
#define QLNLS_GROUNDSTATE_HPP

#include "qlnls/params.hpp"

namespace qlnls {

/// The explicit stationary profile
///
///   phi(x) = [ (A+1)/2 + (A-1)/2 * cosh(2 alpha sqrt(b) (x - x0)) ]^{-1/(2 alpha)},
///   A = a / ((alpha+1) b),
///
/// which exists iff a > (alpha+1) b. All derivatives and the residuals of the
/// stationary equation, its first integral, and the arcsin-transformed form
/// are available in closed form; 1 - phi^{2 alpha} is computed without
/// subtractive cancellation (it equals (A-1)(1+cosh)/(2B)), which matters for
/// b close to a/(alpha+1) where the peak approaches 1.
class GroundState {
  public:
    // Throws ValidationError unless a > (alpha+1) b (and params are valid).
    explicit GroundState(ModelParams params, double center = 0.0);

    const ModelParams& params() const { return params_; }
    double center() const { return center_; }

    // peak value phi(center) = ((alpha+1) b / a)^{1/(2 alpha)}
    double max_amplitude() const;
    // C in phi(x) ~ C e^{-sqrt(b) |x - center|}; equals [(A-1)/4]^{-1/(2 alpha)}
    double decay_constant() const;

    double eval(double x) const;
    double deriv(double x) const;
    double second_deriv(double x) const;

    double one_minus_pow2a(double x) const; // 1 - phi(x)^{2 alpha}, stable
    double chi(double x) const;             // phi' / (1 - phi^{2 alpha}) = -sqrt(b) phi tanh(alpha sqrt(b) (x-x0))
    double chi_prime(double x) const;       // alpha chi^2 phi^{2a-1} - a phi^{2a+1} + b phi

    // Left-hand side of the stationary equation evaluated with the closed forms.
    double stationary_residual(double x) const;
    // Left-hand side of the first integral -phi'^2/(1-phi^{2a}) - a/(a+1) phi^{2a+2} + b phi^2.
    double first_integral_residual(double x) const;
    // Residual of the arcsin-transformed equation, u = arcsin(phi^alpha).
    double arcsin_transform_residual(double x) const;

    // u = arcsin(phi^alpha) and its first two derivatives (closed form).
    struct ArcsinPoint {
        double u, du, d2u;
    };
    ArcsinPoint arcsin_point(double x) const;

  private:
    struct Local {
        double phi, dphi, d2phi, one_minus, chi;
    };
    Local local(double x) const;

    ModelParams params_;
    double center_;
    double ratio_;   // A
    double kappa_;   // 2 alpha sqrt(b)
    double beta_;    // 1/(2 alpha)
    double c1_, c2_; // (A+1)/2, (A-1)/2
};

} // namespace qlnls

#endif

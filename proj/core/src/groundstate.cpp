#include "qlnls/groundstate.hpp"

#include <cmath>

#include "qlnls/errors.hpp"

namespace qlnls {

GroundState::GroundState(ModelParams params, double center) : params_(params), center_(center) {
    params_ = make_params(params.a, params.b, params.alpha);
    require_ground_state_regime(params_);
    ratio_ = params_.a / ((params_.alpha + 1) * params_.b);
    kappa_ = 2.0 * params_.alpha * std::sqrt(params_.b);
    beta_ = 1.0 / (2.0 * params_.alpha);
    c1_ = 0.5 * (ratio_ + 1.0);
    c2_ = 0.5 * (ratio_ - 1.0);
}

double GroundState::max_amplitude() const {
    return std::pow(1.0 / ratio_, beta_);
}

double GroundState::decay_constant() const {
    return std::pow(0.5 * c2_, -beta_);
}

GroundState::Local GroundState::local(double x) const {
    const double xi = x - center_;
    const double t = kappa_ * std::abs(xi); // cosh is even: exact symmetry about the center
    const double sgn = xi < 0.0 ? -1.0 : (xi > 0.0 ? 1.0 : 0.0);
    Local l{};
    if (t > 680.0) {
        // cosh overflows; B ~ (c2/2) e^t, phi ~ decay_constant * e^{-sqrt(b)|xi|}
        const double logB = std::log(0.5 * c2_) + t;
        l.phi = std::exp(-beta_ * logB);
        l.one_minus = 1.0;
        l.chi = -std::sqrt(params_.b) * l.phi * sgn;
        l.dphi = l.chi;
        l.d2phi = params_.b * l.phi;
        return l;
    }
    const double ch = std::cosh(t);
    const double sh = std::sinh(t) * sgn;
    const double B = c1_ + c2_ * ch;
    const double Bp = c2_ * kappa_ * sh;
    const double Bpp = c2_ * kappa_ * kappa_ * ch;
    const double Bmb = std::pow(B, -beta_); // phi
    l.phi = Bmb;
    l.dphi = -beta_ * Bmb / B * Bp;
    l.d2phi = beta_ * (beta_ + 1.0) * Bmb / (B * B) * Bp * Bp - beta_ * Bmb / B * Bpp;
    l.one_minus = c2_ * (1.0 + ch) / B; // (B-1)/B without cancellation
    l.chi = -std::sqrt(params_.b) * l.phi * std::tanh(0.5 * t) * sgn;
    return l;
}

double GroundState::eval(double x) const { return local(x).phi; }
double GroundState::deriv(double x) const { return local(x).dphi; }
double GroundState::second_deriv(double x) const { return local(x).d2phi; }
double GroundState::one_minus_pow2a(double x) const { return local(x).one_minus; }
double GroundState::chi(double x) const { return local(x).chi; }

double GroundState::chi_prime(double x) const {
    const Local l = local(x);
    const int al = params_.alpha;
    return al * l.chi * l.chi * ipow(l.phi, 2 * al - 1) - params_.a * ipow(l.phi, 2 * al + 1) +
           params_.b * l.phi;
}

double GroundState::stationary_residual(double x) const {
    const Local l = local(x);
    const int al = params_.alpha;
    const double d = l.one_minus;
    const double dp2 = l.dphi * l.dphi;
    const double p2am1 = ipow(l.phi, 2 * al - 1);
    // -(phi'/(1-phi^2a))' = -phi''/(1-phi^2a) - 2a phi^{2a-1} phi'^2 / (1-phi^2a)^2
    return -l.d2phi / d - 2.0 * al * p2am1 * dp2 / (d * d) + al * dp2 / (d * d) * p2am1 -
           params_.a * p2am1 * l.phi * l.phi + params_.b * l.phi;
}

double GroundState::first_integral_residual(double x) const {
    const Local l = local(x);
    const int al = params_.alpha;
    const double p2 = l.phi * l.phi;
    return -l.dphi * l.dphi / l.one_minus - params_.a / (al + 1) * ipow(l.phi, 2 * al) * p2 +
           params_.b * p2;
}

GroundState::ArcsinPoint GroundState::arcsin_point(double x) const {
    const Local l = local(x);
    const int al = params_.alpha;
    const double s = ipow(l.phi, al);
    const double sp = al * ipow(l.phi, al - 1) * l.dphi;
    const double spp = al * (al - 1) * ipow(l.phi, al - 2) * l.dphi * l.dphi + al * ipow(l.phi, al - 1) * l.d2phi;
    const double c = std::sqrt(l.one_minus); // cos u = sqrt(1 - phi^{2 alpha})
    ArcsinPoint r{};
    r.u = std::asin(s);
    r.du = sp / c;
    r.d2u = spp / c + s * sp * sp / (c * c * c);
    return r;
}

double GroundState::arcsin_transform_residual(double x) const {
    const Local l = local(x);
    const int al = params_.alpha;
    const double s = ipow(l.phi, al);
    const double c = std::sqrt(l.one_minus);
    const ArcsinPoint u = arcsin_point(x);
    double res = -u.d2u - params_.a * al * s * s * s * c + params_.b * al * s * c;
    if (al > 1) {
        // -(1/alpha - 1)(u')^2 cot u, written so phi -> 0 stays finite:
        // (u')^2 cot u = alpha^2 phi^{alpha-2} phi'^2 / cos u... times (alpha-1)/alpha
        res += al * (al - 1) * ipow(l.phi, al - 2) * l.dphi * l.dphi / c;
    }
    return res;
}

} // namespace qlnls

#ifndef QLNLS_FIT_HPP
#define QLNLS_FIT_HPP

#include <optional>

#include "qlnls/field.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

struct FitResult {
    double b_fit = 0.0;
    double residual_l2 = 0.0; // sqrt of the windowed squared-residual objective
    double center_fit = 0.0;  // subgrid center estimate from recentering
    int iterations = 0;
    bool converged = false;
};

struct RecenterResult {
    ComplexField field;  // circularly shifted so the peak sample sits at x = 0
    double center = 0.0; // subgrid estimate of the original peak location
    int shift_cells = 0;
};

/// Circularly shifts the field so the sample of largest modulus lands at
/// x = 0 and estimates the true peak location by a 3-point quadratic fit of
/// |phi| around the argmax. Throws ValidationError when the two largest
/// samples are equal to within 1e-14 and not adjacent (degenerate maximum;
/// adjacent ties are the well-posed half-cell straddle).
RecenterResult recenter(const ComplexField& field);

// Windowed L2 distance between |field| and the ground-state profile with
// frequency b: sqrt( sum_{|x_j|<window} (|phi_j| - phi_b(x_j))^2 w_j ),
// trapezoidal weights. +infinity outside the feasible region a > (alpha+1)b.
double fit_residual_l2(const ComplexField& recentered, const ModelParams& params, double b,
                       double window);

/// Nelder-Mead over b of the squared residual, initial simplex {b0, 1.05 b0},
/// terminating when the simplex width < 1e-10 and the objective spread <
/// 1e-14, capped at 200 iterations (converged=false then, best iterate still
/// returned). When b0 is not given it is estimated from the peak amplitude,
/// b = a max|phi|^{2 alpha} / (alpha+1). params.b is only used as a fallback
/// start; the fit varies b alone.
FitResult fit_ground_state(const ComplexField& recentered, const ModelParams& params,
                           double window, std::optional<double> b0 = std::nullopt);

} // namespace qlnls

#endif

#ifndef QLNLS_SPECTRAL_HPP
#define QLNLS_SPECTRAL_HPP

#include "qlnls/fft.hpp"
#include "qlnls/field.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

SpectralField forward(const ComplexField& field);
ComplexField inverse(const SpectralField& spec);

// Inverse transform of (i k) * coeffs with the Nyquist mode zeroed.
ComplexField spectral_derivative(const ComplexField& field);

/// d(phi)/dt: nonlinear terms pointwise in physical space, the outer d/dx in
/// Fourier space. With the equation written i d(phi)/dt = R[phi], this
/// returns -i R[phi]; on the exact ground state it equals +i b phi.
ComplexField rhs(const ComplexField& field, const ModelParams& params,
                 double delta_guard = kDefaultGuard);

/// Same right-hand side assembled through the first-order system route:
/// chi = -i phi_x / (1 - |phi|^{2 alpha}), then
/// i d(phi)/dt = -i chi_x + alpha |phi|^{2 alpha - 2} |chi|^2 phi - a |phi|^{2 alpha} phi.
/// Cross-validates rhs() to spectral accuracy.
ComplexField rhs_via_dirac_system(const ComplexField& field, const ModelParams& params,
                                  double delta_guard = kDefaultGuard);

// max |coefficient| over the top octave |m| >= N/4 of forward(field).
double fourier_tail(const ComplexField& field);

namespace detail {

// Preallocated buffers for the hot path.
struct RhsScratch {
    cvector u, ux, g, nl;
    void resize(int n) {
        u.resize(n);
        ux.resize(n);
        g.resize(n);
        nl.resize(n);
    }
};

/// Fourier-space right-hand side: in/out are coefficient vectors. When
/// mask is non-null, modes with mask[j] == 0 are zeroed in the output
/// (2/3-rule dealiasing used by the time stepper).
void rhs_hat(const complexd* in_hat, complexd* out_hat, const Grid& grid, const Fft& fft,
             const ModelParams& params, double delta_guard, const unsigned char* mask,
             RhsScratch& scratch, int stage);

} // namespace detail

} // namespace qlnls

#endif

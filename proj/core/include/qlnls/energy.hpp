#ifndef QLNLS_ENERGY_HPP
#define QLNLS_ENERGY_HPP

#include "qlnls/field.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

/// Conserved energy E[phi] = int |phi_x|^2/(1-|phi|^{2 alpha}) - a/(alpha+1) |phi|^{2 alpha + 2},
/// quadrature by the trapezoidal rule on the periodic grid (spectrally accurate
/// for smooth decayed integrands), phi_x spectral.
/// Throws SingularityError if the guard max|phi|^{2 alpha} <= 1 - delta_guard fails.
double energy(const ComplexField& field, const ModelParams& params,
              double delta_guard = kDefaultGuard);

// int |phi|^2 over the period (trapezoidal rule).
double mass(const ComplexField& field);

} // namespace qlnls

#endif

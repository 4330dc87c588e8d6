#ifndef QLNLS_FIELD_HPP
#define QLNLS_FIELD_HPP

#include <memory>
#include <utility>

#include "qlnls/errors.hpp"
#include "qlnls/grid.hpp"

namespace qlnls {

/// A periodic grid sample of the evolving state phi(., t).
struct ComplexField {
    cvector values;
    std::shared_ptr<const Grid> grid;

    ComplexField() = default;
    ComplexField(cvector v, std::shared_ptr<const Grid> g) : values(std::move(v)), grid(std::move(g)) {
        if (!grid || static_cast<int>(values.size()) != grid->n)
            throw ValidationError("ComplexField: sample count does not match grid size");
    }
    int size() const { return grid ? grid->n : 0; }
};

/// Fourier coefficients of a field, forward-normalized (1/N on the forward
/// transform), standard DFT mode layout (see Grid).
struct SpectralField {
    cvector coeffs;
    std::shared_ptr<const Grid> grid;

    SpectralField() = default;
    SpectralField(cvector c, std::shared_ptr<const Grid> g) : coeffs(std::move(c)), grid(std::move(g)) {
        if (!grid || static_cast<int>(coeffs.size()) != grid->n)
            throw ValidationError("SpectralField: coefficient count does not match grid size");
    }
};

// max_j |values_j|
double max_abs(const ComplexField& f);

// Throws SingularityError unless max|phi|^{2 alpha} <= 1 - delta_guard.
void check_guard(const ComplexField& f, int alpha, double delta_guard, int stage = 0);

} // namespace qlnls

#endif

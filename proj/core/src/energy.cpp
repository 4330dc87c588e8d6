#include "qlnls/energy.hpp"

#include <cmath>

#include "qlnls/spectral.hpp"

namespace qlnls {

double energy(const ComplexField& field, const ModelParams& params, double delta_guard) {
    check_guard(field, params.alpha, delta_guard);
    const ComplexField ux = spectral_derivative(field);
    const int alpha = params.alpha;
    const double h = field.grid->spacing();
    double sum = 0.0;
    for (int j = 0; j < field.size(); ++j) {
        const double m2 = std::norm(field.values[j]);
        const double m2a = ipow(m2, alpha);
        sum += std::norm(ux.values[j]) / (1.0 - m2a) - params.a / (alpha + 1) * m2a * m2;
    }
    return h * sum;
}

double mass(const ComplexField& field) {
    const double h = field.grid->spacing();
    double sum = 0.0;
    for (const auto& v : field.values) sum += std::norm(v);
    return h * sum;
}

} // namespace qlnls

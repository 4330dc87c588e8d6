#include "qlnls/grid.hpp"

#include <cmath>

#include "qlnls/errors.hpp"

namespace qlnls {

namespace {
constexpr double kPi = 3.14159265358979323846;

void validate(int n, double scale) {
    if (n < 4 || (n & (n - 1)) != 0) throw ValidationError("grid: N must be a power of two >= 4");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw ValidationError("grid: scale L must be positive");
}

std::shared_ptr<Grid> base(int n, double scale) {
    auto g = std::make_shared<Grid>();
    g->n = n;
    g->scale = scale;
    g->nyquist_index = n / 2;
    g->ks.resize(n);
    for (int j = 0; j < n; ++j) {
        const int m = j < n / 2 ? j : j - n;
        g->ks[j] = m / scale;
    }
    return g;
}
} // namespace

std::shared_ptr<const Grid> make_grid(int n, double scale) {
    validate(n, scale);
    auto g = base(n, scale);
    g->xs.resize(n);
    for (int j = 0; j < n; ++j) g->xs[j] = scale * (-kPi + 2.0 * kPi * j / n);
    return g;
}

std::shared_ptr<const Grid> make_grid_with_samples(int n, double scale, std::vector<double> xs) {
    validate(n, scale);
    if (static_cast<int>(xs.size()) != n) throw ValidationError("grid: sample count does not match N");
    auto g = base(n, scale);
    const double tol = 1e-9 * scale;
    for (int j = 0; j < n; ++j) {
        const double ref = scale * (-kPi + 2.0 * kPi * j / n);
        if (std::abs(xs[j] - ref) > tol) throw ValidationError("grid: sample points are not the uniform periodic grid");
    }
    g->xs = std::move(xs);
    return g;
}

} // namespace qlnls

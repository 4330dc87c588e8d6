#include "qlnls/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qlnls/groundstate.hpp"

namespace qlnls {

RecenterResult recenter(const ComplexField& field) {
    if (!field.grid) throw ValidationError("recenter: field has no grid");
    const int n = field.size();
    const Grid& grid = *field.grid;

    std::vector<double> mod(n);
    for (int j = 0; j < n; ++j) mod[j] = std::abs(field.values[j]);

    int jmax = 0;
    for (int j = 1; j < n; ++j)
        if (mod[j] > mod[jmax]) jmax = j;

    // Ties within 1e-14 of the max: a single adjacent tie is the well-posed
    // half-cell straddle of an off-grid peak; anything else is degenerate.
    int ties = 0, second = -1;
    for (int j = 0; j < n; ++j) {
        if (j == jmax) continue;
        if (std::abs(mod[j] - mod[jmax]) <= 1e-14) {
            ++ties;
            second = j;
        }
    }
    if (ties > 1)
        throw ValidationError("recenter: degenerate maximum (multiple equal peak samples)");
    if (ties == 1) {
        const int gap = std::abs(jmax - second);
        if (gap != 1 && gap != n - 1)
            throw ValidationError("recenter: degenerate maximum (two equal non-adjacent peaks)");
    }

    const double ym = mod[(jmax + n - 1) % n];
    const double y0 = mod[jmax];
    const double yp = mod[(jmax + 1) % n];
    const double curv = ym - 2.0 * y0 + yp;
    const double delta = curv == 0.0 ? 0.0 : 0.5 * (ym - yp) / curv;

    const int shift = jmax - n / 2; // move the peak sample to x = 0
    cvector shifted(n);
    for (int j = 0; j < n; ++j) shifted[j] = field.values[(j + shift % n + n) % n];

    RecenterResult r{ComplexField{std::move(shifted), field.grid}, grid.xs[jmax] + delta * grid.spacing(),
                     shift};
    return r;
}

double fit_residual_l2(const ComplexField& recentered, const ModelParams& params, double b,
                       double window) {
    if (!(b > 0.0) || !(params.a > (params.alpha + 1) * b))
        return std::numeric_limits<double>::infinity();
    const GroundState gs(ModelParams{params.a, b, params.alpha});
    const Grid& grid = *recentered.grid;
    const double h = grid.spacing();
    double sum = 0.0;
    int first = -1, last = -1;
    for (int j = 0; j < grid.n; ++j) {
        if (std::abs(grid.xs[j]) >= window) continue;
        if (first < 0) first = j;
        last = j;
        const double d = std::abs(recentered.values[j]) - gs.eval(grid.xs[j]);
        sum += d * d;
    }
    if (first < 0) throw ValidationError("fit: window contains no grid points");
    // trapezoidal weights: half weight at the window-edge samples
    double fd = std::abs(recentered.values[first]) - gs.eval(grid.xs[first]);
    double ld = std::abs(recentered.values[last]) - gs.eval(grid.xs[last]);
    sum -= 0.5 * (fd * fd + ld * ld);
    return std::sqrt(std::max(0.0, sum * h));
}

namespace {

struct Simplex1d {
    double x0, x1, f0, f1; // kept ordered: f0 <= f1
    void order() {
        if (f1 < f0) {
            std::swap(x0, x1);
            std::swap(f0, f1);
        }
    }
};

} // namespace

FitResult fit_ground_state(const ComplexField& recentered, const ModelParams& params,
                           double window, std::optional<double> b0) {
    if (!(window > 0.0)) throw ValidationError("fit: window must be positive");
    double start = b0.value_or(0.0);
    if (!b0) {
        // peak-amplitude estimate: max phi = ((alpha+1) b / a)^{1/(2 alpha)}
        const double m = max_abs(recentered);
        start = params.a * ipow(m, 2 * params.alpha) / (params.alpha + 1);
        if (!(start > 0.0)) start = params.b;
    }
    const double bmax = params.a / (params.alpha + 1);
    start = std::clamp(start, 1e-6 * bmax, 0.999 * bmax);

    auto objective = [&](double b) {
        const double r = fit_residual_l2(recentered, params, b, window);
        return std::isfinite(r) ? r * r : std::numeric_limits<double>::infinity();
    };

    Simplex1d s{start, 1.05 * start, objective(start), objective(1.05 * start)};
    s.order();
    const int max_iter = 200;
    int it = 0;
    bool converged = false;
    for (; it < max_iter; ++it) {
        if (std::abs(s.x1 - s.x0) < 1e-10 && std::abs(s.f1 - s.f0) < 1e-14) {
            converged = true;
            break;
        }
        // 1-d Nelder-Mead: centroid is the best point
        const double xr = s.x0 + (s.x0 - s.x1); // reflection
        const double fr = objective(xr);
        if (fr < s.f0) {
            const double xe = s.x0 + 2.0 * (s.x0 - s.x1); // expansion
            const double fe = objective(xe);
            if (fe < fr) {
                s.x1 = xe;
                s.f1 = fe;
            } else {
                s.x1 = xr;
                s.f1 = fr;
            }
        } else {
            const double xc = s.x0 + 0.5 * (s.x1 - s.x0); // contraction toward best
            const double fc = objective(xc);
            if (fc < s.f1) {
                s.x1 = xc;
                s.f1 = fc;
            } else { // shrink
                s.x1 = s.x0 + 0.5 * (s.x1 - s.x0);
                s.f1 = objective(s.x1);
            }
        }
        s.order();
    }
    FitResult r;
    r.b_fit = s.x0;
    r.residual_l2 = std::sqrt(std::max(0.0, s.f0));
    r.iterations = it;
    r.converged = converged;
    return r;
}

} // namespace qlnls

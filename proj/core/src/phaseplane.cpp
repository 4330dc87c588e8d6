#include "qlnls/phaseplane.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

#include "qlnls/errors.hpp"
#include "qlnls/evolve.hpp"

namespace qlnls {

double hamiltonian(const PhasePoint& p, const ModelParams& params) {
    const int al = params.alpha;
    const double p2a = ipow(p.phi, 2 * al);
    return 0.5 * p.chi * p.chi * (1.0 - p2a) + params.a / (2.0 * (al + 1)) * p2a * p.phi * p.phi -
           0.5 * params.b * p.phi * p.phi;
}

CriticalPointReport critical_points(const ModelParams& params) {
    const ModelParams p = make_params(params.a, params.b, params.alpha);
    CriticalPointReport report;
    report.points.push_back({0.0, 0.0, CriticalKind::saddle});
    if (p.a > p.b) {
        report.regime = ParamRegime::a_gt_b;
        const double pc = std::pow(p.b / p.a, 1.0 / (2.0 * p.alpha));
        report.points.push_back({0.0, pc, CriticalKind::local_min});
        report.points.push_back({0.0, -pc, CriticalKind::local_min});
        const double cc = std::sqrt((p.a - p.b) / p.alpha);
        for (double c : {cc, -cc})
            for (double f : {1.0, -1.0}) report.points.push_back({c, f, CriticalKind::saddle});
    } else if (p.a == p.b) {
        report.regime = ParamRegime::a_eq_b;
        report.points.push_back({0.0, 1.0, CriticalKind::saddle});
        report.points.push_back({0.0, -1.0, CriticalKind::saddle});
    } else {
        report.regime = ParamRegime::a_lt_b;
        const double pc = std::pow(p.b / p.a, 1.0 / (2.0 * p.alpha));
        report.points.push_back({0.0, pc, CriticalKind::saddle});
        report.points.push_back({0.0, -pc, CriticalKind::saddle});
    }
    return report;
}

double zero_level_set(double phi, const ModelParams& params) {
    const double p2 = phi * phi;
    if (p2 >= 1.0) throw ValidationError("zero_level_set: requires phi^2 < 1");
    const double p2a = ipow(phi, 2 * params.alpha);
    return p2 * (params.b - params.a / (params.alpha + 1) * p2a) / (1.0 - p2a);
}

namespace {

struct Vec2ld {
    long double u = 0.0L;
    long double v = 0.0L;
    friend Vec2ld operator+(Vec2ld a, Vec2ld b) { return {a.u + b.u, a.v + b.v}; }
    friend Vec2ld operator*(long double s, Vec2ld a) { return {s * a.u, s * a.v}; }
};

long double ipowl(long double x, int n) {
    long double r = 1.0L;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

std::vector<OrbitSample> shoot_ground_state(const ModelParams& params, double x_span,
                                            long n_steps) {
    const ModelParams p = make_params(params.a, params.b, params.alpha);
    require_ground_state_regime(p);
    if (!(x_span > 0.0) || n_steps < 1) throw ValidationError("shoot: bad span or step count");

    const int al = p.alpha;
    const long double a = p.a, b = p.b;
    auto f = [&](const Vec2ld& y) -> Vec2ld {
        const long double chi = y.u, phi = y.v;
        return {al * chi * chi * ipowl(phi, 2 * al - 1) - a * ipowl(phi, 2 * al + 1) + b * phi,
                chi * (1.0L - ipowl(phi, 2 * al))};
    };

    const long double phi0 = powl((long double)((al + 1) * p.b / p.a), 1.0L / (2 * al));
    const long double h = (long double)x_span / n_steps;

    std::vector<OrbitSample> left, right;
    right.reserve(n_steps);
    left.reserve(n_steps);
    for (int dir : {+1, -1}) {
        Vec2ld y{0.0L, phi0};
        const long double hs = dir * h;
        for (long i = 1; i <= n_steps; ++i) {
            y = rk4_advance(y, hs, f);
            if (!(y.v > 0.0L && y.v < 1.0L))
                throw ValidationError("shoot: orbit left (0,1); step size too large");
            OrbitSample s{dir * (double)(i * h), {(double)y.u, (double)y.v}};
            (dir > 0 ? right : left).push_back(s);
        }
    }
    std::vector<OrbitSample> orbit;
    orbit.reserve(2 * n_steps + 1);
    for (auto it = left.rbegin(); it != left.rend(); ++it) orbit.push_back(*it);
    orbit.push_back({0.0, {0.0, (double)phi0}});
    for (const auto& s : right) orbit.push_back(s);
    return orbit;
}

namespace {

// q(x) of the Sturm-Liouville form L = -(p v')' + q v; derived by expanding
// the linearized operator with w = 2 alpha phi^{2a-1} chi p (the first-order
// coefficient), where -w' + w^2/p collapses the p^3 terms:
//   q = -alpha(2a-1) phi^{2a-2} chi^2 - 2 alpha p phi^{2a-1} chi' - a(2a+1) phi^{2a} + b.
double sl_q(const GroundState& gs, double x) {
    const ModelParams& mp = gs.params();
    const int al = mp.alpha;
    const double phi = gs.eval(x);
    const double chi = gs.chi(x);
    const double chip = gs.chi_prime(x);
    const double p = 1.0 / gs.one_minus_pow2a(x);
    return -al * (2 * al - 1) * ipow(phi, 2 * al - 2) * chi * chi -
           2.0 * al * p * ipow(phi, 2 * al - 1) * chip - mp.a * (2 * al + 1) * ipow(phi, 2 * al) +
           mp.b;
}

double sl_p(const GroundState& gs, double x) { return 1.0 / gs.one_minus_pow2a(x); }

} // namespace

std::vector<double> linearized_apply(const std::vector<double>& v, const GroundState& gs,
                                     const Grid& grid) {
    const int n = grid.n;
    if (static_cast<int>(v.size()) != n)
        throw ValidationError("linearized_apply: sample count does not match grid");
    const double h = grid.spacing();
    std::vector<double> flux(n + 1); // flux[j] = p_{j-1/2} (v_j - v_{j-1})/h, Dirichlet ends
    for (int j = 0; j <= n; ++j) {
        const double xm = (j == 0 ? grid.xs[0] : grid.xs[j - 1]) + (j == 0 ? -0.5 : 0.5) * h;
        const double vl = j == 0 ? 0.0 : v[j - 1];
        const double vr = j == n ? 0.0 : v[j];
        flux[j] = sl_p(gs, xm) * (vr - vl) / h;
    }
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = -(flux[j + 1] - flux[j]) / h + sl_q(gs, grid.xs[j]) * v[j];
    return out;
}

namespace {

// Solves (T - shift I) x = rhs for symmetric tridiagonal T, Gaussian
// elimination with partial pivoting (fill-in on a second superdiagonal).
void shifted_tridiag_solve(const std::vector<double>& diag, const std::vector<double>& off,
                           double shift, std::vector<double>& x) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> dl(n, 0.0), d(n), du(n, 0.0), du2(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = diag[i] - shift;
    for (int i = 0; i + 1 < n; ++i) {
        dl[i] = off[i];
        du[i] = off[i];
    }
    // forward elimination
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i]) > std::abs(d[i])) {
            std::swap(d[i], dl[i]);
            std::swap(du[i], d[i + 1]);
            if (i + 2 < n) du2[i] = du[i + 1], du[i + 1] = 0.0;
            std::swap(x[i], x[i + 1]);
        }
        if (d[i] == 0.0) d[i] = 1e-300;
        const double m = dl[i] / d[i];
        d[i + 1] -= m * du[i];
        if (i + 2 < n) du[i + 1] -= m * du2[i];
        x[i + 1] -= m * x[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    // back substitution
    x[n - 1] /= d[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i) x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
}

} // namespace

NondegeneracyReport nondegeneracy_check(const GroundState& gs, const Grid& grid) {
    const int n = grid.n;
    const double h = grid.spacing();
    const double edge = std::max(gs.eval(grid.xs.front()), gs.eval(grid.xs.back()));
    if (!(edge < 1e-6))
        throw ValidationError("nondegeneracy_check: truncated domain too small (phi(edge) >= 1e-6)");

    std::vector<double> diag(n), off(n - 1);
    std::vector<double> pm(n + 1);
    for (int j = 0; j <= n; ++j)
        pm[j] = sl_p(gs, (j == 0 ? grid.xs[0] : grid.xs[j - 1]) + (j == 0 ? -0.5 : 0.5) * h);
    for (int j = 0; j < n; ++j) diag[j] = (pm[j] + pm[j + 1]) / (h * h) + sl_q(gs, grid.xs[j]);
    for (int j = 0; j + 1 < n; ++j) off[j] = -pm[j + 1] / (h * h);

    Eigen::Map<const Eigen::VectorXd> dmap(diag.data(), n), omap(off.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(dmap, omap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("nondegeneracy_check: tridiagonal eigensolver failed");
    const Eigen::VectorXd& evals = solver.eigenvalues();

    NondegeneracyReport report;
    report.tol_zero = 10.0 * h * h;
    int i0 = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(evals[i]) < std::abs(evals[i0])) i0 = i;
    report.eigenvalue_near_zero = evals[i0];
    for (int i = 0; i < n; ++i)
        if (std::abs(evals[i]) < report.tol_zero) ++report.zero_multiplicity;

    // eigenvector by inverse iteration at the computed eigenvalue
    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(n);
    for (auto& xi : x) xi = gauss(rng);
    for (int it = 0; it < 4; ++it) {
        shifted_tridiag_solve(diag, off, report.eigenvalue_near_zero, x);
        double norm = 0.0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("nondegeneracy_check: inverse iteration failed");
        for (auto& xi : x) xi /= norm;
    }
    double dot = 0.0, nv = 0.0;
    for (int j = 0; j < n; ++j) {
        const double dj = gs.deriv(grid.xs[j]);
        dot += x[j] * dj;
        nv += dj * dj;
    }
    report.eigvec_alignment = std::abs(dot) / std::sqrt(nv);
    return report;
}

WronskianResult wronskian_constancy(const GroundState& gs, const Grid& grid, double u0, double v0,
                                    int substeps) {
    if (substeps < 1) throw ValidationError("wronskian: substeps must be positive");
    const ModelParams& mp = gs.params();
    const int al = mp.alpha;

    // linearization of the first-order system along the orbit
    auto deriv = [&](double x, const Vec2ld& y) -> Vec2ld {
        const double phi = gs.eval(x);
        const double chi = gs.chi(x);
        const double p2a = ipow(phi, 2 * al);
        const double c1 = 2.0 * al * chi * ipow(phi, 2 * al - 1);
        const double c2 = al * (2 * al - 1) * chi * chi * ipow(phi, 2 * al - 2) -
                          mp.a * (2 * al + 1) * p2a + mp.b;
        return {(long double)(c1 * (double)y.u + c2 * (double)y.v),
                (long double)((1.0 - p2a) * (double)y.u - c1 * (double)y.v)};
    };
    auto wronskian = [&](double x, const Vec2ld& y) {
        return (double)y.u * gs.deriv(x) - (double)y.v * gs.chi_prime(x);
    };

    const double x0 = gs.center();
    WronskianResult res;
    res.value = wronskian(x0, {u0, v0});
    double wmin = res.value, wmax = res.value;

    for (double endpoint : {grid.xs.front(), grid.xs.back()}) {
        const long nsub = std::lround(std::abs(endpoint - x0) / grid.spacing()) * substeps;
        if (nsub == 0) continue;
        const long double h = (long double)(endpoint - x0) / nsub;
        Vec2ld y{u0, v0};
        for (long i = 1; i <= nsub; ++i) {
            const double xi = x0 + (double)(h * (i - 1));
            // classical RK4 with x-dependent coefficients
            const Vec2ld k1 = deriv(xi, y);
            const Vec2ld k2 = deriv(xi + (double)h * 0.5, y + (h / 2.0L) * k1);
            const Vec2ld k3 = deriv(xi + (double)h * 0.5, y + (h / 2.0L) * k2);
            const Vec2ld k4 = deriv(xi + (double)h, y + h * k3);
            y = y + (h / 6.0L) * (k1 + 2.0L * k2 + 2.0L * k3 + k4);
            const double w = wronskian(x0 + (double)(h * i), y);
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
    }
    res.variation = wmax - wmin;
    return res;
}

} // namespace qlnls

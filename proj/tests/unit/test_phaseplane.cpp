#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "qlnls/errors.hpp"
#include "qlnls/phaseplane.hpp"

using namespace qlnls;

namespace {

// 9-point central difference: exact for polynomials of degree <= 8, which
// covers H in both variables for alpha <= 3.
double fd_partial(const std::function<double(double, double)>& f, double x, double y, bool wrt_x) {
    const double h = 0.05;
    static const double w[4] = {672.0, -168.0, 32.0, -3.0};
    double acc = 0.0;
    for (int i = 1; i <= 4; ++i) {
        const double d = i * h;
        acc += w[i - 1] * ((wrt_x ? f(x + d, y) : f(x, y + d)) - (wrt_x ? f(x - d, y) : f(x, y - d)));
    }
    return acc / (840.0 * h);
}

double grad_norm_fd(const ModelParams& p, double chi, double phi) {
    auto H = [&](double c, double f) { return hamiltonian(PhasePoint{c, f}, p); };
    const double gx = fd_partial(H, chi, phi, true);
    const double gy = fd_partial(H, chi, phi, false);
    return std::hypot(gx, gy);
}

} // namespace

TEST_SUITE_BEGIN("phaseplane");

TEST_CASE("hamiltonian values") {
    CHECK(hamiltonian({0.0, 0.0}, ModelParams{9.0, 4.0, 1}) == 0.0);
    // H(0, (b/a)^{1/2}) = (a/4)(b/a)^2 - (b/2)(b/a) = -4/9 for a=9, b=4
    CHECK(hamiltonian({0.0, 2.0 / 3.0}, ModelParams{9.0, 4.0, 1}) ==
          doctest::Approx(-4.0 / 9.0).epsilon(1e-14));

    // H vanishes identically along the ground-state orbit (closed form)
    for (const auto& [alpha, b] : std::vector<std::pair<int, double>>{{1, 4.4}, {2, 2.9}, {3, 2.1}}) {
        GroundState gs(ModelParams{9.0, b, alpha});
        for (double x = -6.0; x <= 6.0; x += 0.37)
            CHECK(std::abs(hamiltonian({gs.chi(x), gs.eval(x)}, gs.params())) < 1e-10);
    }
}

TEST_CASE("critical points per regime with a gradient oracle") {
    // a > b: 7 points, minima at (0, +-(b/a)^{1/2 alpha})
    auto rep = critical_points(ModelParams{9.0, 4.0, 1});
    CHECK(rep.regime == ParamRegime::a_gt_b);
    CHECK(rep.points.size() == 7);
    int minima = 0;
    for (const auto& p : rep.points) {
        if (p.kind == CriticalKind::local_min) {
            ++minima;
            CHECK(std::abs(p.phi) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
            CHECK(p.chi == 0.0);
        }
        CHECK(grad_norm_fd(ModelParams{9.0, 4.0, 1}, p.chi, p.phi) < 1e-12);
    }
    CHECK(minima == 2);

    // a = b: exactly {(0,0), (0,1), (0,-1)}
    auto rep_eq = critical_points(ModelParams{1.0, 1.0, 1});
    CHECK(rep_eq.regime == ParamRegime::a_eq_b);
    REQUIRE(rep_eq.points.size() == 3);
    for (const auto& p : rep_eq.points) {
        CHECK(p.chi == 0.0);
        CHECK((p.phi == 0.0 || std::abs(p.phi) == 1.0));
        CHECK(grad_norm_fd(ModelParams{1.0, 1.0, 1}, p.chi, p.phi) < 1e-12);
    }

    // a < b: 3 points, all saddles
    auto rep_lt = critical_points(ModelParams{2.0, 3.0, 1});
    CHECK(rep_lt.regime == ParamRegime::a_lt_b);
    CHECK(rep_lt.points.size() == 3);
    for (const auto& p : rep_lt.points) {
        CHECK(p.kind == CriticalKind::saddle);
        CHECK(grad_norm_fd(ModelParams{2.0, 3.0, 1}, p.chi, p.phi) < 1e-12);
    }

    // higher alpha
    for (const auto& p : critical_points(ModelParams{9.0, 2.9, 2}).points)
        CHECK(grad_norm_fd(ModelParams{9.0, 2.9, 2}, p.chi, p.phi) < 1e-12);
}

TEST_CASE("zero level set") {
    const ModelParams p{9.0, 4.4, 1};
    CHECK(zero_level_set(0.0, p) == 0.0);
    // turning point: chi^2 = 0 at phi = ((alpha+1) b / a)^{1/(2 alpha)}
    const double phi0 = std::sqrt(8.8 / 9.0);
    CHECK(std::abs(zero_level_set(phi0, p)) < 1e-13);
    // factorized case a = (alpha+1) b: chi^2 = b phi^2 for all phi^2 < 1
    const ModelParams pf{8.8, 4.4, 1};
    for (double phi = -0.95; phi <= 0.95; phi += 0.1)
        CHECK(zero_level_set(phi, pf) == doctest::Approx(4.4 * phi * phi).epsilon(1e-12));
    // domain error
    CHECK_THROWS_AS(zero_level_set(1.0, p), ValidationError);

    // bound chi^2 < a/(alpha+1) in the existence regime
    for (double phi = -0.999; phi <= 0.999; phi += 0.007) {
        const double c2 = zero_level_set(phi, p);
        if (c2 >= 0.0) CHECK(c2 < 9.0 / 2.0);
    }
    // nonexistence regime: the numerator has no interior zero in (0,1)
    const ModelParams pn{2.0, 1.5, 1};
    for (double phi = 0.01; phi < 1.0; phi += 0.01)
        CHECK(pn.b - pn.a / (pn.alpha + 1) * phi * phi > 0.0);
}

TEST_CASE("shooting reconstructs the closed form") {
    const ModelParams p{9.0, 4.4, 1};
    GroundState gs(p);
    const auto orbit = shoot_ground_state(p, 10.0, 100000);
    REQUIRE(orbit.size() == 200001);

    double worst_phi = 0.0, worst_H = 0.0;
    for (std::size_t i = 0; i < orbit.size(); i += 37) {
        const auto& s = orbit[i];
        worst_phi = std::max(worst_phi, std::abs(s.p.phi - gs.eval(s.x)));
        worst_H = std::max(worst_H, std::abs(hamiltonian(s.p, p)));
    }
    CHECK(worst_phi < 1e-8);
    CHECK(worst_H < 1e-10);

    // chi(0) = 0 and chi'(0) = -alpha b phi0 < 0 (slope from the first samples)
    const auto& mid = orbit[orbit.size() / 2];
    CHECK(mid.x == 0.0);
    CHECK(mid.p.chi == 0.0);
    const auto& nxt = orbit[orbit.size() / 2 + 1];
    const double slope = (nxt.p.chi - mid.p.chi) / (nxt.x - mid.x);
    CHECK(slope == doctest::Approx(-1.0 * 4.4 * gs.max_amplitude()).epsilon(1e-3));

    // orbit symmetry phi(-x) = phi(x), chi(-x) = -chi(x)
    const std::size_t m = orbit.size() / 2;
    for (std::size_t k = 0; k < m; k += 101) {
        CHECK(orbit[m - k].p.phi == doctest::Approx(orbit[m + k].p.phi).epsilon(1e-9));
        CHECK(std::abs(orbit[m - k].p.chi + orbit[m + k].p.chi) < 1e-9);
    }

    CHECK_THROWS_AS(shoot_ground_state(ModelParams{9.0, 4.5, 1}, 10.0, 1000), ValidationError);
}

TEST_CASE("linearized operator: kernel element, self-adjointness, second-order convergence") {
    const double pi = 3.14159265358979323846;
    const ModelParams p{9.0, 4.4, 1};
    GroundState gs(p);

    // phi' is in the kernel: needs a fine grid for the 1e-6 relative bound
    {
        auto grid = make_grid(1 << 18, 12.0 / pi);
        std::vector<double> v(grid->n);
        double vmax = 0.0;
        for (int j = 0; j < grid->n; ++j) {
            v[j] = gs.deriv(grid->xs[j]);
            vmax = std::max(vmax, std::abs(v[j]));
        }
        const auto Lv = linearized_apply(v, gs, *grid);
        double worst = 0.0;
        for (double w : Lv) worst = std::max(worst, std::abs(w));
        CHECK(worst < 1e-6 * vmax);
    }

    // v = 0 -> 0
    {
        auto grid = make_grid(1 << 10, 12.0 / pi);
        const auto Lv = linearized_apply(std::vector<double>(grid->n, 0.0), gs, *grid);
        for (double w : Lv) CHECK(w == 0.0);
    }

    // <Lu, v> = <u, Lv> for random decaying u, v
    {
        auto grid = make_grid(1 << 11, 12.0 / pi);
        std::mt19937 rng(7);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> u(grid->n), v(grid->n);
        for (int j = 0; j < grid->n; ++j) {
            const double window = std::exp(-0.1 * grid->xs[j] * grid->xs[j]);
            u[j] = gauss(rng) * window;
            v[j] = gauss(rng) * window;
        }
        const auto Lu = linearized_apply(u, gs, *grid);
        const auto Lv = linearized_apply(v, gs, *grid);
        double luv = 0.0, ulv = 0.0, scale = 0.0;
        for (int j = 0; j < grid->n; ++j) {
            luv += Lu[j] * v[j];
            ulv += u[j] * Lv[j];
            scale += std::abs(Lu[j] * v[j]);
        }
        CHECK(std::abs(luv - ulv) < 1e-8 * scale);
    }

    // ||L phi'|| converges to zero at second order under mesh refinement
    {
        double prev = 0.0;
        std::vector<double> norms;
        for (int pow2 : {12, 13, 14}) {
            auto grid = make_grid(1 << pow2, 12.0 / pi);
            std::vector<double> v(grid->n);
            for (int j = 0; j < grid->n; ++j) v[j] = gs.deriv(grid->xs[j]);
            const auto Lv = linearized_apply(v, gs, *grid);
            double worst = 0.0;
            for (double w : Lv) worst = std::max(worst, std::abs(w));
            norms.push_back(worst);
            prev = worst;
        }
        (void)prev;
        CHECK(norms[0] / norms[1] == doctest::Approx(4.0).epsilon(0.15));
        CHECK(norms[1] / norms[2] == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("nondegeneracy: single near-zero eigenvalue aligned with phi'") {
    const double pi = 3.14159265358979323846;
    for (const auto& [alpha, b] : std::vector<std::pair<int, double>>{{1, 4.4}, {2, 2.9}}) {
        GroundState gs(ModelParams{9.0, b, alpha});
        auto grid = make_grid(2048, 12.0 / pi);
        const auto rep = nondegeneracy_check(gs, *grid);
        CHECK(rep.zero_multiplicity == 1);
        CHECK(rep.eigvec_alignment > 0.999);
        CHECK(std::abs(rep.eigenvalue_near_zero) < rep.tol_zero);
    }

    // the near-zero eigenvalue shrinks at second order under refinement
    GroundState gs(ModelParams{9.0, 4.4, 1});
    auto g1 = make_grid(2048, 12.0 / pi);
    auto g2 = make_grid(4096, 12.0 / pi);
    const auto r1 = nondegeneracy_check(gs, *g1);
    const auto r2 = nondegeneracy_check(gs, *g2);
    CHECK(std::abs(r1.eigenvalue_near_zero / r2.eigenvalue_near_zero) ==
          doctest::Approx(4.0).epsilon(0.2));

    // domain too small is rejected
    auto tiny = make_grid(256, 2.0 / pi);
    CHECK_THROWS_AS(nondegeneracy_check(gs, *tiny), ValidationError);
}

TEST_CASE("wronskian constancy along the linearized flow") {
    const double pi = 3.14159265358979323846;
    GroundState gs(ModelParams{9.0, 4.4, 1});
    auto grid = make_grid(2048, 12.0 / pi);

    // derivative orbit: (u0, v0) = (chi'(0), 0) gives the constant 0
    const auto r0 = wronskian_constancy(gs, *grid, gs.chi_prime(0.0), 0.0);
    CHECK(r0.value == 0.0);
    CHECK(r0.variation < 1e-8);

    // v0 != 0 gives the constant alpha b phi(0) v0
    const double v0 = 0.7;
    const auto r1 = wronskian_constancy(gs, *grid, 0.0, v0);
    CHECK(r1.value == doctest::Approx(1.0 * 4.4 * gs.max_amplitude() * v0).epsilon(1e-12));
    CHECK(r1.variation < 1e-8);

    // zero data stays identically zero
    const auto rz = wronskian_constancy(gs, *grid, 0.0, 0.0);
    CHECK(rz.value == 0.0);
    CHECK(rz.variation == 0.0);
}

TEST_SUITE_END();

#include <doctest.h>

#include <cmath>
#include <random>

#include "qlnls/errors.hpp"
#include "qlnls/groundstate.hpp"
#include "qlnls/spectral.hpp"

using namespace qlnls;

namespace {

ComplexField random_field(std::shared_ptr<const Grid> grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    cvector v(grid->n);
    for (auto& z : v) z = complexd(gauss(rng), gauss(rng));
    return ComplexField{std::move(v), std::move(grid)};
}

ComplexField sample_gs(const GroundState& gs, std::shared_ptr<const Grid> grid, double scale = 1.0) {
    cvector v(grid->n);
    for (int j = 0; j < grid->n; ++j) v[j] = scale * gs.eval(grid->xs[j]);
    return ComplexField{std::move(v), std::move(grid)};
}

double max_diff(const ComplexField& a, const ComplexField& b) {
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a.values[j] - b.values[j]));
    return m;
}

} // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("forward: DC mode, pure mode, round trip across sizes") {
    for (int p = 8; p <= 13; ++p) {
        auto grid = make_grid(1 << p, 3.0);
        // constant field -> single coefficient at k = 0
        cvector c(grid->n, complexd(0.7, -0.2));
        auto spec = forward(ComplexField{c, grid});
        CHECK(std::abs(spec.coeffs[0] - complexd(0.7, -0.2)) < 1e-14);
        for (int j = 1; j < grid->n; ++j) CHECK(std::abs(spec.coeffs[j]) < 1e-14);

        // pure mode e^{i m x / L} -> single nonzero coefficient at index m
        const int m = 5;
        cvector v(grid->n);
        for (int j = 0; j < grid->n; ++j)
            v[j] = std::exp(complexd(0.0, m / grid->scale * grid->xs[j]));
        auto sp = forward(ComplexField{v, grid});
        for (int j = 0; j < grid->n; ++j) {
            if (j == m) CHECK(std::abs(sp.coeffs[j]) == doctest::Approx(1.0).epsilon(1e-12));
            else CHECK(std::abs(sp.coeffs[j]) < 1e-12);
        }

        // round trip on a random field
        auto f = random_field(grid, 42 + p);
        const double scale_ref = max_abs(f);
        CHECK(max_diff(inverse(forward(f)), f) < 1e-13 * scale_ref);
    }
}

TEST_CASE("forward linearity") {
    auto grid = make_grid(1 << 9, 2.0);
    auto f = random_field(grid, 1);
    auto g = random_field(grid, 2);
    const complexd ca(1.3, -0.4), cb(-0.2, 2.1);
    cvector comb(grid->n);
    for (int j = 0; j < grid->n; ++j) comb[j] = ca * f.values[j] + cb * g.values[j];
    auto lhs = forward(ComplexField{comb, grid});
    auto ff = forward(f), fg = forward(g);
    for (int j = 0; j < grid->n; ++j)
        CHECK(std::abs(lhs.coeffs[j] - (ca * ff.coeffs[j] + cb * fg.coeffs[j])) < 1e-13);
}

TEST_CASE("spectral derivative: trig identity, constants, closed-form oracle") {
    auto grid = make_grid(1 << 9, 1.0); // sin(x) periodic on [-pi, pi)
    cvector v(grid->n);
    for (int j = 0; j < grid->n; ++j) v[j] = std::sin(grid->xs[j]);
    auto d = spectral_derivative(ComplexField{v, grid});
    for (int j = 0; j < grid->n; ++j)
        CHECK(std::abs(d.values[j].real() - std::cos(grid->xs[j])) < 1e-12);

    cvector c(grid->n, complexd(3.25, 1.0));
    auto dc = spectral_derivative(ComplexField{c, grid});
    CHECK(max_abs(dc) < 1e-13);

    // ground state on the paper's grid vs the closed-form derivative
    auto g5 = make_grid(1 << 10, 5.0);
    GroundState gs(ModelParams{9.0, 4.4, 1});
    auto phi = sample_gs(gs, g5);
    auto dphi = spectral_derivative(phi);
    double worst = 0.0;
    for (int j = 0; j < g5->n; ++j)
        worst = std::max(worst, std::abs(dphi.values[j].real() - gs.deriv(g5->xs[j])));
    CHECK(worst < 1e-10);
}

TEST_CASE("size mismatch is rejected") {
    auto grid = make_grid(1 << 8, 1.0);
    CHECK_THROWS_AS((ComplexField{cvector(17), grid}), ValidationError);
}

TEST_CASE("rhs on the exact ground state equals +i b phi") {
    auto grid = make_grid(1 << 10, 5.0);
    GroundState gs(ModelParams{9.0, 4.4, 1});
    auto phi = sample_gs(gs, grid);
    auto r = rhs(phi, gs.params());
    double worst = 0.0;
    for (int j = 0; j < grid->n; ++j)
        worst = std::max(worst, std::abs(r.values[j] - complexd(0.0, 4.4) * phi.values[j]));
    CHECK(worst < 1e-10);

    // zero field -> zero
    ComplexField zero{cvector(grid->n), grid};
    CHECK(max_abs(rhs(zero, gs.params())) == 0.0);
}

TEST_CASE("rhs linearizes to the free Schrodinger operator at tiny amplitude") {
    auto grid = make_grid(1 << 6, 1.0);
    const double eps = 1e-6;
    for (int alpha : {1, 2}) {
        const ModelParams params{9.0, 4.4, alpha};
        cvector v(grid->n);
        for (int j = 0; j < grid->n; ++j) v[j] = eps * std::exp(complexd(0.0, grid->xs[j]));
        ComplexField f{v, grid};
        auto r = rhs(f, params);
        // -i(-phi_xx) for the k=1 mode: -i * phi
        double worst = 0.0;
        for (int j = 0; j < grid->n; ++j)
            worst = std::max(worst, std::abs(r.values[j] - complexd(0.0, -1.0) * f.values[j]));
        CHECK(worst < 1e-10 * eps);
    }
}

TEST_CASE("rhs agrees with the first-order-system route") {
    auto grid = make_grid(1 << 10, 5.0);
    GroundState gs(ModelParams{9.0, 4.4, 1});

    auto phi = sample_gs(gs, grid);
    CHECK(max_diff(rhs(phi, gs.params()), rhs_via_dirac_system(phi, gs.params())) < 1e-10);

    auto perturbed = sample_gs(gs, grid, 0.99);
    CHECK(max_diff(rhs(perturbed, gs.params()), rhs_via_dirac_system(perturbed, gs.params())) <
          1e-10);
    // the system route also reproduces +i b phi on the exact ground state
    auto r = rhs_via_dirac_system(phi, gs.params());
    double worst = 0.0;
    for (int j = 0; j < grid->n; ++j)
        worst = std::max(worst, std::abs(r.values[j] - complexd(0.0, 4.4) * phi.values[j]));
    CHECK(worst < 1e-10);

    ComplexField zero{cvector(grid->n), grid};
    CHECK(max_abs(rhs_via_dirac_system(zero, gs.params())) == 0.0);

    // higher nonlinearity
    GroundState gs3(ModelParams{9.0, 2.1, 3});
    auto phi3 = sample_gs(gs3, grid, 0.97);
    CHECK(max_diff(rhs(phi3, gs3.params()), rhs_via_dirac_system(phi3, gs3.params())) < 1e-10);
}

TEST_CASE("rhs singularity guard reports the offending amplitude") {
    auto grid = make_grid(1 << 8, 5.0);
    cvector v(grid->n, complexd(0.9999999999, 0.0));
    ComplexField f{v, grid};
    try {
        rhs(f, ModelParams{9.0, 4.4, 1});
        FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
        CHECK(e.max_abs_phi == doctest::Approx(0.9999999999).epsilon(1e-12));
    }
}

TEST_CASE("Fourier tail of the sampled ground state certifies resolution") {
    auto grid = make_grid(1 << 10, 5.0);
    GroundState gs(ModelParams{9.0, 4.4, 1});
    CHECK(fourier_tail(sample_gs(gs, grid)) < 1e-13);
}

TEST_SUITE_END();

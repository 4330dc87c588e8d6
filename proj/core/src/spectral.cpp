#include "qlnls/spectral.hpp"

#include <cmath>
#include <sstream>

namespace qlnls {

namespace {
void require_same_size(const ComplexField& f) {
    if (!f.grid || static_cast<int>(f.values.size()) != f.grid->n)
        throw ValidationError("spectral: field size does not match its grid");
}
} // namespace

double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

void check_guard(const ComplexField& f, int alpha, double delta_guard, int stage) {
    double m2max = 0.0;
    for (const auto& v : f.values) m2max = std::max(m2max, std::norm(v));
    if (ipow(m2max, alpha) > 1.0 - delta_guard) {
        std::ostringstream os;
        os << "singularity guard violated: max|phi| = " << std::sqrt(m2max);
        throw SingularityError(os.str(), std::sqrt(m2max), stage);
    }
}

SpectralField forward(const ComplexField& field) {
    require_same_size(field);
    cvector c(field.size());
    Fft::plan_for(field.size()).forward(field.values.data(), c.data());
    return SpectralField{std::move(c), field.grid};
}

ComplexField inverse(const SpectralField& spec) {
    if (!spec.grid || static_cast<int>(spec.coeffs.size()) != spec.grid->n)
        throw ValidationError("spectral: coefficient size does not match its grid");
    cvector v(spec.grid->n);
    Fft::plan_for(spec.grid->n).inverse(spec.coeffs.data(), v.data());
    return ComplexField{std::move(v), spec.grid};
}

ComplexField spectral_derivative(const ComplexField& field) {
    require_same_size(field);
    const Grid& g = *field.grid;
    const Fft& fft = Fft::plan_for(g.n);
    cvector c(g.n), out(g.n);
    fft.forward(field.values.data(), c.data());
    for (int j = 0; j < g.n; ++j) c[j] *= complexd(0.0, g.ks[j]);
    c[g.nyquist_index] = 0.0;
    fft.inverse(c.data(), out.data());
    return ComplexField{std::move(out), field.grid};
}

double fourier_tail(const ComplexField& field) {
    require_same_size(field);
    const Grid& g = *field.grid;
    cvector c(g.n);
    Fft::plan_for(g.n).forward(field.values.data(), c.data());
    double tail = 0.0;
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.mode_number(j)) >= g.n / 4) tail = std::max(tail, std::abs(c[j]));
    return tail;
}

namespace detail {

void rhs_hat(const complexd* in_hat, complexd* out_hat, const Grid& grid, const Fft& fft,
             const ModelParams& params, double delta_guard, const unsigned char* mask,
             RhsScratch& scratch, int stage) {
    const int n = grid.n;
    scratch.resize(n);
    complexd* u = scratch.u.data();
    complexd* ux = scratch.ux.data();
    complexd* g = scratch.g.data();
    complexd* nl = scratch.nl.data();

    fft.inverse(in_hat, u);
    for (int j = 0; j < n; ++j) g[j] = in_hat[j] * complexd(0.0, grid.ks[j]);
    g[grid.nyquist_index] = 0.0;
    fft.inverse(g, ux);

    const int alpha = params.alpha;
    const double a = params.a;
    double m2max = 0.0;
    for (int j = 0; j < n; ++j) {
        const double m2 = std::norm(u[j]);
        m2max = std::max(m2max, m2);
        const double m2a = ipow(m2, alpha);
        const double denom = 1.0 - m2a;
        g[j] = ux[j] / denom;
        nl[j] = (alpha * ipow(m2, alpha - 1) * std::norm(ux[j]) / (denom * denom) - a * m2a) * u[j];
    }
    if (ipow(m2max, alpha) > 1.0 - delta_guard) {
        std::ostringstream os;
        os << "singularity guard violated: max|phi| = " << std::sqrt(m2max);
        if (stage > 0) os << " (RK stage " << stage << ")";
        throw SingularityError(os.str(), std::sqrt(m2max), stage);
    }

    fft.forward(g, ux);  // ux <- g_hat
    fft.forward(nl, g);  // g  <- nl_hat
    for (int j = 0; j < n; ++j) {
        // i d(phi)/dt = -ik g_hat + nl_hat, so d(phi_hat)/dt = -i (-ik g_hat + nl_hat)
        complexd flux = complexd(0.0, -grid.ks[j]) * ux[j];
        if (j == grid.nyquist_index) flux = 0.0;
        out_hat[j] = complexd(0.0, -1.0) * (flux + g[j]);
        if (mask && !mask[j]) out_hat[j] = 0.0;
    }
}

} // namespace detail

ComplexField rhs(const ComplexField& field, const ModelParams& params, double delta_guard) {
    require_same_size(field);
    check_guard(field, params.alpha, delta_guard);
    const Grid& grid = *field.grid;
    const Fft& fft = Fft::plan_for(grid.n);
    detail::RhsScratch scratch;
    cvector hat(grid.n), out_hat(grid.n), out(grid.n);
    fft.forward(field.values.data(), hat.data());
    detail::rhs_hat(hat.data(), out_hat.data(), grid, fft, params, delta_guard, nullptr, scratch, 0);
    fft.inverse(out_hat.data(), out.data());
    return ComplexField{std::move(out), field.grid};
}

ComplexField rhs_via_dirac_system(const ComplexField& field, const ModelParams& params,
                                  double delta_guard) {
    require_same_size(field);
    check_guard(field, params.alpha, delta_guard);
    const Grid& grid = *field.grid;
    const int n = grid.n;
    const Fft& fft = Fft::plan_for(n);

    cvector hat(n), ux(n), chi(n), nl(n), chi_hat(n), nl_hat(n), out(n);
    fft.forward(field.values.data(), hat.data());
    for (int j = 0; j < n; ++j) hat[j] *= complexd(0.0, grid.ks[j]);
    hat[grid.nyquist_index] = 0.0;
    fft.inverse(hat.data(), ux.data());

    const int alpha = params.alpha;
    for (int j = 0; j < n; ++j) {
        const double m2 = std::norm(field.values[j]);
        const double m2a = ipow(m2, alpha);
        chi[j] = complexd(0.0, -1.0) * ux[j] / (1.0 - m2a);
        nl[j] = (alpha * ipow(m2, alpha - 1) * std::norm(chi[j]) - params.a * m2a) * field.values[j];
    }
    fft.forward(chi.data(), chi_hat.data());
    fft.forward(nl.data(), nl_hat.data());
    for (int j = 0; j < n; ++j) {
        // i d(phi)/dt = -i chi_x + nl  =>  d(phi_hat)/dt = -(ik) chi_hat - i nl_hat
        complexd chix = complexd(0.0, grid.ks[j]) * chi_hat[j];
        if (j == grid.nyquist_index) chix = 0.0;
        hat[j] = -chix - complexd(0.0, 1.0) * nl_hat[j];
    }
    fft.inverse(hat.data(), out.data());
    return ComplexField{std::move(out), field.grid};
}

} // namespace qlnls

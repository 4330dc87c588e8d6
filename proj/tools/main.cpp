// Command-line front end: experiment presets, config-driven runs, ground
// state emission, phase-plane reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qlnls/energy.hpp"
#include "qlnls/io.hpp"
#include "qlnls/phaseplane.hpp"
#include "qlnls/presets.hpp"
#include "qlnls/runner.hpp"
#include "qlnls/spectral.hpp"

namespace {

using namespace qlnls;

int cmd_groundstate(double a, const std::vector<double>& bs, int alpha, int n, double scale,
                    const std::string& out) {
    return emit_groundstate(a, bs, alpha, GridSpec{n, scale}, out, std::cout, std::cerr);
}

int cmd_phaseplane(double a, double b, int alpha, double span, long steps, double domain,
                   int points, const std::string& out) {
    try {
        const ModelParams params = make_params(a, b, alpha);
        std::filesystem::create_directories(out);

        const CriticalPointReport report = critical_points(params);
        {
            std::ofstream os(std::filesystem::path(out) / "critical_points.csv");
            if (!os) throw IoError("cannot write critical_points.csv");
            os << "chi,phi,classification\n";
            for (const auto& p : report.points)
                os << format_double(p.chi) << ',' << format_double(p.phi) << ','
                   << (p.kind == CriticalKind::local_min ? "local_min" : "saddle") << '\n';
        }

        nlohmann::json j;
        j["regime"] = report.regime == ParamRegime::a_gt_b   ? "a>b"
                      : report.regime == ParamRegime::a_eq_b ? "a=b"
                                                             : "a<b";
        if (params.has_ground_state()) {
            const auto orbit = shoot_ground_state(params, span, steps);
            std::ofstream os(std::filesystem::path(out) / "orbit.csv");
            if (!os) throw IoError("cannot write orbit.csv");
            os << "x,chi,phi,H\n";
            const long stride = std::max<long>(1, steps / 2000);
            for (std::size_t i = 0; i < orbit.size(); i += stride)
                os << format_double(orbit[i].x) << ',' << format_double(orbit[i].p.chi) << ','
                   << format_double(orbit[i].p.phi) << ','
                   << format_double(hamiltonian(orbit[i].p, params)) << '\n';

            const double pi = 3.14159265358979323846;
            auto grid = make_grid(points, domain / pi);
            const GroundState gs(params);
            const auto nd = nondegeneracy_check(gs, *grid);
            const auto wr = wronskian_constancy(gs, *grid, 0.0, 1.0);
            j["nondegeneracy"] = {{"eigenvalue_near_zero", nd.eigenvalue_near_zero},
                                  {"eigvec_alignment", nd.eigvec_alignment},
                                  {"zero_multiplicity", nd.zero_multiplicity},
                                  {"tol_zero", nd.tol_zero}};
            j["wronskian"] = {{"variation", wr.variation}, {"value", wr.value}};
        } else {
            j["nondegeneracy"] = nullptr; // no ground state in this regime
        }
        std::ofstream os(std::filesystem::path(out) / "phaseplane.json");
        if (!os) throw IoError("cannot write phaseplane.json");
        os << j.dump(2) << '\n';
        std::cout << "phaseplane report written to " << out << '\n';
        return kExitOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

int cmd_fit(const std::string& input, double a, int alpha, double b_ref, double window,
            double b0, bool has_b0, const std::string& out) {
    try {
        const ComplexField field = read_field_csv(input);
        const ModelParams params = make_params(a, b_ref, alpha);
        const RecenterResult rc = recenter(field);
        FitResult fit = fit_ground_state(rc.field, params, window,
                                         has_b0 ? std::optional<double>(b0) : std::nullopt);
        fit.center_fit = rc.center;
        nlohmann::json j = {{"b_fit", fit.b_fit},
                            {"residual_l2", fit.residual_l2},
                            {"center_fit", fit.center_fit},
                            {"iterations", fit.iterations},
                            {"converged", fit.converged}};
        std::filesystem::create_directories(out);
        std::ofstream os(std::filesystem::path(out) / "fit.json");
        if (!os) throw IoError("cannot write fit.json");
        os << j.dump(2) << '\n';
        std::cout << "b_fit=" << format_double(fit.b_fit)
                  << " residual_l2=" << format_double(fit.residual_l2)
                  << " converged=" << (fit.converged ? "true" : "false") << '\n';
        return kExitOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for a 1D quasilinear Schrodinger equation"};
    app.require_subcommand(1);

    std::string out = "out";

    // groundstate
    auto* gs = app.add_subcommand("groundstate", "Emit closed-form ground-state profiles as CSV");
    double gs_a = 9.0;
    std::vector<double> gs_bs;
    int gs_alpha = 1, gs_n = 1 << 10;
    double gs_scale = 5.0;
    gs->add_option("--a", gs_a, "coupling a");
    gs->add_option("--b", gs_bs, "frequency b (repeatable for a sweep)")->required();
    gs->add_option("--alpha", gs_alpha, "nonlinearity exponent");
    gs->add_option("--n", gs_n, "grid points (power of two)");
    gs->add_option("--scale", gs_scale, "domain scale L (domain L*[-pi,pi))");
    gs->add_option("--out", out, "output directory");

    // evolve
    auto* ev = app.add_subcommand("evolve", "Run a time evolution from a config file");
    std::string config_file;
    ev->add_option("--config", config_file, "INI config file")->required();
    ev->add_option("--out", out, "output directory");

    // fit
    auto* ft = app.add_subcommand("fit", "Fit a ground state to a field snapshot CSV");
    std::string fit_input;
    double fit_a = 9.0, fit_bref = 4.4, fit_window = 5.0, fit_b0 = 0.0;
    int fit_alpha = 1;
    ft->add_option("--in", fit_input, "snapshot CSV (x,re_phi,im_phi)")->required();
    ft->add_option("--a", fit_a, "coupling a");
    ft->add_option("--alpha", fit_alpha, "nonlinearity exponent");
    ft->add_option("--b-ref", fit_bref, "fallback start for b");
    ft->add_option("--window", fit_window, "fit window |x| < window");
    auto* b0opt = ft->add_option("--b0", fit_b0, "explicit initial guess for b");
    ft->add_option("--out", out, "output directory");

    // phaseplane
    auto* pp = app.add_subcommand("phaseplane", "Critical points, shooting orbit, non-degeneracy");
    double pp_a = 9.0, pp_b = 4.4, pp_span = 10.0, pp_domain = 12.0;
    int pp_alpha = 1, pp_points = 2048;
    long pp_steps = 100000;
    pp->add_option("--a", pp_a, "coupling a");
    pp->add_option("--b", pp_b, "frequency b");
    pp->add_option("--alpha", pp_alpha, "nonlinearity exponent");
    pp->add_option("--span", pp_span, "shooting half-span");
    pp->add_option("--steps", pp_steps, "shooting steps per direction");
    pp->add_option("--domain", pp_domain, "truncated half-domain for the linearized operator");
    pp->add_option("--points", pp_points, "grid points for the linearized operator");
    pp->add_option("--out", out, "output directory");

    // preset
    auto* pr = app.add_subcommand("preset", "Run a built-in paper experiment");
    std::string preset_name;
    bool list_presets = false, print_config = false;
    std::string dump_config;
    pr->add_option("name", preset_name, "preset name");
    pr->add_flag("--list", list_presets, "list preset names and exit");
    pr->add_flag("--print-config", print_config, "print the preset's config and exit");
    pr->add_option("--dump-config", dump_config, "write the preset's config to a file and exit");
    pr->add_option("--out", out, "output directory");

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run several presets, each into its own subdirectory");
    std::vector<std::string> sweep_names;
    int jobs = 1;
    bool sweep_all = false;
    sw->add_option("names", sweep_names, "preset names (default: the quick tier)");
    sw->add_flag("--all", sweep_all, "include the long-running presets");
    sw->add_option("--jobs", jobs, "concurrent runs");
    sw->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qlnls::kExitValidation;
    }

    if (gs->parsed()) return cmd_groundstate(gs_a, gs_bs, gs_alpha, gs_n, gs_scale, out);
    if (ev->parsed()) return qlnls::run_config(config_file, out, std::cout, std::cerr);
    if (ft->parsed())
        return cmd_fit(fit_input, fit_a, fit_alpha, fit_bref, fit_window, fit_b0,
                       b0opt->count() > 0, out);
    if (pp->parsed())
        return cmd_phaseplane(pp_a, pp_b, pp_alpha, pp_span, pp_steps, pp_domain, pp_points, out);
    if (pr->parsed()) {
        if (list_presets) {
            for (const auto& n : qlnls::preset_names()) std::cout << n << '\n';
            return 0;
        }
        if (preset_name.empty()) {
            std::cerr << "error: preset name required (or --list)\n";
            return qlnls::kExitValidation;
        }
        const qlnls::ExperimentSpec* spec = qlnls::find_preset(preset_name);
        if (!spec) {
            std::cerr << "error: unknown preset '" << preset_name << "'\n";
            return qlnls::kExitValidation;
        }
        if (print_config) {
            std::cout << qlnls::serialize_config(*spec);
            return 0;
        }
        if (!dump_config.empty()) {
            std::ofstream os(dump_config);
            if (!os) {
                std::cerr << "error: cannot write " << dump_config << '\n';
                return qlnls::kExitIo;
            }
            os << qlnls::serialize_config(*spec);
            return 0;
        }
        return qlnls::run_preset(preset_name, out, std::cout, std::cerr);
    }
    if (sw->parsed()) {
        if (sweep_names.empty() && sweep_all) sweep_names = qlnls::preset_names(true);
        return qlnls::run_sweep(sweep_names, out, jobs, std::cout, std::cerr);
    }
    return 0;
}

#include "qlnls/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qlnls/energy.hpp"
#include "qlnls/errors.hpp"
#include "qlnls/io.hpp"
#include "qlnls/presets.hpp"
#include "qlnls/spectral.hpp"

namespace qlnls {

namespace {

using nlohmann::json;

json spec_to_json(const ExperimentSpec& s) {
    json j;
    j["name"] = s.name;
    j["long_running"] = s.long_running;
    j["model"] = {{"a", s.model.a}, {"b", s.model.b}, {"alpha", s.model.alpha}};
    j["grid"] = {{"n", s.grid.n}, {"scale", s.grid.scale}};
    json ini;
    switch (s.initial.kind) {
        case InitialCondition::Kind::ground_state_scaled:
            ini = {{"kind", "ground_state_scaled"}, {"lambda", s.initial.lambda}};
            break;
        case InitialCondition::Kind::ground_state_plus_gaussian:
            ini = {{"kind", "ground_state_plus_gaussian"},
                   {"sign", s.initial.sign},
                   {"amplitude", s.initial.amplitude}};
            break;
        case InitialCondition::Kind::gaussian:
            ini = {{"kind", "gaussian"}, {"mu", s.initial.mu}};
            break;
    }
    j["initial"] = ini;
    j["evolution"] = {{"t_end", s.evolution.t_end},
                      {"n_steps", s.evolution.n_steps},
                      {"record_every", s.evolution.record_every},
                      {"delta_guard", s.evolution.delta_guard},
                      {"c_stab", s.evolution.c_stab},
                      {"dealias", s.evolution.dealias}};
    j["fit"] = {{"enabled", s.fit.enabled}, {"window", s.fit.window}};
    if (s.fit.b0) j["fit"]["b0"] = *s.fit.b0;
    return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    os << j.dump(2) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

} // namespace

int run_experiment(const ExperimentSpec& spec, const std::filesystem::path& outdir,
                   std::ostream& out, std::ostream& err, RunSummary* summary) {
    spec.validate();
    ensure_dir(outdir);

    auto grid = make_grid(spec.grid.n, spec.grid.scale);
    const ComplexField initial = make_initial(spec.initial, spec.model, grid,
                                              spec.evolution.delta_guard);
    write_field_csv(outdir / "initial.csv", initial);

    EvolveResult result = evolve(initial, spec.evolution, spec.model);
    for (const auto& w : result.warnings) err << spec.name << ": warning: " << w << '\n';

    write_field_csv(outdir / "final.csv", result.final_state);
    write_diagnostics_csv(outdir / "diagnostics.csv", result.diagnostics);

    double max_drift = 0.0;
    for (double d : result.diagnostics.energy_rel_drift) max_drift = std::max(max_drift, std::abs(d));

    RunSummary s;
    s.name = spec.name;
    s.completed = result.completed;
    s.final_linf = max_abs(result.final_state);
    s.max_energy_drift = max_drift;

    if (spec.fit.enabled && result.completed) {
        const RecenterResult rc = recenter(result.final_state);
        FitResult fit = fit_ground_state(rc.field, spec.model, spec.fit.window, spec.fit.b0);
        fit.center_fit = rc.center;
        s.fit = fit;
        json jf = {{"b_fit", fit.b_fit},
                   {"residual_l2", fit.residual_l2},
                   {"center_fit", fit.center_fit},
                   {"iterations", fit.iterations},
                   {"converged", fit.converged}};
        write_json_file(outdir / "fit.json", jf);
    }

    json manifest;
    manifest["experiment"] = spec_to_json(spec);
    manifest["version"] = "0.1.0";
    manifest["outputs"] = {"initial.csv", "final.csv", "diagnostics.csv"};
    if (s.fit) manifest["outputs"].push_back("fit.json");
    manifest["result"] = {{"completed", result.completed},
                          {"stop_time", result.stop_time},
                          {"final_linf", s.final_linf},
                          {"max_energy_rel_drift", max_drift}};
    if (!result.completed) manifest["result"]["error"] = result.error;
    write_json_file(outdir / "manifest.json", manifest);

    out << spec.name << ": final_linf=" << format_double(s.final_linf)
        << " energy_drift=" << format_double(max_drift);
    if (s.fit) out << " b_fit=" << format_double(s.fit->b_fit);
    if (!result.completed) out << " ABORTED (" << result.error << ")";
    out << '\n';

    if (summary) *summary = s;
    return result.completed ? kExitOk : kExitSingularity;
}

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SingularityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSingularity;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

} // namespace

int run_preset(const std::string& name, const std::filesystem::path& outdir, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        const ExperimentSpec* spec = find_preset(name);
        if (!spec) throw ValidationError("unknown preset '" + name + "'");
        return run_experiment(*spec, outdir, out, err);
    });
}

int run_config(const std::filesystem::path& config_file, const std::filesystem::path& outdir,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ExperimentSpec spec = load_config(config_file);
        return run_experiment(spec, outdir, out, err);
    });
}

int emit_groundstate(double a, const std::vector<double>& bs, int alpha, const GridSpec& gridspec,
                     const std::filesystem::path& outdir, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (bs.empty()) throw ValidationError("groundstate: at least one b value required");
        ensure_dir(outdir);
        auto grid = make_grid(gridspec.n, gridspec.scale);
        for (double b : bs) {
            const GroundState gs(make_params(a, b, alpha));
            std::ostringstream name;
            name << "groundstate_b" << format_double_shortest(b) << ".csv";
            write_groundstate_csv(outdir / name.str(), gs, *grid);
            out << name.str() << ": max=" << format_double(gs.max_amplitude()) << '\n';
        }
        return kExitOk;
    });
}

int run_sweep(std::vector<std::string> names, const std::filesystem::path& outdir, int jobs,
              std::ostream& out, std::ostream& err) {
    if (names.empty()) names = preset_names(false); // default tier
    if (jobs < 1) jobs = 1;

    std::mutex io_mutex;
    std::vector<int> codes(names.size(), kExitOk);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= names.size()) return;
            std::ostringstream obuf, ebuf;
            const int code = run_preset(names[i], outdir / names[i], obuf, ebuf);
            std::lock_guard<std::mutex> lock(io_mutex);
            out << obuf.str();
            err << ebuf.str();
            codes[i] = code;
        }
    };
    std::vector<std::thread> pool;
    const int k = std::min<int>(jobs, static_cast<int>(names.size()));
    for (int i = 0; i < k - 1; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return *std::max_element(codes.begin(), codes.end());
}

} // namespace qlnls

#ifndef QLNLS_RUNNER_HPP
#define QLNLS_RUNNER_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlnls/config.hpp"
#include "qlnls/fit.hpp"

namespace qlnls {

// Process exit codes (also used by the CLI front end).
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSingularity = 2;
inline constexpr int kExitIo = 3;

struct RunSummary {
    std::string name;
    bool completed = false;
    double final_linf = 0.0;
    double max_energy_drift = 0.0;
    std::optional<FitResult> fit;
};

/// Runs one experiment end to end: initial/final field snapshots, the
/// diagnostics CSV, an optional fit report JSON, and a manifest JSON under
/// outdir. Prints a summary line to `out`, warnings to `err`. Exit-code
/// semantics: 0 ok, 2 singularity abort (partial outputs retained).
/// ValidationError/IoError propagate to the caller.
int run_experiment(const ExperimentSpec& spec, const std::filesystem::path& outdir,
                   std::ostream& out, std::ostream& err, RunSummary* summary = nullptr);

// run_experiment plus name lookup / config parsing; return exit codes 0..3.
int run_preset(const std::string& name, const std::filesystem::path& outdir, std::ostream& out,
               std::ostream& err);
int run_config(const std::filesystem::path& config_file, const std::filesystem::path& outdir,
               std::ostream& out, std::ostream& err);

// CSV of the closed-form profile for each b (file groundstate_b<b>.csv).
int emit_groundstate(double a, const std::vector<double>& bs, int alpha, const GridSpec& grid,
                     const std::filesystem::path& outdir, std::ostream& out, std::ostream& err);

// Runs the named presets (default tier when empty), --jobs way concurrent,
// each into outdir/<name>/. Returns the worst exit code.
int run_sweep(std::vector<std::string> names, const std::filesystem::path& outdir, int jobs,
              std::ostream& out, std::ostream& err);

} // namespace qlnls

#endif

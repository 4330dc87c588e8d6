#ifndef QLNLS_CONFIG_HPP
#define QLNLS_CONFIG_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qlnls/evolve.hpp"
#include "qlnls/params.hpp"

namespace qlnls {

struct GridSpec {
    int n = 1024;
    double scale = 5.0; // the L in L*[-pi, pi)
};

struct FitSpec {
    bool enabled = true;
    double window = 5.0;
    std::optional<double> b0;
};

/// A full experiment: model, grid, initial condition, evolution, fit.
/// Presets are compiled-in instances; config files parse to the same struct.
struct ExperimentSpec {
    std::string name = "custom";
    ModelParams model{9.0, 4.4, 1};
    GridSpec grid;
    InitialCondition initial;
    EvolutionConfig evolution;
    FitSpec fit;
    bool long_running = false; // excluded from the default sweep/test tier

    void validate() const; // throws ValidationError
};

// INI-style sections [model] [grid] [initial] [evolution] [fit]; '#'/';'
// comments. Unknown sections/keys are errors with file:line context.
ExperimentSpec parse_config(std::istream& in, const std::string& filename);
ExperimentSpec load_config(const std::filesystem::path& path);

// Round-trips through parse_config; numbers in full precision.
std::string serialize_config(const ExperimentSpec& spec);

} // namespace qlnls

#endif

#ifndef QLNLS_PRESETS_HPP
#define QLNLS_PRESETS_HPP

#include <vector>

#include "qlnls/config.hpp"

namespace qlnls {

// Compiled-in experiment presets, one per paper experiment (grids, step
// counts and time spans match the text exactly).
const std::vector<ExperimentSpec>& presets();

// nullptr when the name is unknown.
const ExperimentSpec* find_preset(const std::string& name);

std::vector<std::string> preset_names(bool include_long_running = true);

} // namespace qlnls

#endif

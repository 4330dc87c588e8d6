#ifndef QLNLS_IO_HPP
#define QLNLS_IO_HPP

#include <filesystem>
#include <string>

#include "qlnls/evolve.hpp"
#include "qlnls/field.hpp"
#include "qlnls/groundstate.hpp"

namespace qlnls {

// Locale-independent %.17g-equivalent formatting (lossless binary64
// round-trip; re-emitting a parsed value reproduces the byte string).
std::string format_double(double v);
// Shortest lossless representation ("4.4", not "4.4000000000000004");
// used for filenames and human-facing summaries.
std::string format_double_shortest(double v);
double parse_double(const std::string& s, const std::string& context);

// Field snapshot: header "x,re_phi,im_phi", one row per grid point.
void write_field_csv(const std::filesystem::path& path, const ComplexField& field);
// Rebuilds the grid from the x column (N rows, power of two, uniform spacing).
ComplexField read_field_csv(const std::filesystem::path& path);

// Header "t,energy,energy_rel_drift,linf,fourier_tail,mass".
void write_diagnostics_csv(const std::filesystem::path& path, const Diagnostics& diag);

// Header "x,phi": the closed-form profile sampled on the grid.
void write_groundstate_csv(const std::filesystem::path& path, const GroundState& gs,
                           const Grid& grid);

} // namespace qlnls

#endif

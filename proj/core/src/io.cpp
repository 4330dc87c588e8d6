#include "qlnls/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qlnls/errors.hpp"

namespace qlnls {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_double_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const std::string& context) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw ValidationError(context + ": malformed number '" + s + "'");
    return v;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    return os;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

void write_field_csv(const std::filesystem::path& path, const ComplexField& field) {
    auto os = open_out(path);
    os << "x,re_phi,im_phi\n";
    for (int j = 0; j < field.size(); ++j) {
        os << format_double(field.grid->xs[j]) << ',' << format_double(field.values[j].real())
           << ',' << format_double(field.values[j].imag()) << '\n';
    }
    if (!os) throw IoError("write failed: " + path.string());
}

ComplexField read_field_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(is, line)) throw ValidationError(path.string() + ": empty file");
    std::vector<double> xs;
    cvector values;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        const std::string ctx = path.string() + ":" + std::to_string(lineno);
        if (f.size() != 3) throw ValidationError(ctx + ": expected 3 columns");
        xs.push_back(parse_double(f[0], ctx));
        values.emplace_back(parse_double(f[1], ctx), parse_double(f[2], ctx));
    }
    const int n = static_cast<int>(xs.size());
    if (n < 4 || (n & (n - 1)) != 0)
        throw ValidationError(path.string() + ": row count must be a power of two >= 4");
    const double h = xs[1] - xs[0];
    for (int j = 1; j < n; ++j)
        if (std::abs(xs[j] - xs[j - 1] - h) > 1e-9 * std::abs(h))
            throw ValidationError(path.string() + ": sample spacing is not uniform");
    const double scale = n * h / (2.0 * 3.14159265358979323846);
    auto grid = make_grid_with_samples(n, scale, std::move(xs));
    return ComplexField{std::move(values), std::move(grid)};
}

void write_diagnostics_csv(const std::filesystem::path& path, const Diagnostics& diag) {
    auto os = open_out(path);
    os << "t,energy,energy_rel_drift,linf,fourier_tail,mass\n";
    for (std::size_t i = 0; i < diag.times.size(); ++i) {
        os << format_double(diag.times[i]) << ',' << format_double(diag.energy[i]) << ','
           << format_double(diag.energy_rel_drift[i]) << ',' << format_double(diag.linf[i]) << ','
           << format_double(diag.fourier_tail[i]) << ',' << format_double(diag.mass[i]) << '\n';
    }
    if (!os) throw IoError("write failed: " + path.string());
}

void write_groundstate_csv(const std::filesystem::path& path, const GroundState& gs,
                           const Grid& grid) {
    auto os = open_out(path);
    os << "x,phi\n";
    for (int j = 0; j < grid.n; ++j)
        os << format_double(grid.xs[j]) << ',' << format_double(gs.eval(grid.xs[j])) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

} // namespace qlnls

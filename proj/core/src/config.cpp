#include "qlnls/config.hpp"

#include <fstream>
#include <sstream>

#include "qlnls/errors.hpp"
#include "qlnls/io.hpp"

namespace qlnls {

void ExperimentSpec::validate() const {
    make_params(model.a, model.b, model.alpha);
    if (grid.n < 4 || (grid.n & (grid.n - 1)) != 0)
        throw ValidationError(name + ": grid n must be a power of two >= 4");
    if (!(grid.scale > 0.0)) throw ValidationError(name + ": grid scale must be positive");
    if (!(evolution.t_end > 0.0)) throw ValidationError(name + ": t_end must be positive");
    if (evolution.n_steps < 1) throw ValidationError(name + ": n_steps must be positive");
    if (evolution.record_every < 1) throw ValidationError(name + ": record_every must be positive");
    if (initial.kind != InitialCondition::Kind::gaussian) require_ground_state_regime(model);
    if (fit.enabled && !(fit.window > 0.0))
        throw ValidationError(name + ": fit window must be positive");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

InitialCondition::Kind parse_kind(const std::string& v, const std::string& ctx) {
    if (v == "ground_state_scaled") return InitialCondition::Kind::ground_state_scaled;
    if (v == "ground_state_plus_gaussian") return InitialCondition::Kind::ground_state_plus_gaussian;
    if (v == "gaussian") return InitialCondition::Kind::gaussian;
    throw ValidationError(ctx + ": unknown initial kind '" + v + "'");
}

std::string kind_name(InitialCondition::Kind k) {
    switch (k) {
        case InitialCondition::Kind::ground_state_scaled: return "ground_state_scaled";
        case InitialCondition::Kind::ground_state_plus_gaussian: return "ground_state_plus_gaussian";
        case InitialCondition::Kind::gaussian: return "gaussian";
    }
    return "?";
}

long parse_long(const std::string& s, const std::string& ctx) {
    // Accept scientific notation for step counts (5e5 and the like).
    const double v = parse_double(s, ctx);
    const long l = std::lround(v);
    if (std::abs(v - l) > 1e-9 * std::max(1.0, std::abs(v)))
        throw ValidationError(ctx + ": expected an integer, got '" + s + "'");
    return l;
}

bool parse_bool(const std::string& s, const std::string& ctx) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ValidationError(ctx + ": expected a boolean, got '" + s + "'");
}

} // namespace

ExperimentSpec parse_config(std::istream& in, const std::string& filename) {
    ExperimentSpec spec;
    spec.name = "config";
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = filename + ":" + std::to_string(lineno);
        std::string t = trim(line);
        const auto comment = t.find_first_of("#;");
        if (comment != std::string::npos) t = trim(t.substr(0, comment));
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ValidationError(ctx + ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section != "model" && section != "grid" && section != "initial" &&
                section != "evolution" && section != "fit" && section != "experiment")
                throw ValidationError(ctx + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ValidationError(ctx + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const std::string kctx = ctx + " (key '" + key + "' in [" + section + "])";

        if (section == "experiment") {
            if (key == "name") spec.name = value;
            else if (key == "long_running") spec.long_running = parse_bool(value, kctx);
            else throw ValidationError(kctx + ": unknown key");
        } else if (section == "model") {
            if (key == "a") spec.model.a = parse_double(value, kctx);
            else if (key == "b") spec.model.b = parse_double(value, kctx);
            else if (key == "alpha") spec.model.alpha = static_cast<int>(parse_long(value, kctx));
            else throw ValidationError(kctx + ": unknown key");
        } else if (section == "grid") {
            if (key == "n") spec.grid.n = static_cast<int>(parse_long(value, kctx));
            else if (key == "scale") spec.grid.scale = parse_double(value, kctx);
            else throw ValidationError(kctx + ": unknown key");
        } else if (section == "initial") {
            if (key == "kind") spec.initial.kind = parse_kind(value, kctx);
            else if (key == "lambda") spec.initial.lambda = parse_double(value, kctx);
            else if (key == "sign") spec.initial.sign = static_cast<int>(parse_long(value, kctx));
            else if (key == "amplitude") spec.initial.amplitude = parse_double(value, kctx);
            else if (key == "mu") spec.initial.mu = parse_double(value, kctx);
            else throw ValidationError(kctx + ": unknown key");
        } else if (section == "evolution") {
            if (key == "t_end") spec.evolution.t_end = parse_double(value, kctx);
            else if (key == "n_steps") spec.evolution.n_steps = parse_long(value, kctx);
            else if (key == "record_every") spec.evolution.record_every = parse_long(value, kctx);
            else if (key == "delta_guard") spec.evolution.delta_guard = parse_double(value, kctx);
            else if (key == "c_stab") spec.evolution.c_stab = parse_double(value, kctx);
            else if (key == "dealias") spec.evolution.dealias = parse_bool(value, kctx);
            else throw ValidationError(kctx + ": unknown key");
        } else if (section == "fit") {
            if (key == "enabled") spec.fit.enabled = parse_bool(value, kctx);
            else if (key == "window") spec.fit.window = parse_double(value, kctx);
            else if (key == "b0") spec.fit.b0 = parse_double(value, kctx);
            else throw ValidationError(kctx + ": unknown key");
        } else {
            throw ValidationError(ctx + ": key outside any section");
        }
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config: " + path.string());
    return parse_config(is, path.string());
}

std::string serialize_config(const ExperimentSpec& spec) {
    std::ostringstream os;
    os << "[experiment]\n";
    os << "name = " << spec.name << "\n";
    os << "long_running = " << (spec.long_running ? "true" : "false") << "\n\n";
    os << "[model]\n";
    os << "a = " << format_double(spec.model.a) << "\n";
    os << "b = " << format_double(spec.model.b) << "\n";
    os << "alpha = " << spec.model.alpha << "\n\n";
    os << "[grid]\n";
    os << "n = " << spec.grid.n << "\n";
    os << "scale = " << format_double(spec.grid.scale) << "\n\n";
    os << "[initial]\n";
    os << "kind = " << kind_name(spec.initial.kind) << "\n";
    switch (spec.initial.kind) {
        case InitialCondition::Kind::ground_state_scaled:
            os << "lambda = " << format_double(spec.initial.lambda) << "\n";
            break;
        case InitialCondition::Kind::ground_state_plus_gaussian:
            os << "sign = " << spec.initial.sign << "\n";
            os << "amplitude = " << format_double(spec.initial.amplitude) << "\n";
            break;
        case InitialCondition::Kind::gaussian:
            os << "mu = " << format_double(spec.initial.mu) << "\n";
            break;
    }
    os << "\n[evolution]\n";
    os << "t_end = " << format_double(spec.evolution.t_end) << "\n";
    os << "n_steps = " << spec.evolution.n_steps << "\n";
    os << "record_every = " << spec.evolution.record_every << "\n";
    os << "delta_guard = " << format_double(spec.evolution.delta_guard) << "\n";
    os << "c_stab = " << format_double(spec.evolution.c_stab) << "\n";
    os << "dealias = " << (spec.evolution.dealias ? "true" : "false") << "\n\n";
    os << "[fit]\n";
    os << "enabled = " << (spec.fit.enabled ? "true" : "false") << "\n";
    if (spec.fit.enabled) {
        os << "window = " << format_double(spec.fit.window) << "\n";
        if (spec.fit.b0) os << "b0 = " << format_double(*spec.fit.b0) << "\n";
    }
    return os.str();
}

} // namespace qlnls

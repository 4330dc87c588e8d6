#include "qlnls/presets.hpp"

namespace qlnls {

namespace {

ExperimentSpec gs_exact() {
    ExperimentSpec s;
    s.name = "gs-exact-a9-b4.4";
    s.model = {9.0, 4.4, 1};
    s.grid = {1 << 10, 5.0};
    s.initial.kind = InitialCondition::Kind::ground_state_scaled;
    s.initial.lambda = 1.0;
    s.evolution.t_end = 1.0;
    s.evolution.n_steps = 100000;
    s.evolution.record_every = 1000;
    return s;
}

ExperimentSpec perturb_alpha1(double lambda, const char* name) {
    ExperimentSpec s;
    s.name = name;
    s.model = {9.0, 4.4, 1};
    s.grid = {1 << 11, 5.0};
    s.initial.kind = InitialCondition::Kind::ground_state_scaled;
    s.initial.lambda = lambda;
    s.evolution.t_end = 0.25;
    s.evolution.n_steps = 500000;
    s.evolution.record_every = 5000;
    return s;
}

ExperimentSpec gauss_perturb(int sign, const char* name) {
    ExperimentSpec s = perturb_alpha1(1.0, name);
    s.initial.kind = InitialCondition::Kind::ground_state_plus_gaussian;
    s.initial.sign = sign;
    s.initial.amplitude = 1e-3;
    return s;
}

ExperimentSpec perturb_high(double b, int alpha, double lambda, const char* name) {
    ExperimentSpec s;
    s.name = name;
    s.model = {9.0, b, alpha};
    s.grid = {1 << 13, 20.0};
    s.initial.kind = InitialCondition::Kind::ground_state_scaled;
    s.initial.lambda = lambda;
    s.evolution.t_end = 2.0;
    s.evolution.n_steps = 2000000;
    s.evolution.record_every = 20000;
    s.long_running = true;
    return s;
}

ExperimentSpec gaussian_data(int alpha, const char* name) {
    ExperimentSpec s;
    s.name = name;
    s.model = {9.0, 2.0, alpha}; // b is only the fit fallback; data is a Gaussian
    s.grid = {1 << 12, 40.0};
    s.initial.kind = InitialCondition::Kind::gaussian;
    s.initial.mu = 0.9;
    s.evolution.t_end = 10.0;
    s.evolution.n_steps = 500000;
    s.evolution.record_every = 5000;
    s.long_running = true;
    return s;
}

std::vector<ExperimentSpec> build() {
    return {
        gs_exact(),
        perturb_alpha1(0.99, "gs-perturb-0.99"),
        perturb_alpha1(1.001, "gs-perturb-1.001"),
        gauss_perturb(-1, "gs-gauss-minus"),
        gauss_perturb(+1, "gs-gauss-plus"),
        perturb_high(2.9, 2, 0.99, "gs-perturb-0.99-alpha2"),
        perturb_high(2.9, 2, 1.001, "gs-perturb-1.001-alpha2"),
        perturb_high(2.1, 3, 0.99, "gs-perturb-0.99-alpha3"),
        perturb_high(2.1, 3, 1.001, "gs-perturb-1.001-alpha3"),
        gaussian_data(1, "gaussian-0.9-alpha1"),
        gaussian_data(2, "gaussian-0.9-alpha2"),
        gaussian_data(3, "gaussian-0.9-alpha3"),
    };
}

} // namespace

const std::vector<ExperimentSpec>& presets() {
    static const std::vector<ExperimentSpec> table = build();
    return table;
}

const ExperimentSpec* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

std::vector<std::string> preset_names(bool include_long_running) {
    std::vector<std::string> names;
    for (const auto& p : presets())
        if (include_long_running || !p.long_running) names.push_back(p.name);
    return names;
}

} // namespace qlnls

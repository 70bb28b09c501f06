#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsqg/errors.hpp"

namespace gsqg::cli {

namespace {

// JSON has no NaN/inf; those become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json history_json(const std::vector<IterRecord>& h) {
    json a = json::array();
    for (const auto& r : h) a.push_back({num(r.d_state), num(r.d_c_ell)});
    return a;
}

}  // namespace

void write_csv(const std::string& path, const Table& t) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw ConfigError("cannot write " + path);
    for (std::size_t k = 0; k < t.header.size(); ++k) std::fprintf(fp, "%s%s", k ? "," : "", t.header[k].c_str());
    std::fputc('\n', fp);
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) std::fprintf(fp, "%s%.17g", k ? "," : "", row[k]);
        std::fputc('\n', fp);
    }
    std::fclose(fp);
}

Table read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + " is empty");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.header.size()) throw ConfigError(path + ":" + std::to_string(lineno) + ": wrong column count");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<double> column(const Table& t, const std::string& name) {
    for (std::size_t k = 0; k < t.header.size(); ++k) {
        if (t.header[k] != name) continue;
        std::vector<double> out;
        out.reserve(t.rows.size());
        for (const auto& r : t.rows) out.push_back(r[k]);
        return out;
    }
    throw ConfigError("missing column '" + name + "'");
}

json to_json(const MembershipReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"margin", num(c.margin)}, {"location", num(c.location)}});
    return {{"set_kind", set_kind_name(r.kind)}, {"tol", r.tol}, {"passed", r.passed()}, {"checks", checks}};
}

json to_json(const FunctionalsR2& f) {
    return {{"b", num(f.b)},           {"c", num(f.c)},         {"c_check", num(f.c_check)},
            {"c_ell", num(f.c_ell)},   {"c_omega", num(f.c_omega)}, {"lambda", num(f.lambda)},
            {"c_ell_norm", num(f.c_ell_norm)}, {"f_inf", num(f.f_inf)}};
}

json to_json(const FunctionalsHP& f) {
    const char* model = f.tail.model == TailModel::PowerLaw ? "powerlaw" : "none";
    return {{"b_frak", num(f.b_frak)},
            {"c_frak", num(f.c_frak)},
            {"b_tail", num(f.b_tail)},
            {"c_ell", num(f.c_ell)},
            {"c_theta", num(f.c_theta)},
            {"lambda", num(f.lambda)},
            {"c_ell_norm", num(f.c_ell_norm)},
            {"c_theta_norm", num(f.c_theta_norm)},
            {"tail", {{"model", model}, {"X", num(f.tail.X)}, {"f_end", num(f.tail.f_end)}, {"delta", num(f.tail.delta)}}}};
}

json to_json(const SolveReportR2& r, const AlphaParams& params) {
    json j = {{"problem", "r2"},
              {"alpha", params.alpha},
              {"mesh", r.profile.mesh.describe()},
              {"converged", r.converged},
              {"iterations", r.iterations},
              {"functionals", to_json(r.functionals)},
              {"c_ell", num(r.functionals.c_ell)},
              {"c_omega", num(r.functionals.c_omega)},
              {"lambda", num(r.functionals.lambda)},
              {"c_ell_norm", num(r.c_ell_tilde)},
              {"c_omega_norm", num(r.c_ell_tilde)},
              {"support_radius", num(r.support_radius)},
              {"residual_history", history_json(r.history)},
              {"membership", to_json(r.membership)},
              {"lemma_bounds", to_json(r.lemma)},
              {"ode_residual", {{"max", num(r.ode.max_abs)}, {"l2", num(r.ode.l2)}, {"x_lo", r.ode.x_lo}, {"x_hi", r.ode.x_hi}}}};
    if (!r.failure.empty()) j["error"] = {{"type", r.failure}, {"message", "iteration did not meet the tolerance"}};
    return j;
}

json to_json(const SolveReportHP& r, const AlphaParams& params) {
    const auto& f = r.functionals;
    json j = {{"problem", "hp"},
              {"alpha", params.alpha},
              {"mesh", r.profile.mesh.describe()},
              {"converged", r.converged},
              {"iterations", r.iterations},
              {"functionals", to_json(f)},
              {"c_ell", num(f.c_ell)},
              {"c_theta", num(f.c_theta)},
              {"lambda", num(f.lambda)},
              {"c_ell_norm", num(f.c_ell_norm)},
              {"c_theta_norm", num(f.c_theta_norm)},
              {"c_ell_over_c_theta", num(f.c_ell / f.c_theta)},
              {"focusing_bound", 1.0 / (2.0 * params.alpha)},
              {"tail_fallbacks", r.tail_fallbacks},
              {"dual_route_gap", num(r.dual_route_gap)},
              {"residual_history", history_json(r.history)},
              {"membership", to_json(r.membership)},
              {"lemma_bounds", to_json(r.lemma)},
              {"ode_residual", {{"max", num(r.ode.max_abs)}, {"l2", num(r.ode.l2)}, {"x_lo", r.ode.x_lo}, {"x_hi", r.ode.x_hi}}},
              {"constants", {{"t0", params.t0}, {"delta_l", params.delta_l}, {"delta_u", params.delta_u}}}};
    if (!r.failure.empty()) j["error"] = {{"type", r.failure}, {"message", "iteration did not meet the tolerance"}};
    return j;
}

json to_json(const SweepRow& r) {
    json j = {{"alpha", r.alpha},           {"converged", r.converged},   {"iterations", r.iterations},
              {"c_ell", num(r.c_ell)},      {"c_ell_norm", num(r.c_ell_norm)}, {"c_other_norm", num(r.c_other_norm)},
              {"ratio", num(r.ratio)},      {"gap", num(r.gap)}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace gsqg::cli

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gsqg/errors.hpp"
#include "gsqg/field2d.hpp"
#include "gsqg/fixedpoint.hpp"
#include "gsqg/quadrature.hpp"
#include "gsqg/spline.hpp"
#include "io.hpp"

namespace fs = std::filesystem;
using namespace gsqg;
using namespace gsqg::cli;

namespace {

constexpr const char* kOutEnv = "GSQG_OUTPUT_DIR";

struct RunConfig {
    std::string problem = "r2";
    double alpha = std::nan("");
    std::string mesh;
    double tol = 1e-7;
    int max_iter = 500;
    double damping = 1.0;
    std::string seed = "default";
    std::string tail = "powerlaw";
    int keep_every = 10;
    std::string out = "out";
    std::vector<double> alphas;
    std::string profile;
    bool sinc = false, burgers = false;
    std::vector<double> ratio_alphas;
    std::size_t n = 256;
    double L = 16.0;
    double width = 4.0;
    std::vector<double> xs{0, 1, 4, 16}, ys{0, 1, 4, 16};
    bool dump = false;
};

std::string join(const std::vector<double>& v) {
    std::ostringstream s;
    s.precision(17);
    for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
    return s.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_resolved(const RunConfig& c, const std::string& cmd, const std::string& mesh) {
    std::ofstream o(fs::path(c.out) / "config.resolved.ini");
    o << "# " << cmd << "\n";
    o << "problem = " << c.problem << "\n";
    if (!std::isnan(c.alpha)) o << "alpha = " << fmt(c.alpha) << "\n";
    if (!mesh.empty()) o << "mesh = " << mesh << "\n";
    o << "tol = " << fmt(c.tol) << "\nmax-iter = " << c.max_iter << "\ndamping = " << fmt(c.damping) << "\n";
    o << "seed = " << c.seed << "\ntail = " << c.tail << "\nkeep-every = " << c.keep_every << "\n";
    o << "out = " << c.out << "\n";
    if (!c.alphas.empty()) o << "alphas = " << join(c.alphas) << "\n";
    if (!c.profile.empty()) o << "profile = " << c.profile << "\n";
    if (cmd == "limits") {
        o << "sinc = " << (c.sinc ? "true" : "false") << "\nburgers = " << (c.burgers ? "true" : "false") << "\n";
        if (!c.ratio_alphas.empty()) o << "ratio-alphas = " << join(c.ratio_alphas) << "\n";
    }
    if (cmd == "field2d") {
        o << "n = " << c.n << "\nL = " << fmt(c.L) << "\nwidth = " << fmt(c.width) << "\n";
        o << "xs = " << join(c.xs) << "\nys = " << join(c.ys) << "\ndump = " << (c.dump ? "true" : "false") << "\n";
    }
}

SolveOptions solve_options(const RunConfig& c) {
    SolveOptions o;
    o.tol = c.tol;
    o.max_iter = c.max_iter;
    o.damping = c.damping;
    o.keep_every = c.keep_every;
    if (c.tail == "powerlaw")
        o.tail = TailModel::PowerLaw;
    else if (c.tail == "none")
        o.tail = TailModel::None;
    else
        throw ConfigError("tail must be powerlaw or none");
    return o;
}

bool half_plane(const RunConfig& c) {
    if (c.problem == "r2") return false;
    if (c.problem == "hp") return true;
    throw ConfigError("problem must be r2 or hp");
}

std::string default_mesh(bool hp) { return hp ? "sinh:15:4000" : "power:5:2000:2"; }

void require_alpha(const RunConfig& c) {
    if (std::isnan(c.alpha)) throw CLI::RequiredError("--alpha");
}

std::vector<double> spline_derivative(const std::vector<double>& x, const std::vector<double>& y) {
    const CubicSpline s(x, y, EndCondition::NotAKnot, EndCondition::NotAKnot);
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = s.deriv(x[i]);
    return d;
}

void write_iterates(const std::string& path, const Mesh& m, const std::vector<StoredIterate>& its) {
    Table t{{"iteration", "x", "f"}, {}};
    for (const auto& it : its)
        for (std::size_t i = 0; i < m.size(); ++i) t.rows.push_back({double(it.iteration), m[i], it.f[i]});
    write_csv(path, t);
}

int cmd_solve(RunConfig& c) {
    require_alpha(c);
    const bool hp = half_plane(c);
    if (c.mesh.empty()) c.mesh = default_mesh(hp);
    const auto params = make_alpha_params(c.alpha, hp);
    const Mesh mesh = parse_mesh(c.mesh);
    const auto opt = solve_options(c);
    const fs::path out(c.out);
    write_resolved(c, "solve", c.mesh);
    Table prof{{"x", "f", hp ? "theta" : "omega", "u", "ux", "T_of_f"}, {}};
    json report;
    bool ok;
    std::vector<double> rescaled;
    if (!hp) {
        std::optional<ProfileR2> seed;
        if (c.seed != "default" && c.seed != "barrier") throw ConfigError("full-plane seed must be barrier");
        const auto T = assemble_T_f1form(mesh, params, Plane::Full);
        const auto P1 = assemble_p1(mesh, params);
        const auto r = solve_r2(params, mesh, opt, seed, &T, &P1);
        const auto omega = r.profile.omega();
        const auto ux = P1.apply(omega);
        const auto u = CubicSpline(mesh.nodes(), ux, EndCondition::NotAKnot, EndCondition::NotAKnot).cumulative();
        const auto Tf = T.apply(r.profile.f);
        for (std::size_t i = 0; i < mesh.size(); ++i) prof.rows.push_back({mesh[i], r.profile.f[i], omega[i], u[i], ux[i], Tf[i]});
        write_iterates((out / "iterates.csv").string(), mesh, r.iterates);
        report = to_json(r, params);
        rescaled = r.rescaled;
        ok = r.converged;
    } else {
        std::optional<ProfileHP> seed;
        if (c.seed.rfind("rational:", 0) == 0)
            seed = seed_hp_rational(mesh, std::stod(c.seed.substr(9)));
        else if (c.seed != "default" && c.seed != "lower")
            throw ConfigError("half-plane seed must be lower or rational:<delta>");
        const auto T = assemble_T_f1form(mesh, params, Plane::Half);
        const auto U = assemble_u_hp(mesh, params);
        const auto r = solve_hp(params, mesh, opt, seed, &T, &U);
        const auto theta = r.profile.theta();
        const auto ux = spline_derivative(mesh.nodes(), r.velocity);
        for (std::size_t i = 0; i < mesh.size(); ++i)
            prof.rows.push_back({mesh[i], r.profile.f[i], theta[i], r.velocity[i], ux[i], r.frak_T[i]});
        write_iterates((out / "iterates.csv").string(), mesh, r.iterates);
        report = to_json(r, params);
        rescaled = r.rescaled;
        ok = r.converged;
    }
    write_csv((out / "profile.csv").string(), prof);
    Table resc{{"x", "f_rescaled"}, {}};
    for (std::size_t i = 0; i < rescaled.size(); ++i) resc.rows.push_back({mesh[i], rescaled[i]});
    write_csv((out / "rescaled.csv").string(), resc);
    write_json((out / "report.json").string(), report);
    std::printf("%s alpha=%g iterations=%d c_ell=%.10g %s\n", c.problem.c_str(), c.alpha, report["iterations"].get<int>(),
                report["c_ell"].is_null() ? NAN : report["c_ell"].get<double>(), ok ? "converged" : "NOT converged");
    return ok ? 0 : 1;
}

int cmd_verify(RunConfig& c) {
    require_alpha(c);
    if (c.profile.empty()) throw CLI::RequiredError("--profile");
    const bool hp = half_plane(c);
    const auto params = make_alpha_params(c.alpha, hp);
    const auto t = read_csv(c.profile);
    const Mesh mesh = custom_mesh(column(t, "x"));
    const auto f = column(t, "f");
    write_resolved(c, "verify", "");
    json j = {{"problem", c.problem}, {"alpha", c.alpha}, {"profile", c.profile}};
    MembershipReport mem;
    // Membership is always reported; the functional bounds need c > 0 and may not exist.
    try {
        if (!hp) {
            const ProfileR2 p(mesh, f);
            mem = check_V1(p, params);
            j["lemma_bounds"] = to_json(check_lemma_bounds(p, params, compute_functionals_r2(p, params)));
        } else {
            const ProfileHP p(mesh, f);
            mem = check_V1_hp(p, params);
            const auto fn = compute_functionals_hp(p, params);
            const auto T = assemble_T_f1form(mesh, params, Plane::Half);
            j["lemma_bounds"] = to_json(check_lemma_bounds(p, params, fn, frak_T(p, T, params, fn.tail)));
        }
    } catch (const Error& e) {
        if (mem.checks.empty()) throw;
        j["lemma_bounds"] = {{"error", {{"type", e.kind()}, {"message", e.what()}}}};
    }
    j["membership"] = to_json(mem);
    write_json((fs::path(c.out) / "report.json").string(), j);
    for (const auto& name : mem.failures()) std::printf("FAIL %s (margin %.3g)\n", name.c_str(), mem.get(name).margin);
    std::printf("membership %s\n", mem.passed() ? "passed" : "failed");
    return mem.passed() ? 0 : 1;
}

int cmd_sweep(RunConfig& c) {
    const bool hp = half_plane(c);
    if (c.alphas.empty())
        c.alphas = hp ? std::vector<double>{0.05, 0.15, 0.25, 0.35, 0.45} : std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9};
    if (c.mesh.empty()) c.mesh = hp ? "sinh:15:4000:1e-5" : default_mesh(false);
    const Mesh mesh = parse_mesh(c.mesh);
    write_resolved(c, "sweep", c.mesh);
    Table table{{"alpha", "converged", "iterations", "c_ell", "c_ell_norm", hp ? "c_theta_norm" : "c_omega_norm",
                 "ratio", "lower_bound", "gap"},
                {}};
    Table profiles{{"alpha", "x", "f", "f_rescaled"}, {}};
    json rows = json::array();
    bool ok = true;
    sweep_alpha(c.alphas, hp ? Problem::HP : Problem::R2, [&](double) { return mesh; }, solve_options(c),
                [&](const SweepRow& r) {
                    std::printf("alpha=%g %s c_ell=%.8g gap=%.3g\n", r.alpha, r.converged ? "converged" : r.error.c_str(),
                                r.c_ell, r.gap);
                    ok = ok && r.converged;
                    rows.push_back(to_json(r));
                    table.rows.push_back({r.alpha, double(r.converged), double(r.iterations), r.c_ell, r.c_ell_norm,
                                          r.c_other_norm, hp ? r.ratio : std::nan(""),
                                          hp ? 1.0 / (2.0 * r.alpha) : std::nan(""), r.gap});
                    for (std::size_t i = 0; i < r.x.size(); ++i)
                        profiles.rows.push_back({r.alpha, r.x[i], r.f[i], r.rescaled[i]});
                });
    const fs::path out(c.out);
    write_csv((out / "sweep.csv").string(), table);
    write_csv((out / "sweep_profiles.csv").string(), profiles);
    write_json((out / "sweep.json").string(), {{"problem", c.problem}, {"mesh", c.mesh}, {"rows", rows}});
    return ok ? 0 : 1;
}

int cmd_limits(RunConfig& c) {
    if (!c.sinc && !c.burgers && c.ratio_alphas.empty()) c.sinc = c.burgers = true;
    auto list = [&](std::vector<double> dflt) {
        if (!std::isnan(c.alpha)) return std::vector<double>{c.alpha};
        return c.alphas.empty() ? dflt : c.alphas;
    };
    write_resolved(c, "limits", c.mesh);
    const auto opt = solve_options(c);
    json j;
    bool ok = true;
    if (c.sinc) {
        const Mesh mesh = parse_mesh(c.mesh.empty() ? default_mesh(false) : c.mesh);
        json a = json::array();
        for (double al : list({0.05, 0.02, 0.01})) {
            const auto r = solve_r2(make_alpha_params(al, false), mesh, opt);
            const double g = sinc_limit_gap(r);
            ok = ok && r.converged;
            a.push_back({{"alpha", al}, {"converged", r.converged}, {"gap", g}, {"mesh", mesh.describe()}});
            std::printf("sinc alpha=%g gap=%.4g\n", al, g);
        }
        j["sinc"] = a;
    }
    if (c.burgers) {
        const Mesh mesh = parse_mesh(c.mesh.empty() ? "sinh:15:4000:1e-5" : c.mesh);
        json a = json::array();
        for (double al : list({0.45})) {
            const auto r = solve_hp(make_alpha_params(al, true), mesh, opt);
            const auto g = burgers_limit_gap(r);
            ok = ok && r.converged;
            a.push_back({{"alpha", al}, {"converged", r.converged}, {"gap", g.gap}, {"at", g.at}, {"kappa", g.kappa},
                         {"mesh", mesh.describe()}});
            std::printf("burgers alpha=%g gap=%.4g\n", al, g.gap);
        }
        j["burgers"] = a;
    }
    if (!c.ratio_alphas.empty()) {
        const Mesh mesh = parse_mesh(c.mesh.empty() ? "sinh:15:4000:1e-5" : c.mesh);
        json a = json::array();
        sweep_alpha(c.ratio_alphas, Problem::HP, [&](double) { return mesh; }, opt, [&](const SweepRow& r) {
            ok = ok && r.converged;
            a.push_back({{"alpha", r.alpha}, {"converged", r.converged}, {"c_ell_over_c_theta", r.ratio},
                         {"lower_bound", 1.0 / (2.0 * r.alpha)}});
        });
        j["ratio_table"] = a;
    }
    write_json((fs::path(c.out) / "gaps.json").string(), j);
    return ok ? 0 : 1;
}

int cmd_field2d(RunConfig& c) {
    if (std::isnan(c.alpha)) c.alpha = 0.15;
    const auto params = make_alpha_params(c.alpha, true);
    write_resolved(c, "field2d", "");
    // Boundary profile Theta(x) (odd) and its 1D velocity for comparison.
    std::vector<double> xs1, th1, u1d;
    if (!c.profile.empty()) {
        const auto t = read_csv(c.profile);
        xs1 = column(t, "x");
        th1 = column(t, "theta");
        u1d = column(t, "u");
    } else {
        const auto m = power_mesh(c.L, 2000, 2.0);
        xs1 = m.nodes();
        th1.resize(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) th1[i] = m[i] * std::exp(-m[i] * m[i]);
        u1d = assemble_u_hp(m, params).apply(th1);
    }
    const CubicSpline th_s(xs1, th1, EndCondition::NotAKnot, EndCondition::NotAKnot);
    const CubicSpline u_s(xs1, u1d, EndCondition::NotAKnot, EndCondition::NotAKnot);
    const double xmax = xs1.back();
    auto odd = [&](const CubicSpline& s, double x) {
        const double a = std::min(std::abs(x), xmax);
        return (x < 0 ? -1.0 : 1.0) * s(a);
    };
    Field2D field(c.n, c.L);
    field.fill_upper([&](double x, double y) { return odd(th_s, x) * std::exp(-(y / c.width) * (y / c.width)); });
    velocity_from_theta(field, params);

    const fs::path out(c.out);
    Table sec{{"axis", "value", "s", "theta", "u1", "u2"}, {}};
    for (const auto& r : cross_sections(field, c.xs, c.ys))
        sec.rows.push_back({r.axis == 'x' ? 0.0 : 1.0, r.value, r.s, r.theta, r.u1, r.u2});
    write_csv((out / "sections.csv").string(), sec);

    const std::size_t z = field.zero_row();
    const std::size_t j1 = static_cast<std::size_t>(std::lround((1.0 + c.L) / field.h()));
    const double ratio = field.at(field.u1, z, j1) / odd(u_s, 1.0);
    Table trace{{"x", "theta", "u1", "u1d_scaled"}, {}};
    double err = 0.0, sup = 0.0, u2max = 0.0, umax = 0.0;
    for (double v : field.u1) umax = std::max(umax, std::abs(v));
    for (std::size_t j = 0; j < field.n; ++j) {
        const double x = field.coord(j), ref = ratio * odd(u_s, x);
        trace.rows.push_back({x, field.at(field.theta, z, j), field.at(field.u1, z, j), ref});
        u2max = std::max(u2max, std::abs(field.at(field.u2, z, j)));
        if (std::abs(x) <= 4.0) {
            err = std::max(err, std::abs(field.at(field.u1, z, j) - ref));
            sup = std::max(sup, std::abs(ref));
        }
    }
    write_csv((out / "trace.csv").string(), trace);
    if (c.dump) {
        dump_raw((out / "theta.bin").string(), field, field.theta);
        dump_raw((out / "u1.bin").string(), field, field.u1);
        dump_raw((out / "u2.bin").string(), field, field.u2);
    }
    write_json((out / "field.json").string(), {{"alpha", c.alpha},
                                               {"n", c.n},
                                               {"L", c.L},
                                               {"u2_boundary_max", u2max},
                                               {"u1_sup", umax},
                                               {"normalization_at_x1", ratio},
                                               {"shape_error_rel", sup > 0 ? err / sup : 0.0}});
    std::printf("field2d n=%zu u2|y=0 max=%.3g (u1 sup %.3g) shape error %.3g\n", c.n, u2max, umax, sup > 0 ? err / sup : 0.0);
    return 0;
}

// key = value lines become --key value ahead of the command-line flags.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw ConfigError("config line without '=': " + line);
        const auto key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (val == "true") {
            toks.push_back("--" + key);
        } else if (val != "false") {
            toks.push_back("--" + key);
            toks.push_back(val);
        }
    }
    return toks;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"Self-similar profiles of generalized SQG: fixed-point solver and diagnostics"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto common = [&](CLI::App* s) {
        s->add_option("--config", "key = value file; command-line flags take precedence");
        s->add_option("--problem", c.problem, "r2 or hp")->capture_default_str();
        s->add_option("--alpha", c.alpha, "alpha");
        s->add_option("--mesh", c.mesh, "power:L:n[:p] | sinh:a:n[:s] | uniform:L:n");
        s->add_option("--tol", c.tol)->capture_default_str();
        s->add_option("--max-iter", c.max_iter)->capture_default_str();
        s->add_option("--damping", c.damping)->capture_default_str();
        s->add_option("--seed", c.seed, "barrier | lower | rational:<delta>")->capture_default_str();
        s->add_option("--tail", c.tail, "powerlaw | none")->capture_default_str();
        s->add_option("--keep-every", c.keep_every, "store every k-th iterate")->capture_default_str();
        s->add_option("--out", c.out, std::string("output directory (env ") + kOutEnv + ")")->capture_default_str();
        s->add_option("--alphas", c.alphas, "comma-separated alpha list")->delimiter(',');
        s->add_option("--profile", c.profile, "profile.csv to read");
    };
    auto* solve = app.add_subcommand("solve", "iterate the fixed-point map");
    auto* sweep = app.add_subcommand("sweep", "solve over a list of alphas");
    auto* verify = app.add_subcommand("verify", "membership and bound checks of a profile.csv");
    auto* limits = app.add_subcommand("limits", "sinc and Burgers limit gaps");
    auto* f2d = app.add_subcommand("field2d", "2D velocity from a boundary profile");
    for (auto* s : {solve, sweep, verify, limits, f2d}) common(s);
    limits->add_flag("--sinc", c.sinc);
    limits->add_flag("--burgers", c.burgers);
    limits->add_option("--ratio-alphas", c.ratio_alphas)->delimiter(',');
    f2d->add_option("--n", c.n)->capture_default_str();
    f2d->add_option("--L", c.L)->capture_default_str();
    f2d->add_option("--width", c.width, "Gaussian width of the y profile")->capture_default_str();
    f2d->add_option("--xs", c.xs)->delimiter(',');
    f2d->add_option("--ys", c.ys)->delimiter(',');
    f2d->add_flag("--dump", c.dump, "write raw theta/u1/u2 fields");

    // Assemble argv: subcommand, config tokens, env override, then the user's flags.
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::ptrdiff_t at = 1;
        for (std::size_t k = 1; k + 1 < args.size(); ++k) {
            if (args[k] != "--config") continue;
            const auto toks = config_tokens(args[k + 1]);
            args.erase(args.begin() + k, args.begin() + k + 2);
            args.insert(args.begin() + 1, toks.begin(), toks.end());
            at += static_cast<std::ptrdiff_t>(toks.size());
            break;
        }
        if (const char* env = std::getenv(kOutEnv); env && *env && !args.empty())
            args.insert(args.begin() + at, {std::string("--out"), std::string(env)});
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        fs::create_directories(c.out);
        if (solve->parsed()) return cmd_solve(c);
        if (sweep->parsed()) return cmd_sweep(c);
        if (verify->parsed()) return cmd_verify(c);
        if (limits->parsed()) return cmd_limits(c);
        return cmd_field2d(c);
    } catch (const CLI::RequiredError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s: %s\n", e.kind(), e.what());
        std::error_code ec;
        if (fs::is_directory(c.out, ec))
            write_json((fs::path(c.out) / "error.json").string(), {{"error", {{"type", e.kind()}, {"message", e.what()}}}});
        return 1;
    }
}

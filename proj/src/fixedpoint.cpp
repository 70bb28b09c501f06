#include "gsqg/fixedpoint.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/errors.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

namespace {

double sup_weighted_change(const Mesh& m, const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(m[i] * (a[i] - b[i])));
    return d;
}

void blend(std::vector<double>& next, const std::vector<double>& prev, double damping) {
    if (damping >= 1.0) return;
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = (1.0 - damping) * prev[i] + damping * next[i];
    next[0] = 1.0;
}

// f(y) on [0, X] from the spline, beyond X from the tail model.
double eval_hp(const CubicSpline& s, const Tail& tail, double y) {
    if (y <= tail.X) return std::clamp(s(y), 0.0, 1.0);
    if (tail.model == TailModel::PowerLaw) return tail.f_end * std::pow(y / tail.X, -tail.delta);
    return tail.f_end;
}

}  // namespace

SolveReportR2 solve_r2(const AlphaParams& params, const Mesh& mesh, const SolveOptions& opt,
                       std::optional<ProfileR2> seed, const OperatorMatrix* T, const OperatorMatrix* P1) {
    if (!(opt.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw DomainError("damping must lie in (0, 1]");
    std::optional<OperatorMatrix> own_T, own_P1;
    if (!T) T = &own_T.emplace(assemble_T_f1form(mesh, params, Plane::Full));
    if (!P1) P1 = &own_P1.emplace(assemble_p1(mesh, params));

    SolveReportR2 rep;
    ProfileR2 p = seed ? *seed : seed_r2(mesh);
    if (opt.keep_every > 0) rep.iterates.push_back({0, p.f});
    FunctionalsR2 fn = compute_functionals_r2(p, params);
    for (int k = 0; k < opt.max_iter; ++k) {
        ProfileR2 g = apply_R_alpha(p, *T, fn);
        if (opt.damping < 1.0) {
            blend(g.f, p.f, opt.damping);
            g.update_support();
        }
        const FunctionalsR2 fg = compute_functionals_r2(g, params);
        const IterRecord rec{sup_weighted_change(mesh, g.f, p.f), std::abs(fg.c_ell - fn.c_ell)};
        rep.history.push_back(rec);
        p = std::move(g);
        fn = fg;
        rep.iterations = k + 1;
        if (opt.keep_every > 0 && rep.iterations % opt.keep_every == 0) rep.iterates.push_back({rep.iterations, p.f});
        if (rec.d_state < opt.tol && rec.d_c_ell < opt.tol) {
            rep.converged = true;
            break;
        }
    }
    if (opt.keep_every > 0 && (rep.iterates.empty() || rep.iterates.back().iteration != rep.iterations))
        rep.iterates.push_back({rep.iterations, p.f});
    if (!rep.converged) rep.failure = "MaxIterExceeded";

    rep.profile = p;
    rep.functionals = fn;
    rep.support_radius = mesh[p.support_idx];
    rep.membership = check_V1(p, params);
    rep.lemma = check_lemma_bounds(p, params, fn);
    rep.ode = ode_residual_r2(p, fn, *P1);
    if (fn.c_ell < 0.0) {
        rep.c_ell_tilde = fn.c_ell * std::pow(fn.lambda, 2.0 * params.alpha - 2.0);
        rep.rescaled = rescale_profile(mesh.nodes(), p.f, fn.lambda, 0.0);
    } else if (rep.converged) {
        rep.converged = false;
        rep.failure = "converged profile has c_ell >= 0";
    }
    return rep;
}

SolveReportHP solve_hp(const AlphaParams& params, const Mesh& mesh, const SolveOptions& opt,
                       std::optional<ProfileHP> seed, const OperatorMatrix* T, const OperatorMatrix* U) {
    if (!params.half_plane) throw DomainError("half-plane constants are not available for this alpha");
    if (!(opt.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw DomainError("damping must lie in (0, 1]");
    std::optional<OperatorMatrix> own_T, own_U;
    if (!T) T = &own_T.emplace(assemble_T_f1form(mesh, params, Plane::Half));
    if (!U) U = &own_U.emplace(assemble_u_hp(mesh, params));

    SolveReportHP rep;
    bool last_fell_back = false;
    auto functionals = [&](const ProfileHP& q) {
        last_fell_back = false;
        try {
            return compute_functionals_hp(q, params, opt.tail);
        } catch (const TailFitError&) {
            if (opt.tail == TailModel::None) throw;
            // Early iterates can decay too slowly for a finite tail integral; truncate those.
            last_fell_back = true;
            ++rep.tail_fallbacks;
            return compute_functionals_hp(q, params, TailModel::None);
        }
    };

    ProfileHP p = seed ? *seed : seed_hp_lower(mesh, params);
    if (opt.keep_every > 0) rep.iterates.push_back({0, p.f});
    FunctionalsHP fn = functionals(p);
    for (int k = 0; k < opt.max_iter; ++k) {
        ProfileHP g = apply_Re_alpha(p, *T, params, fn);
        blend(g.f, p.f, opt.damping);
        const FunctionalsHP fg = functionals(g);
        const IterRecord rec{sup_weighted_change(mesh, g.f, p.f), std::abs(fg.c_ell - fn.c_ell)};
        rep.history.push_back(rec);
        p = std::move(g);
        fn = fg;
        rep.iterations = k + 1;
        if (opt.keep_every > 0 && rep.iterations % opt.keep_every == 0) rep.iterates.push_back({rep.iterations, p.f});
        if (rec.d_state < opt.tol && rec.d_c_ell < opt.tol) {
            rep.converged = true;
            break;
        }
    }
    if (opt.keep_every > 0 && (rep.iterates.empty() || rep.iterates.back().iteration != rep.iterations))
        rep.iterates.push_back({rep.iterations, p.f});
    if (!rep.converged) rep.failure = "MaxIterExceeded";
    if (rep.converged && last_fell_back) {
        rep.converged = false;
        rep.failure = "tail fit failed on the converged profile";
    }

    rep.profile = p;
    rep.functionals = fn;
    rep.frak_T = frak_T(p, *T, params, fn.tail);
    rep.velocity = velocity_hp(p, *U, params, fn.tail);
    {
        const auto t2 = frak_T_via_u(p, *U, params, fn);
        double sup = 0.0, gap = 0.0;
        for (std::size_t i = 1; i < mesh.size(); ++i) {
            sup = std::max(sup, std::abs(rep.frak_T[i]));
            if (mesh[i] <= 0.5 * mesh.back()) gap = std::max(gap, std::abs(rep.frak_T[i] - t2[i]));
        }
        rep.dual_route_gap = sup > 0.0 ? gap / sup : 0.0;
    }
    rep.membership = check_V1_hp(p, params);
    rep.lemma = check_lemma_bounds(p, params, fn, rep.frak_T);
    rep.ode = ode_residual_hp(p, fn, *U, params);
    if (std::isfinite(fn.lambda)) {
        const CubicSpline s(mesh.nodes(), p.f, EndCondition::ZeroSlope, EndCondition::NotAKnot);
        rep.rescaled.resize(mesh.size());
        for (std::size_t i = 0; i < mesh.size(); ++i) rep.rescaled[i] = eval_hp(s, fn.tail, fn.lambda * mesh[i]);
    } else if (rep.converged) {
        rep.converged = false;
        rep.failure = "converged profile has 2 alpha c_ell <= 1";
    }
    return rep;
}

double sinc_limit_gap(const Mesh& mesh, const std::vector<double>& f, std::size_t support_idx) {
    const double first_zero = M_PI / std::sqrt(6.0);
    const double edge = std::max(mesh[std::min(support_idx + 1, mesh.size() - 1)], first_zero);
    double gap = 0.0;
    for (std::size_t i = 0; i < mesh.size() && mesh[i] <= edge; ++i) {
        const double s = std::sqrt(6.0) * mesh[i];
        const double sinc = s == 0.0 ? 1.0 : std::sin(s) / s;
        gap = std::max(gap, std::abs(f[i] - sinc));
    }
    return gap;
}

double sinc_limit_gap(const SolveReportR2& r) {
    return sinc_limit_gap(r.profile.mesh, r.profile.f, r.profile.support_idx);
}

double burgers_profile(double x) {
    const double x2 = x * x;
    double f = 1.0 / (1.0 + std::cbrt(x2));  // within a factor of 2 of the root on both ends
    for (int it = 0; it < 50; ++it) {
        const double r = f + x2 * f * f * f - 1.0;
        const double step = r / (1.0 + 3.0 * x2 * f * f);
        f -= step;
        if (std::abs(step) <= 1e-15 * f) return f;
    }
    throw NewtonFail("Burgers cubic did not converge at x = " + std::to_string(x));
}

BurgersGap burgers_limit_gap(const Mesh& mesh, const std::vector<double>& f, double c_frak, double x_max,
                             int samples) {
    if (!(c_frak > 0.0)) throw DomainError("Burgers rescaling needs frak c > 0");
    BurgersGap out;
    out.kappa = 2.0 / std::sqrt(c_frak);
    const CubicSpline s(mesh.nodes(), f, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    for (int k = 0; k < samples; ++k) {
        const double x = x_max * k / (samples - 1);
        const double y = out.kappa * x;
        const double v = y <= mesh.back() ? s(y) : f.back();
        const double d = std::abs(v - burgers_profile(x));
        if (d > out.gap) {
            out.gap = d;
            out.at = x;
        }
    }
    return out;
}

BurgersGap burgers_limit_gap(const SolveReportHP& r, double x_max) {
    return burgers_limit_gap(r.profile.mesh, r.profile.f, r.functionals.c_frak, x_max);
}

std::vector<SweepRow> sweep_alpha(const std::vector<double>& alphas, Problem which,
                                  const std::function<Mesh(double)>& mesh_for, const SolveOptions& opt,
                                  const std::function<void(const SweepRow&)>& on_row) {
    std::vector<SweepRow> rows;
    for (double a : alphas) {
        SweepRow row;
        row.alpha = a;
        try {
            const auto params = make_alpha_params(a, which == Problem::HP);
            const Mesh mesh = mesh_for(a);
            if (which == Problem::R2) {
                const auto r = solve_r2(params, mesh, opt);
                row.converged = r.converged;
                row.error = r.failure;
                row.iterations = r.iterations;
                row.c_ell = r.functionals.c_ell;
                row.c_ell_norm = r.c_ell_tilde;
                row.c_other_norm = r.c_ell_tilde;
                row.gap = sinc_limit_gap(r);
                row.x = r.profile.mesh.nodes();
                row.f = r.profile.f;
                row.rescaled = r.rescaled;
            } else {
                const auto r = solve_hp(params, mesh, opt);
                row.converged = r.converged;
                row.error = r.failure;
                row.iterations = r.iterations;
                row.c_ell = r.functionals.c_ell;
                row.c_ell_norm = r.functionals.c_ell_norm;
                row.c_other_norm = r.functionals.c_theta_norm;
                row.ratio = r.functionals.c_ell / r.functionals.c_theta;
                row.gap = burgers_limit_gap(r).gap;
                row.x = r.profile.mesh.nodes();
                row.f = r.profile.f;
                row.rescaled = r.rescaled;
            }
        } catch (const Error& e) {
            row.converged = false;
            row.error = std::string(e.kind()) + ": " + e.what();
        }
        rows.push_back(row);
        if (on_row) on_row(row);
    }
    return rows;
}

}  // namespace gsqg

#include "gsqg/operators_r2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/errors.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

ProfileR2::ProfileR2(Mesh m, std::vector<double> values) : mesh(std::move(m)), f(std::move(values)) {
    if (f.size() != mesh.size()) throw DomainError("profile size does not match mesh");
    update_support();
}

void ProfileR2::update_support() {
    support_idx = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > 0.0) support_idx = i;
}

std::vector<double> ProfileR2::omega() const {
    std::vector<double> w(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) w[i] = -mesh[i] * f[i];
    return w;
}

ProfileR2 seed_r2(const Mesh& mesh) {
    std::vector<double> f(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) f[i] = std::max(0.0, 1.0 - mesh[i] * mesh[i]);
    return ProfileR2(mesh, std::move(f));
}

FunctionalsR2 compute_functionals_r2(const ProfileR2& p, const AlphaParams& params) {
    const double a = params.alpha, c1 = params.c1;
    const std::size_t n = p.f.size();
    const double X = p.mesh.back();
    FunctionalsR2 out;
    out.f_inf = p.support_idx + 1 < n ? 0.0 : p.f.back();

    std::vector<double> one_minus(n), shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        one_minus[i] = 1.0 - p.f[i];
        shifted[i] = p.f[i] - out.f_inf;
    }
    one_minus[0] = 0.0;
    const CubicSpline s1(p.mesh.nodes(), one_minus, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    const double tail = (1.0 - p.f.back()) * std::pow(X, -2.0 * a) / (2.0 * a);
    out.c = (2.0 * a * (1.0 + 2.0 * a) / 3.0) * c1 * (integrate_spline_power(s1, -1.0 - 2.0 * a) + tail);

    const CubicSpline sf(p.mesh.nodes(), shifted, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    out.b = 2.0 * c1 * integrate_spline_power(sf, 1.0 - 2.0 * a);

    // -((1+2a)/3) c1 int f' xi^{-2a}, with the boundary term of the truncation
    double fprime_int = 0.0;
    {
        const auto& x = p.mesh.nodes();
        for (std::size_t j = 0; j < sf.cells(); ++j) {
            auto fp = [&](double xi) {
                const double u = xi - x[j];
                return (sf.b(j) + u * (2.0 * sf.c(j) + 3.0 * u * sf.d(j))) * std::pow(xi, -2.0 * a);
            };
            fprime_int += integrate_graded(fp, x[j], x[j + 1], {0.0});
        }
    }
    out.c_check = -((1.0 + 2.0 * a) / 3.0) * c1 * fprime_int;

    if (!(out.c > 1e-14)) throw DegenerateProfile("c(f) is not positive; profile has collapsed to a constant");
    out.c_ell = out.c - out.b;
    out.c_omega = out.c_ell;
    out.c_ell_norm = params.c_ell_norm_r2();
    out.lambda = out.c_ell < 0.0 ? std::pow(-out.c_ell * (2.0 - 2.0 * a), 1.0 / (2.0 - 2.0 * a))
                                 : std::numeric_limits<double>::quiet_NaN();
    return out;
}

ProfileR2 apply_R_alpha(const ProfileR2& p, const OperatorMatrix& T, const FunctionalsR2& fn) {
    const auto tf = T.apply(p.f);
    std::vector<double> g(tf.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::max(0.0, 1.0 + tf[i] / fn.c);
    g[0] = 1.0;
    return ProfileR2(p.mesh, std::move(g));
}

ProfileR2 apply_R_alpha(const ProfileR2& p, const OperatorMatrix& T, const AlphaParams& params) {
    return apply_R_alpha(p, T, compute_functionals_r2(p, params));
}

std::vector<double> T_via_p1(const ProfileR2& p, const OperatorMatrix& P1) {
    const auto ux = P1.apply(p.omega());  // v' - c_ell, even
    const CubicSpline s(p.mesh.nodes(), ux, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    const auto v = s.cumulative();
    std::vector<double> t(ux.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = v[i] / p.mesh[i] - ux[0];
    return t;
}

ResidualReport ode_residual_r2(const ProfileR2& p, const FunctionalsR2& fn, const OperatorMatrix& P1,
                               double window) {
    const std::size_t n = p.f.size();
    ResidualReport rep;
    rep.pointwise.assign(n, 0.0);
    const auto om = p.omega();
    const auto ux = P1.apply(om);
    const CubicSpline su(p.mesh.nodes(), ux, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    const auto u = su.cumulative();  // P0(Omega), odd, u(0) = 0
    const CubicSpline so(p.mesh.nodes(), om, EndCondition::Natural, EndCondition::NotAKnot);
    rep.x_lo = p.mesh[1];
    rep.x_hi = window * p.mesh[p.support_idx];
    double dmax = 0.0;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = so.deriv(p.mesh[i]);
        if (p.mesh[i] <= rep.x_hi) dmax = std::max(dmax, std::abs(d[i]));
    }
    if (dmax == 0.0) return rep;
    double ss = 0.0;
    for (std::size_t i = 1; i < n && p.mesh[i] <= rep.x_hi; ++i) {
        const double r = (fn.c_ell * p.mesh[i] + u[i]) * d[i] - (fn.c_omega + ux[i]) * om[i];
        rep.pointwise[i] = r / dmax;
        rep.max_abs = std::max(rep.max_abs, std::abs(r) / dmax);
        ss += (r / dmax) * (r / dmax);
        ++rep.count;
    }
    rep.l2 = rep.count ? std::sqrt(ss / rep.count) : 0.0;
    return rep;
}

std::vector<double> rescale_profile(const std::vector<double>& x, const std::vector<double>& f, double lambda,
                                    double outside) {
    const CubicSpline s(x, f, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double y = lambda * x[i];
        out[i] = y > x.back() ? outside : std::max(0.0, s(y));
    }
    return out;
}

}  // namespace gsqg

#include "gsqg/operators_hp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/errors.hpp"
#include "gsqg/specfun.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

namespace {

constexpr int kMaxSeries = 4000;
constexpr double kSeriesRho = 0.9;

// int_0^1 w^{delta+2a-2} F1_{-2a}(rho w) dw
double tail_T_integral(double a, double delta, double rho) {
    const double g = -2.0 * a;
    if (rho <= kSeriesRho) {
        double sum = 0.0, ak = 1.0, pw = rho * rho;
        for (int k = 1; k < kMaxSeries; ++k) {
            const double term = ak * (2 * k - g) / (k * (2.0 * k + 1)) * pw / (2 * k + delta + 2 * a - 1);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum) || pw == 0.0) break;
            ak *= (g - (2 * k - 1)) * (g - 2 * k) / ((2.0 * k) * (2.0 * k + 1));
            pw *= rho * rho;
        }
        return sum;
    }
    auto fn = [&](double w) { return std::pow(w, delta + 2 * a - 2) * specfun::f1(g, rho * w); };
    std::vector<double> sing{0.0};
    if (1.0 / rho <= 1.0) sing.push_back(1.0 / rho);
    return integrate_graded(fn, 0.0, 1.0, sing);
}

// int_0^1 w^{delta+2a-3} [(1 - rho w)^{-2a} - (1 + rho w)^{-2a}] dw
double tail_U_integral(double a, double delta, double rho) {
    if (rho <= kSeriesRho) {
        double sum = 0.0, coef = 2.0 * a, pw = rho;  // (2a)_m / m! at m = 1
        for (int m = 1; m < kMaxSeries; m += 2) {
            const double term = 2.0 * coef * pw / (delta + 2 * a - 2 + m);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum) || pw == 0.0) break;
            coef *= (2 * a + m) / (m + 1.0) * (2 * a + m + 1) / (m + 2.0);
            pw *= rho * rho;
        }
        return sum;
    }
    auto fn = [&](double w) {
        const double gap = std::abs(1 - rho * w);
        if (gap == 0.0) return 0.0;  // graded nodes can round onto the integrable singularity
        return std::pow(w, delta + 2 * a - 3) * (std::pow(gap, -2 * a) - std::pow(1 + rho * w, -2 * a));
    };
    std::vector<double> sing{0.0};
    if (1.0 / rho <= 1.0) sing.push_back(1.0 / rho);
    return integrate_graded(fn, 0.0, 1.0, sing);
}

}  // namespace

ProfileHP::ProfileHP(Mesh m, std::vector<double> values) : mesh(std::move(m)), f(std::move(values)) {
    if (f.size() != mesh.size()) throw DomainError("profile size does not match mesh");
}

std::vector<double> ProfileHP::theta() const {
    std::vector<double> t(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) t[i] = mesh[i] * f[i];
    return t;
}

double barrier_lower(const AlphaParams& params, double x) {
    const double s = x / params.t0;
    return std::exp(-params.delta_l * std::log1p(s * s));
}

double barrier_upper(const AlphaParams& params, double x) {
    if (x <= params.t0) return 1.0;
    return std::pow(params.t0 / x, params.delta_u);
}

ProfileHP seed_hp_lower(const Mesh& mesh, const AlphaParams& params) {
    if (!params.half_plane) throw DomainError("half-plane constants are not available for this alpha");
    std::vector<double> f(mesh.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = barrier_lower(params, mesh[i]);
    return ProfileHP(mesh, std::move(f));
}

ProfileHP seed_hp_rational(const Mesh& mesh, double delta) {
    std::vector<double> f(mesh.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(1.0 + mesh[i] * mesh[i], -delta);
    return ProfileHP(mesh, std::move(f));
}

Tail fit_tail(const ProfileHP& p, const AlphaParams& params, TailModel model) {
    Tail t;
    t.model = model;
    t.X = p.mesh.back();
    t.f_end = p.f.back();
    if (model == TailModel::None || !(t.f_end > 0.0)) {
        t.model = TailModel::None;
        return t;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (std::size_t i = p.f.size(); i-- > 1;) {
        if (p.mesh[i] < 0.1 * t.X) break;
        if (!(p.f[i] > 0.0)) continue;
        const double lx = std::log(p.mesh[i]), ly = std::log(p.f[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++k;
    }
    if (k < 3) throw TailFitError("too few nodes in the last decade to fit the tail");
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    t.delta = -slope;
    if (!(t.delta > 1.0 - 2.0 * params.alpha + 1e-6))
        throw TailFitError("fitted tail exponent " + std::to_string(t.delta) + " makes the far-field integral diverge");
    return t;
}

FunctionalsHP compute_functionals_hp(const ProfileHP& p, const AlphaParams& params, TailModel model) {
    if (!params.half_plane) throw DomainError("half-plane constants are not available for this alpha");
    const double a = params.alpha, c0 = params.c0;
    const std::size_t n = p.f.size();
    FunctionalsHP out;
    out.tail = fit_tail(p, params, model);
    const double X = out.tail.X;

    const CubicSpline sf(p.mesh.nodes(), p.f, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    if (out.tail.model == TailModel::PowerLaw)
        out.b_tail = 4.0 * c0 * out.tail.f_end * std::pow(X, 1.0 - 2.0 * a) / (out.tail.delta + 2.0 * a - 1.0);
    out.b_frak = 4.0 * c0 * integrate_spline_power(sf, -2.0 * a) + out.b_tail;

    std::vector<double> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = 1.0 - p.f[i];
    om[0] = 0.0;
    const CubicSpline s1(p.mesh.nodes(), om, EndCondition::ZeroSlope, EndCondition::NotAKnot);
    double c_tail = std::pow(X, -1.0 - 2.0 * a) / (1.0 + 2.0 * a);
    if (out.tail.model == TailModel::PowerLaw)
        c_tail -= out.tail.f_end * std::pow(X, -1.0 - 2.0 * a) / (1.0 + 2.0 * a + out.tail.delta);
    else
        c_tail *= 1.0 - p.f.back();
    out.c_frak = (8.0 * (1.0 + 2.0 * a) * (1.0 + a) / 3.0) * c0 * (integrate_spline_power(s1, -2.0 - 2.0 * a) + c_tail);

    out.c_ell = 1.0 + out.b_frak;
    out.c_theta = 1.0;
    const double m = 2.0 * a * out.c_ell - 1.0;
    out.lambda = m > 0.0 ? std::pow(m, 1.0 / (1.0 - 2.0 * a)) : std::numeric_limits<double>::quiet_NaN();
    out.c_ell_norm = out.c_ell / m;
    out.c_theta_norm = out.c_theta / m;
    return out;
}

std::vector<double> frak_T(const ProfileHP& p, const OperatorMatrix& T, const AlphaParams& params, const Tail& tail) {
    auto t = T.apply(p.f);
    if (tail.model != TailModel::PowerLaw) return t;
    const double a = params.alpha;
    const double pref = 2.0 * params.c0 * tail.delta * tail.f_end * std::pow(tail.X, 1.0 - 2.0 * a);
    for (std::size_t i = 1; i < t.size(); ++i) t[i] += pref * tail_T_integral(a, tail.delta, p.mesh[i] / tail.X);
    return t;
}

std::vector<double> velocity_hp(const ProfileHP& p, const OperatorMatrix& U, const AlphaParams& params,
                                const Tail& tail) {
    auto u = U.apply(p.theta());
    if (tail.model != TailModel::PowerLaw) return u;
    const double a = params.alpha;
    const double pref = (-params.c0 / a) * tail.f_end * std::pow(tail.X, 2.0 - 2.0 * a);
    for (std::size_t i = 1; i < u.size(); ++i) u[i] += pref * tail_U_integral(a, tail.delta, p.mesh[i] / tail.X);
    return u;
}

std::vector<double> frak_T_via_u(const ProfileHP& p, const OperatorMatrix& U, const AlphaParams& params,
                                 const FunctionalsHP& fn) {
    const auto u = velocity_hp(p, U, params, fn.tail);
    std::vector<double> t(u.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = u[i] / p.mesh[i] + fn.b_frak;
    return t;
}

ProfileHP apply_Re_alpha(const ProfileHP& p, const std::vector<double>& frakT) {
    const std::size_t n = p.f.size();
    std::vector<double> g(n), integrand(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        if (frakT[i] < -1e-10)
            throw NegativeT("frak T is negative at x = " + std::to_string(p.mesh[i]));
        const double t = std::max(0.0, frakT[i]);
        integrand[i] = t / (p.mesh[i] * (1.0 + t));
    }
    // 𝔗 ~ (𝔠/2) y^2 near 0, so the integrand vanishes linearly there.
    g[0] = 1.0;
    double acc = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        acc += 0.5 * (integrand[i] + integrand[i - 1]) * p.mesh.width(i - 1);
        g[i] = std::exp(-acc);
    }
    return ProfileHP(p.mesh, std::move(g));
}

ProfileHP apply_Re_alpha(const ProfileHP& p, const OperatorMatrix& T, const AlphaParams& params,
                         const FunctionalsHP& fn) {
    return apply_Re_alpha(p, frak_T(p, T, params, fn.tail));
}

ResidualReportHP ode_residual_hp(const ProfileHP& p, const FunctionalsHP& fn, const OperatorMatrix& U,
                                 const AlphaParams& params, double window) {
    ResidualReportHP rep;
    const std::size_t n = p.f.size();
    const auto th = p.theta();
    const auto u = velocity_hp(p, U, params, fn.tail);
    const CubicSpline st(p.mesh.nodes(), th, EndCondition::Natural, EndCondition::NotAKnot);
    rep.x_lo = p.mesh[1];
    rep.x_hi = window * p.mesh.back();
    std::vector<double> d(n);
    double dmax = 0.0;
    for (std::size_t i = 1; i < n && p.mesh[i] <= rep.x_hi; ++i) {
        d[i] = st.deriv(p.mesh[i]);
        dmax = std::max(dmax, std::abs(d[i]));
    }
    if (dmax == 0.0) return rep;
    double ss = 0.0;
    for (std::size_t i = 1; i < n && p.mesh[i] <= rep.x_hi; ++i) {
        const double r = ((fn.c_ell * p.mesh[i] + u[i]) * d[i] - fn.c_theta * th[i]) / dmax;
        rep.max_abs = std::max(rep.max_abs, std::abs(r));
        ss += r * r;
        ++rep.count;
    }
    rep.l2 = std::sqrt(ss / rep.count);
    return rep;
}

}  // namespace gsqg

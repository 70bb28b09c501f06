#include "gsqg/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gsqg/errors.hpp"
#include "gsqg/specfun.hpp"

namespace gsqg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxT0Doublings = 200;
constexpr int kMaxBisection = 400;

// log Gamma(z + a) / Gamma(z + b). For large z the two lgammas cancel
// catastrophically, so use the Bernoulli-polynomial expansion instead.
double log_gamma_ratio(double z, double a, double b) {
    if (z < 1e3) return lanczos_lgamma(z + a) - lanczos_lgamma(z + b);
    auto B2 = [](double x) { return x * x - x + 1.0 / 6.0; };
    auto B3 = [](double x) { return x * x * x - 1.5 * x * x + 0.5 * x; };
    auto B4 = [](double x) { return x * x * x * x - 2.0 * x * x * x + x * x - 1.0 / 30.0; };
    return (a - b) * std::log(z) + (B2(a) - B2(b)) / (2.0 * z) - (B3(a) - B3(b)) / (6.0 * z * z) +
           (B4(a) - B4(b)) / (12.0 * z * z * z);
}

double band_value(double alpha, double t0, double delta) {
    return std::exp(log_gamma_ratio(delta, 1.0, alpha + 0.5) + (2.0 * alpha - 1.0) * std::log(t0));
}

double band_lower(double alpha) {
    return std::pow(2.0, 2.0 * alpha) * lanczos_gamma(2.0 + alpha) * lanczos_gamma(0.5 - alpha) /
           (3.0 * kPi * lanczos_gamma(1.0 - alpha));
}

// delta >= 1/2 with band_value = 1.5 K, or NaN when even delta = 1/2 overshoots 2K.
double solve_delta(double alpha, double t0) {
    const double k = band_lower(alpha);
    const double target = 1.5 * k;
    if (band_value(alpha, t0, 0.5) > 2.0 * k) return kNaN;
    if (band_value(alpha, t0, 0.5) >= k) return 0.5;
    double lo = 0.5, hi = 1.0;
    int guard = 0;
    while (band_value(alpha, t0, hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (++guard > kMaxBisection) throw NoFeasibleT0("delta_l bracket search did not terminate");
    }
    for (int it = 0; it < kMaxBisection && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (band_value(alpha, t0, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double const_c0(double alpha) {
    return std::pow(2.0, 2.0 * alpha - 1.0) * lanczos_gamma(1.0 + alpha) /
           (kPi * lanczos_gamma(1.0 - alpha));
}

double const_c1(double alpha) {
    return std::pow(2.0, 2.0 * alpha - 1.0) * lanczos_gamma(0.5 + alpha) /
           (std::sqrt(kPi) * lanczos_gamma(1.0 - alpha));
}

double const_eta(double alpha) {
    const double base =
        3.0 / (2.0 * (3.0 - 2.0 * alpha) * (5.0 - 2.0 * alpha) * (1.0 + std::pow(4.0, alpha)));
    return 2.0 * std::pow(base, 1.0 / std::min(alpha, 1.0 - alpha));
}

double const_c0_tp(double alpha) {
    const double a = alpha;
    const double num = (std::pow(4.0, 1.0 + a) - 4.0 + a - 4.0 * a * a * a) * lanczos_gamma(a);
    const double den = 2.0 * kPi * a * (5.0 - 2.0 * a) * (3.0 - 2.0 * a) * (1.0 - 2.0 * a) *
                       lanczos_gamma(2.0 - a);
    return num / den;
}

bool t0_conditions_hold(double alpha, double t0) {
    const double ctp = const_c0_tp(alpha);
    const double first = std::max(1.0 / ctp, (1.0 - 2.0 * alpha) / (2.0 * alpha * ctp));
    const double second = std::pow(2.0, std::pow(2.0, alpha) + 2.0) * lanczos_gamma(2.0 + alpha) *
                          lanczos_gamma(0.5 - alpha) /
                          (3.0 * kPi * alpha * lanczos_gamma(1.0 - alpha));
    return std::pow(t0, 0.5 - alpha) > first && std::pow(t0, 0.5 + alpha) > second;
}

double AlphaParams::delta_band_value(double delta) const { return band_value(alpha, t0, delta); }

double AlphaParams::delta_band_lower() const { return band_lower(alpha); }

AlphaParams make_alpha_params(double alpha, bool half_plane) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
    if (half_plane && !(alpha < 0.5)) throw DomainError("half-plane problem requires alpha < 1/2");

    AlphaParams p;
    p.alpha = alpha;
    p.half_plane = half_plane;
    p.gamma_r2 = 1.0 - 2.0 * alpha;
    p.gamma_hp = -2.0 * alpha;
    p.c0 = const_c0(alpha);
    p.c1 = const_c1(alpha);
    p.eta = const_eta(alpha);
    if (!(p.eta > 0.0 && p.eta <= 1.0)) throw DomainError("eta outside (0,1]");

    p.c0_tp = p.t0 = p.delta_l = p.delta_u = kNaN;
    p.b_lo = p.b_hi = p.c_lo = p.c_hi = kNaN;
    if (!half_plane) return p;

    p.c0_tp = const_c0_tp(alpha);
    double t0 = 2.0;
    int doublings = 0;
    while (!t0_conditions_hold(alpha, t0)) {
        t0 *= 2.0;
        if (++doublings > kMaxT0Doublings) throw NoFeasibleT0("t0 search exceeded its cap");
    }
    double delta = solve_delta(alpha, t0);
    while (std::isnan(delta)) {
        t0 *= 2.0;
        if (++doublings > kMaxT0Doublings) throw NoFeasibleT0("joint (t0, delta_l) search exceeded its cap");
        delta = solve_delta(alpha, t0);
    }
    p.t0 = t0;
    p.delta_l = delta;

    const double a = alpha;
    const double ct = p.c0_tp * std::pow(t0, 0.5 - a);
    p.delta_u = ct / (1.0 + ct);

    const double scale = p.c0 * std::pow(t0, 1.0 - 2.0 * a);
    p.b_lo = 2.0 * scale * std::exp(lanczos_lgamma(0.5 - a) + log_gamma_ratio(delta, a - 0.5, 0.0));
    p.b_hi = 4.0 * scale * (1.0 / (1.0 - 2.0 * a) + 1.0 / (p.delta_u + 2.0 * a - 1.0));
    p.c_hi = p.c0 * std::pow(t0, -1.0 - 2.0 * a) * 8.0 * (1.0 + a) / 3.0 *
             std::exp(lanczos_lgamma(0.5 - a) + log_gamma_ratio(delta, a + 0.5, 0.0));
    p.c_lo = 8.0 * (1.0 + a) / (3.0 * (1.0 - 2.0 * a)) * p.c0 * std::pow(t0, -1.5 - a);
    return p;
}

}  // namespace gsqg

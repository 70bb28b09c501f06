#include "gsqg/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gsqg/errors.hpp"

namespace gsqg {

namespace {

// Lanczos approximation, g = 7, nine coefficients (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
    double a = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (z + i);
    return a;
}

}  // namespace

double lanczos_gamma(double x) {
    constexpr double pi = std::numbers::pi;
    if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    if (x > 140.0) return std::exp(lanczos_lgamma(x));
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double lanczos_lgamma(double x) {
    constexpr double pi = std::numbers::pi;
    if (x < 0.5) return std::log(pi / std::abs(std::sin(pi * x))) - lanczos_lgamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

namespace specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxTerms = 4000;

void check_args(double g, double t) {
    if (!(g > -1.0 && g < 1.0)) throw DomainError("kernel exponent gamma must lie in (-1,1)");
    if (!(t >= 0.0)) throw DomainError("kernel argument t must be nonnegative");
}

bool is_zero_gamma(double g) { return std::abs(g) < kZeroGamma; }

// u*log|u| with the continuous value 0 at u = 0.
double xlog(double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)); }

// sign(u)|u|^p, p > 0.
double spow(double u, double p) {
    if (u == 0.0) return 0.0;
    return u > 0.0 ? std::pow(u, p) : -std::pow(-u, p);
}

// (1 +- t)^g - 1 without cancellation.
double pow1m(double u, double g) { return std::expm1(g * std::log1p(u)); }

// Generic Taylor sum sum_k a_k w_k t^{2k+shift}, stopping when terms are negligible.
template <class Weight>
double taylor(double g, double t, int shift, Weight w) {
    const double t2 = t * t;
    double a = 1.0;  // a_1
    double pw = std::pow(t, 2 + shift);
    double sum = 0.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        const double term = a * w(k) * pw;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        if (pw == 0.0) break;
        a *= (g - (2 * k - 1)) * (g - 2 * k) / ((2.0 * k) * (2.0 * k + 1));
        pw *= t2;
    }
    return sum;
}

}  // namespace

double series_weight(double g, int k) {
    double a = 1.0;
    for (int j = 1; j < k; ++j) a *= (g - (2 * j - 1)) * (g - 2 * j) / ((2.0 * j) * (2.0 * j + 1));
    return a;
}

double f1_series(double g, double t) {
    return taylor(g, t, 0, [g](int k) { return (2 * k - g) / (k * (2.0 * k + 1)); });
}

double f1_prime_series(double g, double t) {
    return taylor(g, t, -1, [g](int k) { return 2.0 * (2 * k - g) / (2.0 * k + 1); });
}

double f2_series(double g, double t) {
    return taylor(g, t, 0, [g](int k) {
        return (2 * k - g) * (2 * k + 2 - g) / (k * (2.0 * k + 1) * (2.0 * k + 3));
    });
}

double f2_prime_series(double g, double t) {
    return taylor(g, t, -1, [g](int k) {
        return 2.0 * (2 * k - g) * (2 * k + 2 - g) / ((2.0 * k + 1) * (2.0 * k + 3));
    });
}

double f1_far(double g, double t) {
    const double s = 1.0 / t;
    const double tail = taylor(g, s, 0, [](int k) { return 2.0 / (2.0 * k + 1); });
    return 2.0 / (1.0 + g) - std::pow(s, -g) * tail;
}

double f2_far(double g, double t) {
    const double s = 1.0 / t;
    const double tail =
        taylor(g, s, 2, [g](int k) { return 2.0 * (2 * k - g) / ((2.0 * k + 1) * (2.0 * k + 3)); });
    return 2.0 * (2.0 - g) / (3.0 * (1.0 + g)) - std::pow(s, -g) * tail;
}

double f1_closed(double g, double t) {
    if (t == 0.0) return 0.0;
    if (is_zero_gamma(g)) {
        const double grouped = (1.0 - t) * std::log1p(t) - xlog(1.0 - t);
        return 1.0 - (1.0 + t) * grouped / (2.0 * t);
    }
    double num;
    if (t < 0.5) {
        const double am = pow1m(-t, g), ap = pow1m(t, g);
        num = 2.0 * g * (1.0 + g) * t + (1.0 - t) * (1.0 + g + t) * am -
              (1.0 + g - t) * (1.0 + t) * ap;
    } else {
        num = 2.0 * g * (2.0 + g) * t - (1.0 + g - t) * std::pow(1.0 + t, 1.0 + g) +
              (1.0 + g + t) * spow(1.0 - t, 1.0 + g);
    }
    return num / (g * (1.0 + g) * (2.0 + g) * t);
}

double f1_prime_closed(double g, double t) {
    if (t == 0.0) return 0.0;
    if (t == 1.0 && g <= kZeroGamma) return kInf;
    if (is_zero_gamma(g)) {
        const double lam = std::log1p(t) - std::log(std::abs(1.0 - t));
        return -1.0 / t + (t * t + 1.0) * lam / (2.0 * t * t);
    }
    double diff, sum;  // P - Q and P + Q with P = |1-t|^g, Q = (1+t)^g
    if (t < 0.5) {
        const double am = pow1m(-t, g), ap = pow1m(t, g);
        diff = am - ap;
        sum = 2.0 + am + ap;
    } else {
        const double p = std::pow(std::abs(1.0 - t), g), q = std::pow(1.0 + t, g);
        diff = p - q;
        sum = p + q;
    }
    return -((1.0 + t * t) * diff + g * t * sum) / (g * (2.0 + g) * t * t);
}

double f2_closed(double g, double t) {
    if (t == 0.0) return 0.0;
    const double t2 = t * t, t3 = t2 * t;
    if (is_zero_gamma(g)) {
        const double grouped = (1.0 - t) * std::log1p(t) - xlog(1.0 - t);
        const double lam_term = -3.0 * (3.0 * t2 + 1.0) * (1.0 + t) * grouped;
        return (14.0 * t3 + 6.0 * t + lam_term) / (24.0 * t3);
    }
    const double gp = 1.0 + g;
    const double r = 9.0 * t3 + 9.0 * gp * t2 + 3.0 * gp * gp * t + 3.0 * gp;
    const double s = 3.0 * t3 - 3.0 * gp * t2 + gp * gp * t - gp;
    const double lead = 2.0 * g * (2.0 - g) * (2.0 + g) * (4.0 + g);
    double num;
    if (t < 0.5) {
        const double am = pow1m(-t, g), ap = pow1m(t, g);
        num = (lead - 18.0 * g) * t3 + 6.0 * g * gp * t + r * (1.0 - t) * am +
              3.0 * s * (1.0 + t) * ap;
    } else {
        num = lead * t3 + r * spow(1.0 - t, gp) + 3.0 * s * std::pow(1.0 + t, gp);
    }
    return num / (3.0 * g * gp * (2.0 + g) * (4.0 + g) * t3);
}

double f2_prime_closed(double g, double t) {
    if (t == 0.0) return 0.0;
    if (t == 1.0 && g <= kZeroGamma) return kInf;
    const double t2 = t * t, t4 = t2 * t2;
    if (is_zero_gamma(g)) {
        const double lam = std::log1p(t) - std::log(std::abs(1.0 - t));
        return (-6.0 * t2 * t - 6.0 * t + (3.0 * t4 + 2.0 * t2 + 3.0) * lam) / (8.0 * t4);
    }
    double diff, sum;
    if (t < 0.5) {
        const double am = pow1m(-t, g), ap = pow1m(t, g);
        diff = am - ap;
        sum = 2.0 + am + ap;
    } else {
        const double p = std::pow(std::abs(1.0 - t), g), q = std::pow(1.0 + t, g);
        diff = p - q;
        sum = p + q;
    }
    const double num = (3.0 + (2.0 + g * g) * t2 + 3.0 * t4) * diff + 3.0 * g * t * (1.0 + t2) * sum;
    return -num / (g * (2.0 + g) * (4.0 + g) * t4);
}

double f1(double g, double t) {
    check_args(g, t);
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) return 2.0 / (1.0 + g);
    if (t < kSeriesSwitchF1) return f1_series(g, t);
    if (t > kAsymSwitchF1) return f1_far(g, t);
    return f1_closed(g, t);
}

double f1_prime(double g, double t) {
    check_args(g, t);
    if (t == 0.0 || std::isinf(t)) return 0.0;
    if (t > 1.0) {
        const double s = 1.0 / t;
        return std::pow(s, 2.0 - g) * f1_prime(g, s);
    }
    if (t < kSeriesSwitchF1) return f1_prime_series(g, t);
    return f1_prime_closed(g, t);
}

double f2(double g, double t) {
    check_args(g, t);
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) return 2.0 * (2.0 - g) / (3.0 * (1.0 + g));
    if (t < kSeriesSwitchF2) return f2_series(g, t);
    if (t > kAsymSwitchF2) return f2_far(g, t);
    return f2_closed(g, t);
}

double f2_prime(double g, double t) {
    check_args(g, t);
    if (t == 0.0 || std::isinf(t)) return 0.0;
    if (t > 1.0) {
        const double s = 1.0 / t;
        return std::pow(s, 4.0 - g) * f2_prime(g, s);
    }
    if (t < kSeriesSwitchF2) return f2_prime_series(g, t);
    return f2_prime_closed(g, t);
}

}  // namespace specfun

double KernelFn::operator()(double t) const {
    switch (which) {
        case Which::F1: return specfun::f1(gamma, t);
        case Which::F1prime: return specfun::f1_prime(gamma, t);
        case Which::F2: return specfun::f2(gamma, t);
        case Which::F2prime: return specfun::f2_prime(gamma, t);
    }
    return 0.0;
}

}  // namespace gsqg

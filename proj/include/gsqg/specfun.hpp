#pragma once

// Auxiliary kernel functions F1, F2 (and derivatives) for gamma in (-1, 1),
// plus a Lanczos Gamma function.

namespace gsqg {

double lanczos_gamma(double x);
double lanczos_lgamma(double x);  // log|Gamma(x)|

namespace specfun {

inline constexpr double kSeriesSwitchF1 = 0.1;
inline constexpr double kSeriesSwitchF2 = 0.25;
inline constexpr double kAsymSwitchF1 = 100.0;
inline constexpr double kAsymSwitchF2 = 10.0;
inline constexpr double kZeroGamma = 1e-8;

double f1(double gamma, double t);
double f1_prime(double gamma, double t);
double f2(double gamma, double t);
double f2_prime(double gamma, double t);

// gamma^{-1} binom(gamma, 2k-1), the common Taylor weight (k >= 1).
double series_weight(double gamma, int k);

// Individual representations, exposed for cross-checks. The closed forms
// are valid for all t > 0; the series for t < 1; the far-field forms for t > 1.
double f1_closed(double gamma, double t);
double f1_series(double gamma, double t);
double f1_far(double gamma, double t);
double f1_prime_closed(double gamma, double t);
double f1_prime_series(double gamma, double t);
double f2_closed(double gamma, double t);
double f2_series(double gamma, double t);
double f2_far(double gamma, double t);
double f2_prime_closed(double gamma, double t);
double f2_prime_series(double gamma, double t);

}  // namespace specfun

struct KernelFn {
    enum class Which { F1, F1prime, F2, F2prime };
    double gamma;
    Which which;
    double operator()(double t) const;
};

}  // namespace gsqg

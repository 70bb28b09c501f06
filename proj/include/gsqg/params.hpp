#pragma once

namespace gsqg {

// alpha and every alpha-dependent constant. Half-plane fields are NaN unless
// half_plane is set (which requires alpha < 1/2).
struct AlphaParams {
    double alpha = 0.0;
    bool half_plane = false;
    double gamma_r2 = 0.0;  // 1 - 2 alpha
    double gamma_hp = 0.0;  // -2 alpha
    double c0 = 0.0;
    double c1 = 0.0;
    double eta = 0.0;

    double c0_tp;    // c'''_{0,alpha}
    double t0;       // barrier transition point (power of two)
    double delta_l;  // lower barrier exponent
    double delta_u;  // upper barrier exponent
    double b_lo, b_hi;  // bracket for the far-field functional
    double c_lo, c_hi;  // bracket for the curvature functional

    double c_ell_norm_r2() const { return -1.0 / (2.0 - 2.0 * alpha); }

    // Middle expression of the delta_l band and its lower end K; the band is [K, 2K].
    double delta_band_value(double delta) const;
    double delta_band_lower() const;
};

AlphaParams make_alpha_params(double alpha, bool half_plane);

// Individual constants, usable without constructing the whole record.
double const_c0(double alpha);
double const_c1(double alpha);
double const_eta(double alpha);
double const_c0_tp(double alpha);

// Both conditions that t0 must satisfy.
bool t0_conditions_hold(double alpha, double t0);

}  // namespace gsqg

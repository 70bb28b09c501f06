#pragma once

#include <cstddef>
#include <vector>

#include "gsqg/mesh.hpp"
#include "gsqg/params.hpp"
#include "gsqg/quadrature.hpp"

namespace gsqg {

// Samples of the even profile f = -Omega/x on a mesh (full plane).
struct ProfileR2 {
    Mesh mesh;
    std::vector<double> f;
    std::size_t support_idx = 0;  // last index with f > 0

    ProfileR2() = default;
    ProfileR2(Mesh m, std::vector<double> values);
    void update_support();
    std::vector<double> omega() const;  // -x f
};

ProfileR2 seed_r2(const Mesh& mesh);  // max(0, 1 - x^2)

struct FunctionalsR2 {
    double b = 0.0;
    double c = 0.0;
    double c_check = 0.0;  // c from the integrated-by-parts form
    double c_ell = 0.0;    // c - b
    double c_omega = 0.0;  // = c_ell
    double lambda = 0.0;   // NaN unless c_ell < 0
    double c_ell_norm = 0.0;
    double f_inf = 0.0;  // value of f at infinity used in b
};

FunctionalsR2 compute_functionals_r2(const ProfileR2& p, const AlphaParams& params);

// max(0, 1 + T f / c(f)), pinned to 1 at the origin. T is the full-plane F1-form matrix.
ProfileR2 apply_R_alpha(const ProfileR2& p, const OperatorMatrix& T, const AlphaParams& params);
ProfileR2 apply_R_alpha(const ProfileR2& p, const OperatorMatrix& T, const FunctionalsR2& fn);

// T(f)(x) = v(x)/x - v'(0) through the velocity route: v' - c_ell = P1(-x f), v by cumulative integration.
std::vector<double> T_via_p1(const ProfileR2& p, const OperatorMatrix& P1);

struct ResidualReport {
    double max_abs = 0.0;  // max |r| / max |Omega'| on the window
    double l2 = 0.0;       // rms of r / max |Omega'| on the window
    double x_lo = 0.0, x_hi = 0.0;
    std::size_t count = 0;
    std::vector<double> pointwise;  // r / max |Omega'| at every node (0 outside the window)
};

// (c_ell x + P0(Omega)) Omega' - (c_omega + P1(Omega)) Omega on (0, window * support radius].
ResidualReport ode_residual_r2(const ProfileR2& p, const FunctionalsR2& fn, const OperatorMatrix& P1,
                               double window = 0.9);

// f(lambda x) resampled on the same mesh (zero past the support).
std::vector<double> rescale_profile(const std::vector<double>& x, const std::vector<double>& f, double lambda,
                                    double outside);

}  // namespace gsqg

#pragma once

#include <cstddef>
#include <vector>

#include "gsqg/mesh.hpp"
#include "gsqg/params.hpp"
#include "gsqg/quadrature.hpp"

namespace gsqg {

// Samples of f = Theta/x on a mesh (half plane); positive, no compact support.
struct ProfileHP {
    Mesh mesh;
    std::vector<double> f;

    ProfileHP() = default;
    ProfileHP(Mesh m, std::vector<double> values);
    std::vector<double> theta() const;  // x f
};

ProfileHP seed_hp_lower(const Mesh& mesh, const AlphaParams& params);  // f_l
ProfileHP seed_hp_rational(const Mesh& mesh, double delta);            // (1 + x^2)^{-delta}

double barrier_lower(const AlphaParams& params, double x);
double barrier_upper(const AlphaParams& params, double x);

// How f is continued past the last node.
enum class TailModel { PowerLaw, None };

struct Tail {
    TailModel model = TailModel::None;
    double X = 0.0;      // last node
    double f_end = 0.0;  // f(X)
    double delta = 0.0;  // f ~ f_end (x/X)^{-delta}
};

// Least-squares power law on the last decade of nodes.
Tail fit_tail(const ProfileHP& p, const AlphaParams& params, TailModel model);

struct FunctionalsHP {
    double b_frak = 0.0;
    double c_frak = 0.0;
    double b_tail = 0.0;  // part of b_frak coming from the tail
    double c_ell = 0.0;
    double c_theta = 1.0;
    double lambda = 0.0;  // NaN unless 2 alpha c_ell > 1
    double c_ell_norm = 0.0;
    double c_theta_norm = 0.0;
    Tail tail;
};

FunctionalsHP compute_functionals_hp(const ProfileHP& p, const AlphaParams& params,
                                     TailModel model = TailModel::PowerLaw);

// 𝔗(f) at the nodes from the F1-form matrix plus the tail.
std::vector<double> frak_T(const ProfileHP& p, const OperatorMatrix& T, const AlphaParams& params, const Tail& tail);
// U(Theta) at the nodes from the U matrix plus the tail.
std::vector<double> velocity_hp(const ProfileHP& p, const OperatorMatrix& U, const AlphaParams& params,
                                const Tail& tail);
// 𝔗 through U / x + 𝔟.
std::vector<double> frak_T_via_u(const ProfileHP& p, const OperatorMatrix& U, const AlphaParams& params,
                                 const FunctionalsHP& fn);

// exp(-int_0^x 𝔗/(y(1+𝔗)) dy) by the trapezoid rule, pinned to 1 at 0.
ProfileHP apply_Re_alpha(const ProfileHP& p, const std::vector<double>& frakT);
ProfileHP apply_Re_alpha(const ProfileHP& p, const OperatorMatrix& T, const AlphaParams& params,
                         const FunctionalsHP& fn);

struct ResidualReportHP {
    double max_abs = 0.0;
    double l2 = 0.0;
    double x_lo = 0.0, x_hi = 0.0;
    std::size_t count = 0;
};

// (c_ell x + U) Theta' - c_theta Theta on [x_1, window * X], normalized by max |Theta'| there.
ResidualReportHP ode_residual_hp(const ProfileHP& p, const FunctionalsHP& fn, const OperatorMatrix& U,
                                 const AlphaParams& params, double window = 0.5);

}  // namespace gsqg

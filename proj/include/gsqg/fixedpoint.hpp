#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/membership.hpp"
#include "gsqg/operators_hp.hpp"
#include "gsqg/operators_r2.hpp"

namespace gsqg {

struct SolveOptions {
    double tol = 1e-7;
    int max_iter = 500;
    double damping = 1.0;  // f <- (1 - d) f + d R(f)
    TailModel tail = TailModel::PowerLaw;
    int keep_every = 0;  // store every k-th iterate (0: none)
};

struct IterRecord {
    double d_state = 0.0;  // sup |change| of omega = -x f or Theta = x f
    double d_c_ell = 0.0;
};

struct StoredIterate {
    int iteration = 0;
    std::vector<double> f;
};

struct SolveReportR2 {
    bool converged = false;
    int iterations = 0;
    std::string failure;
    ProfileR2 profile;
    FunctionalsR2 functionals;
    std::vector<IterRecord> history;
    std::vector<StoredIterate> iterates;
    MembershipReport membership;
    MembershipReport lemma;
    ResidualReport ode;
    double support_radius = 0.0;
    double c_ell_tilde = 0.0;  // lambda^{2a-2} c_ell
    std::vector<double> rescaled;  // f(lambda x) on the same mesh
};

struct SolveReportHP {
    bool converged = false;
    int iterations = 0;
    std::string failure;
    ProfileHP profile;
    FunctionalsHP functionals;
    std::vector<IterRecord> history;
    std::vector<StoredIterate> iterates;
    MembershipReport membership;
    MembershipReport lemma;
    ResidualReportHP ode;
    int tail_fallbacks = 0;  // sweeps where the tail fit failed and truncation was used
    double dual_route_gap = 0.0;  // max |𝔗 - (U/x + 𝔟)| / sup 𝔗 on [x_1, X/2]
    std::vector<double> frak_T;
    std::vector<double> velocity;  // U(Theta)
    std::vector<double> rescaled;
};

// Operators are assembled once per solve unless passed in.
SolveReportR2 solve_r2(const AlphaParams& params, const Mesh& mesh, const SolveOptions& opt,
                       std::optional<ProfileR2> seed = std::nullopt, const OperatorMatrix* T = nullptr,
                       const OperatorMatrix* P1 = nullptr);
SolveReportHP solve_hp(const AlphaParams& params, const Mesh& mesh, const SolveOptions& opt,
                       std::optional<ProfileHP> seed = std::nullopt, const OperatorMatrix* T = nullptr,
                       const OperatorMatrix* U = nullptr);

// sup over the support of |f - sin(sqrt6 x)/(sqrt6 x)|; past the support f counts as 0.
double sinc_limit_gap(const Mesh& mesh, const std::vector<double>& f, std::size_t support_idx);
double sinc_limit_gap(const SolveReportR2& r);

// Root of f + x^2 f^3 = 1 in (0, 1] by Newton.
double burgers_profile(double x);
// f(kappa x) with kappa = 2/sqrt(𝔠), compared with the Burgers profile on [0, x_max].
struct BurgersGap {
    double gap = 0.0;
    double at = 0.0;
    double kappa = 0.0;
};
BurgersGap burgers_limit_gap(const Mesh& mesh, const std::vector<double>& f, double c_frak, double x_max = 10.0,
                             int samples = 2001);
BurgersGap burgers_limit_gap(const SolveReportHP& r, double x_max = 10.0);

enum class Problem { R2, HP };

struct SweepRow {
    double alpha = 0.0;
    bool converged = false;
    std::string error;
    int iterations = 0;
    double c_ell = 0.0;
    double c_ell_norm = 0.0;   // c~_ell
    double c_other_norm = 0.0; // c~_omega (full) or c~_theta (half)
    double ratio = 0.0;        // c_ell / c_theta (half plane)
    double gap = std::numeric_limits<double>::quiet_NaN();  // sinc or Burgers
    std::vector<double> x, f, rescaled;  // converged profile (empty on error)
};

// mesh_for(alpha) builds the mesh of each solve; errors are recorded per row.
std::vector<SweepRow> sweep_alpha(const std::vector<double>& alphas, Problem which,
                                  const std::function<Mesh(double)>& mesh_for, const SolveOptions& opt,
                                  const std::function<void(const SweepRow&)>& on_row = {});

}  // namespace gsqg

#include "gsqg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <numbers>

#include "gsqg/errors.hpp"
#include "gsqg/specfun.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

namespace {

constexpr int kMaxGraded = 60;

GaussRule make_rule(int q) {
    GaussRule r;
    r.x.resize(q);
    r.w.resize(q);
    for (int i = 0; i < q; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= q; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (q == 1) p0 = 1.0, p1 = z;
            dp = q * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        r.x[q - 1 - i] = z;
        r.w[q - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}

// Gauss order for a panel whose nearest singularity sits r panel widths away.
int far_order(double r) {
    if (r >= 500.0) return 3;
    if (r >= 50.0) return 4;
    if (r >= 8.0) return 6;
    if (r >= 2.0) return 8;
    return 10;
}

double dist_to_panel(double s, double a, double b) { return s < a ? a - s : (s > b ? s - b : 0.0); }

// Accumulates int_a^b fn(xi) (xi - x0)^m d xi, m < M, into out.
template <int M, class F>
void graded_moments(const F& fn, double a, double b, double x0, const double* sing, int ns, double* out,
                    int depth = 0) {
    const double w = b - a;
    if (!(w > 0.0)) return;
    double d = std::numeric_limits<double>::infinity();
    double s_near = 0.0;
    for (int k = 0; k < ns; ++k) {
        const double s = sing[k];
        if (s > a && s < b) {  // split at an interior singular point
            graded_moments<M>(fn, a, s, x0, sing, ns, out, depth);
            graded_moments<M>(fn, s, b, x0, sing, ns, out, depth);
            return;
        }
        const double dk = dist_to_panel(s, a, b);
        if (dk < d) d = dk, s_near = s;
    }
    if (d >= w || depth >= kMaxGraded) {
        const GaussRule& g = gauss_legendre(depth >= kMaxGraded ? 10 : far_order(d / w));
        const double c = 0.5 * (a + b), h = 0.5 * w;
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            const double xi = c + h * g.x[q];
            double v = g.w[q] * h * fn(xi);
            const double u = xi - x0;
            for (int m = 0; m < M; ++m) {
                out[m] += v;
                v *= u;
            }
        }
        return;
    }
    // Halve toward the nearest singular point; the far half is then Gauss-ready.
    const double mid = 0.5 * (a + b);
    if (s_near <= a) {
        graded_moments<M>(fn, a, mid, x0, sing, ns, out, depth + 1);
        graded_moments<M>(fn, mid, b, x0, sing, ns, out, depth + 1);
    } else {
        graded_moments<M>(fn, mid, b, x0, sing, ns, out, depth + 1);
        graded_moments<M>(fn, a, mid, x0, sing, ns, out, depth + 1);
    }
}

// Finite-part antiderivatives of  sgn(u)|u|^{-2a} u^k  (odd kernel) and
// |u|^{-2a} u^k  (even kernel), vanishing at u = 0.
enum class PowKernel { Sgn, Abs };

double antideriv(PowKernel kind, double two_a, int k, double u) {
    if (u == 0.0) return 0.0;
    const double q = k + 1.0 - two_a;
    const double au = std::abs(u);
    if (std::abs(q) < 1e-12) return std::log(au);  // only the odd kernel, k = 0, alpha = 1/2
    const double val = std::pow(au, q) / q;
    if (u > 0.0) return val;
    const bool odd_k = (k % 2) != 0;
    if (kind == PowKernel::Sgn) return odd_k ? -val : val;
    return odd_k ? val : -val;
}

double kernel_value(PowKernel kind, double two_a, double u) {
    const double v = std::pow(std::abs(u), -two_a);
    return (kind == PowKernel::Sgn && u < 0.0) ? -v : v;
}

// Adds sign * int_cell K(xi - p) (xi - x_j)^m d xi for m = 0..3 into w.
void power_cell_moments(PowKernel kind, double two_a, double p, double sign, double xa, double xb,
                        double* w) {
    const double h = xb - xa;
    const double dist = dist_to_panel(p, xa, xb);
    if (dist < 2.0 * h) {
        const double d = p - xa;  // xi - x_j = u + d
        std::array<double, 4> J{};
        const double ua = xa - p, ub = xb - p;
        for (int k = 0; k < 4; ++k) J[k] = antideriv(kind, two_a, k, ub) - antideriv(kind, two_a, k, ua);
        static constexpr double C[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        for (int m = 0; m < 4; ++m) {
            double s = 0.0, dp = 1.0;
            for (int k = m; k >= 0; --k) {
                s += C[m][k] * dp * J[k];
                dp *= d;
            }
            w[m] += sign * s;
        }
        return;
    }
    const GaussRule& g = gauss_legendre(far_order(dist / h));
    const double c = 0.5 * (xa + xb), hh = 0.5 * h;
    for (std::size_t q = 0; q < g.x.size(); ++q) {
        const double xi = c + hh * g.x[q];
        double v = sign * g.w[q] * hh * kernel_value(kind, two_a, xi - p);
        const double u = xi - xa;
        for (int m = 0; m < 4; ++m) {
            w[m] += v;
            v *= u;
        }
    }
}

void check_finite(const OperatorMatrix& M) {
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j)
            if (!std::isfinite(M(i, j)))
                throw AssemblyError(std::string("non-finite weight in ") + op_kind_name(M.kind()) + " at row " +
                                    std::to_string(i));
}

// Rows of a two-term power-kernel operator: K(x, xi) = s_d K(xi - x) + s_r K(xi + x).
OperatorMatrix assemble_power(const Mesh& mesh, double two_a, PowKernel kind, double s_direct, double s_reflect,
                              double prefactor, EndCondition left, OpKind op, double alpha) {
    const std::size_t n = mesh.size();
    SplineSystem sys(mesh.nodes(), left, EndCondition::NotAKnot);
    OperatorMatrix M(n, op, alpha, mesh.describe());
    std::vector<double> w(4 * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(w.begin(), w.end(), 0.0);
        const double x = mesh[i];
        for (std::size_t j = 0; j + 1 < n; ++j) {
            power_cell_moments(kind, two_a, x, s_direct, mesh[j], mesh[j + 1], &w[4 * j]);
            power_cell_moments(kind, two_a, -x, s_reflect, mesh[j], mesh[j + 1], &w[4 * j]);
        }
        const auto r = sys.sample_weights(w);
        double* out = M.row(i);
        for (std::size_t k = 0; k < n; ++k) out[k] = prefactor * r[k];
    }
    return M;
}

}  // namespace

const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::P1FullPlane: return "P1_full_plane";
        case OpKind::UHalfPlane: return "U_half_plane";
        case OpKind::TFullPlane: return "T_full_plane_F1form";
        case OpKind::THalfPlane: return "T_half_plane_F1form";
    }
    return "?";
}

const GaussRule& gauss_legendre(int q) {
    static std::array<GaussRule, 65> rules;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int k = 1; k <= 64; ++k) rules[k] = make_rule(k);
    });
    if (q < 1 || q > 64) throw DomainError("Gauss-Legendre order must lie in [1, 64]");
    return rules[q];
}

double integrate_graded(const std::function<double(double)>& fn, double a, double b,
                        const std::vector<double>& singular) {
    double out[1] = {0.0};
    if (b < a) return -integrate_graded(fn, b, a, singular);
    graded_moments<1>(fn, a, b, 0.0, singular.data(), static_cast<int>(singular.size()), out);
    return out[0];
}

double integrate_spline_power(const CubicSpline& s, double p) {
    const auto& x = s.nodes();
    static constexpr double C[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    double total = 0.0;
    for (std::size_t j = 0; j < s.cells(); ++j) {
        const double a = x[j], b = x[j + 1], h = b - a;
        const double coef[4] = {s.a(j), s.b(j), s.c(j), s.d(j)};
        double mom[4] = {0.0, 0.0, 0.0, 0.0};
        if (a < 2.0 * h) {
            // (xi - a)^m = sum_k C(m,k) xi^k (-a)^{m-k}
            double pw[4];
            for (int k = 0; k < 4; ++k) {
                const double q = k + p + 1.0;
                if (a == 0.0) {
                    pw[k] = q > 0.0 ? std::pow(b, q) / q : std::numeric_limits<double>::quiet_NaN();
                } else {
                    pw[k] = std::abs(q) < 1e-12 ? std::log(b / a) : (std::pow(b, q) - std::pow(a, q)) / q;
                }
            }
            for (int m = 0; m < 4; ++m) {
                if (a == 0.0) {
                    mom[m] = std::isnan(pw[m]) ? 0.0 : pw[m];
                    continue;
                }
                double acc = 0.0, am = 1.0;
                for (int k = m; k >= 0; --k) {
                    acc += C[m][k] * am * pw[k];
                    am *= -a;
                }
                mom[m] = acc;
            }
        } else {
            const GaussRule& g = gauss_legendre(far_order(a / h));
            const double c = 0.5 * (a + b), hh = 0.5 * h;
            for (std::size_t q = 0; q < g.x.size(); ++q) {
                const double xi = c + hh * g.x[q];
                double v = g.w[q] * hh * std::pow(xi, p);
                for (int m = 0; m < 4; ++m) {
                    mom[m] += v;
                    v *= xi - a;
                }
            }
        }
        for (int m = 0; m < 4; ++m) total += coef[m] * mom[m];
    }
    return total;
}

OperatorMatrix::OperatorMatrix(std::size_t n, OpKind kind, double alpha, std::string mesh_id)
    : n_(n), kind_(kind), alpha_(alpha), mesh_id_(std::move(mesh_id)), w_(n * n, 0.0) {}

std::vector<double> OperatorMatrix::apply(const std::vector<double>& y) const {
    if (y.size() != n_) throw DomainError("operator size does not match sample count");
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        const double* r = row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += r[j] * y[j];
        out[i] = s;
    }
    return out;
}

void OperatorMatrix::save(const std::string& path) const {
    static_assert(std::endian::native == std::endian::little, "binary dump assumes a little-endian host");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DomainError("cannot open " + path + " for writing");
    const std::uint64_t n = n_;
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(w_.data()), static_cast<std::streamsize>(w_.size() * sizeof(double)));
}

OperatorMatrix OperatorMatrix::load(const std::string& path, OpKind kind, double alpha) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DomainError("cannot open " + path);
    std::uint64_t n = 0;
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    OperatorMatrix M(static_cast<std::size_t>(n), kind, alpha, "file:" + path);
    is.read(reinterpret_cast<char*>(M.w_.data()), static_cast<std::streamsize>(M.w_.size() * sizeof(double)));
    if (!is) throw DomainError("truncated operator dump " + path);
    return M;
}

OperatorMatrix assemble_p1(const Mesh& mesh, const AlphaParams& params, Parity parity) {
    // omega odd:  K = k(x - xi) - k(x + xi);  even:  K = k(x - xi) + k(x + xi),
    // with k(u) = sgn(u)|u|^{-2a}, so k(x - xi) = -S(xi - x) and k(x + xi) = S(xi + x).
    const double s_reflect = parity == Parity::Odd ? -1.0 : 1.0;
    const EndCondition left = parity == Parity::Odd ? EndCondition::Natural : EndCondition::ZeroSlope;
    auto M = assemble_power(mesh, 2.0 * params.alpha, PowKernel::Sgn, -1.0, s_reflect, params.c1, left,
                            OpKind::P1FullPlane, params.alpha);
    check_finite(M);
    return M;
}

OperatorMatrix assemble_u_hp(const Mesh& mesh, const AlphaParams& params) {
    if (!(params.alpha < 0.5)) throw DomainError("half-plane operator requires alpha < 1/2");
    auto M = assemble_power(mesh, 2.0 * params.alpha, PowKernel::Abs, 1.0, -1.0, -params.c0 / params.alpha,
                            EndCondition::Natural, OpKind::UHalfPlane, params.alpha);
    std::fill(M.row(0), M.row(0) + M.size(), 0.0);  // U is odd
    check_finite(M);
    return M;
}

OperatorMatrix assemble_T_f1form(const Mesh& mesh, const AlphaParams& params, Plane which) {
    const bool full = which == Plane::Full;
    if (!full && !(params.alpha < 0.5)) throw DomainError("half-plane operator requires alpha < 1/2");
    const double gamma = full ? params.gamma_r2 : params.gamma_hp;
    const double prefactor = full ? params.c1 : -2.0 * params.c0;
    const double power = 1.0 + gamma;
    const std::size_t n = mesh.size();
    SplineSystem sys(mesh.nodes(), EndCondition::ZeroSlope, EndCondition::NotAKnot);
    OperatorMatrix M(n, full ? OpKind::TFullPlane : OpKind::THalfPlane, params.alpha, mesh.describe());
    std::vector<double> w(4 * (n - 1));
    for (std::size_t i = 1; i < n; ++i) {
        std::fill(w.begin(), w.end(), 0.0);
        const double x = mesh[i];
        auto G = [x, gamma, power](double xi) {
            return xi > 0.0 ? std::pow(xi, power) * specfun::f1(gamma, x / xi) : 0.0;
        };
        const double sing[2] = {0.0, x};
        for (std::size_t j = 0; j + 1 < n; ++j) {
            double nu[3] = {0.0, 0.0, 0.0};
            graded_moments<3>(G, mesh[j], mesh[j + 1], mesh[j], sing, 2, nu);
            // f' on cell j is b + 2c u + 3d u^2
            w[4 * j + 1] += nu[0];
            w[4 * j + 2] += 2.0 * nu[1];
            w[4 * j + 3] += 3.0 * nu[2];
        }
        const auto r = sys.sample_weights(w);
        double* out = M.row(i);
        for (std::size_t k = 0; k < n; ++k) out[k] = prefactor * r[k];
    }
    check_finite(M);
    return M;
}

}  // namespace gsqg

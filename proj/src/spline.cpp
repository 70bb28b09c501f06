#include "gsqg/spline.hpp"

#include <algorithm>

#include "gsqg/errors.hpp"

namespace gsqg {

namespace {

void thomas_factor(const std::vector<double>& sub, const std::vector<double>& diag,
                   const std::vector<double>& sup, std::vector<double>& c, std::vector<double>& den) {
    const std::size_t m = diag.size();
    c.assign(m, 0.0);
    den.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        den[k] = diag[k] - (k > 0 ? sub[k] * c[k - 1] : 0.0);
        c[k] = (k + 1 < m) ? sup[k] / den[k] : 0.0;
    }
}

void thomas_solve(const std::vector<double>& sub, const std::vector<double>& c,
                  const std::vector<double>& den, std::vector<double>& r) {
    const std::size_t m = den.size();
    for (std::size_t k = 0; k < m; ++k) r[k] = (r[k] - (k > 0 ? sub[k] * r[k - 1] : 0.0)) / den[k];
    for (std::size_t k = m - 1; k-- > 0;) r[k] -= c[k] * r[k + 1];
}

}  // namespace

SplineSystem::SplineSystem(std::vector<double> x, EndCondition left, EndCondition right)
    : x_(std::move(x)), left_(left), right_(right) {
    const std::size_t n = x_.size();
    if (n < 4) throw DomainError("spline needs at least 4 nodes");
    h_.resize(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        h_[j] = x_[j + 1] - x_[j];
        if (!(h_[j] > 0.0)) throw DomainError("spline nodes must be strictly increasing");
    }
    lo_ = (left_ == EndCondition::ZeroSlope) ? 0 : 1;
    hi_ = (right_ == EndCondition::ZeroSlope) ? n - 1 : n - 2;
    if (left_ == EndCondition::NotAKnot) {
        e0_ = (h_[0] + h_[1]) / h_[1];
        e0b_ = -h_[0] / h_[1];
    }
    if (right_ == EndCondition::NotAKnot) {
        const double hl = h_[n - 2], hm = h_[n - 3];
        en_ = (hm + hl) / hm;
        enb_ = -hl / hm;
    }
    const std::size_t m = hi_ - lo_ + 1;
    std::vector<double> sub(m, 0.0), diag(m, 0.0), sup(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = k + lo_;
        if (j == 0) {
            diag[k] = 2.0 * h_[0];
            sup[k] = h_[0];
        } else if (j == n - 1) {
            sub[k] = h_[n - 2];
            diag[k] = 2.0 * h_[n - 2];
        } else {
            double lower = h_[j - 1], mid = 2.0 * (h_[j - 1] + h_[j]), upper = h_[j];
            if (j == 1 && lo_ == 1) {  // M_0 = e0 M_1 + e0b M_2
                mid += lower * e0_;
                upper += lower * e0b_;
                lower = 0.0;
            }
            if (j == n - 2 && hi_ == n - 2) {  // M_{n-1} = en M_{n-2} + enb M_{n-3}
                mid += upper * en_;
                lower += upper * enb_;
                upper = 0.0;
            }
            sub[k] = lower;
            diag[k] = mid;
            sup[k] = upper;
        }
    }
    fwd_sub_ = sub;
    thomas_factor(sub, diag, sup, fwd_c_, fwd_den_);
    std::vector<double> tsub(m, 0.0), tsup(m, 0.0);
    for (std::size_t k = 1; k < m; ++k) tsub[k] = sup[k - 1];
    for (std::size_t k = 0; k + 1 < m; ++k) tsup[k] = sub[k + 1];
    adj_sub_ = tsub;
    thomas_factor(tsub, diag, tsup, adj_c_, adj_den_);
}

std::vector<double> SplineSystem::rhs(const std::vector<double>& y) const {
    const std::size_t n = x_.size();
    std::vector<double> r(hi_ - lo_ + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        const std::size_t j = k + lo_;
        if (j == 0)
            r[k] = 6.0 * (y[1] - y[0]) / h_[0];
        else if (j == n - 1)
            r[k] = -6.0 * (y[n - 1] - y[n - 2]) / h_[n - 2];
        else
            r[k] = 6.0 * ((y[j + 1] - y[j]) / h_[j] - (y[j] - y[j - 1]) / h_[j - 1]);
    }
    return r;
}

std::vector<double> SplineSystem::second_derivatives(const std::vector<double>& y) const {
    const std::size_t n = x_.size();
    if (y.size() != n) throw DomainError("spline sample count does not match nodes");
    std::vector<double> z = rhs(y);
    thomas_solve(fwd_sub_, fwd_c_, fwd_den_, z);
    std::vector<double> M(n, 0.0);
    for (std::size_t k = 0; k < z.size(); ++k) M[k + lo_] = z[k];
    if (left_ == EndCondition::NotAKnot) M[0] = e0_ * M[1] + e0b_ * M[2];
    if (right_ == EndCondition::NotAKnot) M[n - 1] = en_ * M[n - 2] + enb_ * M[n - 3];
    return M;
}

std::vector<double> SplineSystem::sample_weights(const std::vector<double>& w) const {
    const std::size_t n = x_.size();
    if (w.size() != 4 * (n - 1)) throw DomainError("spline adjoint expects 4 weights per cell");
    std::vector<double> wy(n, 0.0), wM(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double h = h_[j];
        const double w0 = w[4 * j], w1 = w[4 * j + 1], w2 = w[4 * j + 2], w3 = w[4 * j + 3];
        // b = (y_{j+1}-y_j)/h - h(2M_j + M_{j+1})/6, c = M_j/2, d = (M_{j+1}-M_j)/(6h)
        wy[j] += w0 - w1 / h;
        wy[j + 1] += w1 / h;
        wM[j] += -w1 * h / 3.0 + 0.5 * w2 - w3 / (6.0 * h);
        wM[j + 1] += -w1 * h / 6.0 + w3 / (6.0 * h);
    }
    const std::size_t m = hi_ - lo_ + 1;
    std::vector<double> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = wM[k + lo_];
    if (left_ == EndCondition::NotAKnot) {
        v[0] += e0_ * wM[0];
        v[1] += e0b_ * wM[0];
    }
    if (right_ == EndCondition::NotAKnot) {
        v[m - 1] += en_ * wM[n - 1];
        v[m - 2] += enb_ * wM[n - 1];
    }
    thomas_solve(adj_sub_, adj_c_, adj_den_, v);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = k + lo_;
        const double r = 6.0 * v[k];
        if (j == 0) {
            wy[0] -= r / h_[0];
            wy[1] += r / h_[0];
        } else if (j == n - 1) {
            wy[n - 2] += r / h_[n - 2];
            wy[n - 1] -= r / h_[n - 2];
        } else {
            wy[j - 1] += r / h_[j - 1];
            wy[j] -= r / h_[j] + r / h_[j - 1];
            wy[j + 1] += r / h_[j];
        }
    }
    return wy;
}

CubicSpline::CubicSpline(const std::vector<double>& x, const std::vector<double>& y, EndCondition left,
                         EndCondition right)
    : CubicSpline(SplineSystem(x, left, right), y) {}

CubicSpline::CubicSpline(const SplineSystem& sys, const std::vector<double>& y) : x_(sys.nodes()), a_(y) {
    build(sys.second_derivatives(y));
}

void CubicSpline::build(const std::vector<double>& M) {
    const std::size_t cells = x_.size() - 1;
    b_.resize(cells);
    c_.resize(cells);
    d_.resize(cells);
    for (std::size_t j = 0; j < cells; ++j) {
        const double h = x_[j + 1] - x_[j];
        b_[j] = (a_[j + 1] - a_[j]) / h - h * (2.0 * M[j] + M[j + 1]) / 6.0;
        c_[j] = 0.5 * M[j];
        d_[j] = (M[j + 1] - M[j]) / (6.0 * h);
    }
    a_.resize(cells);
}

std::size_t CubicSpline::cell(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t j = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(j, b_.size() - 1);
}

double CubicSpline::operator()(double x) const {
    const std::size_t j = cell(x);
    const double u = x - x_[j];
    return a_[j] + u * (b_[j] + u * (c_[j] + u * d_[j]));
}

double CubicSpline::deriv(double x) const {
    const std::size_t j = cell(x);
    const double u = x - x_[j];
    return b_[j] + u * (2.0 * c_[j] + 3.0 * u * d_[j]);
}

double CubicSpline::deriv2(double x) const {
    const std::size_t j = cell(x);
    return 2.0 * c_[j] + 6.0 * d_[j] * (x - x_[j]);
}

double CubicSpline::integral(double lo, double hi) const {
    if (hi < lo) return -integral(hi, lo);
    auto prim = [this](std::size_t j, double u) {
        return u * (a_[j] + u * (b_[j] / 2.0 + u * (c_[j] / 3.0 + u * d_[j] / 4.0)));
    };
    const std::size_t jl = cell(lo), jh = cell(hi);
    if (jl == jh) return prim(jl, hi - x_[jl]) - prim(jl, lo - x_[jl]);
    double s = prim(jl, x_[jl + 1] - x_[jl]) - prim(jl, lo - x_[jl]);
    for (std::size_t j = jl + 1; j < jh; ++j) s += prim(j, x_[j + 1] - x_[j]);
    return s + prim(jh, hi - x_[jh]);
}

std::vector<double> CubicSpline::cumulative() const {
    std::vector<double> out(x_.size(), 0.0);
    for (std::size_t j = 0; j < b_.size(); ++j) {
        const double u = x_[j + 1] - x_[j];
        out[j + 1] = out[j] + u * (a_[j] + u * (b_[j] / 2.0 + u * (c_[j] / 3.0 + u * d_[j] / 4.0)));
    }
    return out;
}

}  // namespace gsqg

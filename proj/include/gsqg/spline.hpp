#pragma once

#include <cstddef>
#include <vector>

namespace gsqg {

// ZeroSlope suits even data at x = 0, Natural suits odd data at x = 0.
enum class EndCondition { NotAKnot, ZeroSlope, Natural };

// Linear algebra of the cubic interpolating spline on fixed nodes, shared by
// every spline built on those nodes. On cell j the spline is
//   s(x) = a_j + b_j u + c_j u^2 + d_j u^3,  u = x - x_j.
class SplineSystem {
public:
    SplineSystem(std::vector<double> x, EndCondition left, EndCondition right);

    std::size_t size() const { return x_.size(); }
    const std::vector<double>& nodes() const { return x_; }
    EndCondition left() const { return left_; }
    EndCondition right() const { return right_; }

    // Second derivatives at the nodes for samples y.
    std::vector<double> second_derivatives(const std::vector<double>& y) const;

    // Adjoint map. Given weights w[4*j + m] on the local coefficient of u^m in
    // cell j, returns v with  sum_j,m w[4j+m] coef_{j,m}(y) = v . y  for all y.
    std::vector<double> sample_weights(const std::vector<double>& w) const;

private:
    std::vector<double> rhs(const std::vector<double>& y) const;

    std::vector<double> x_, h_;
    EndCondition left_, right_;
    std::size_t lo_ = 0, hi_ = 0;  // reduced unknowns are M[lo..hi]
    double e0_ = 0, e0b_ = 0, en_ = 0, enb_ = 0;  // eliminated end values
    std::vector<double> fwd_sub_, fwd_c_, fwd_den_;
    std::vector<double> adj_sub_, adj_c_, adj_den_;
};

class CubicSpline {
public:
    CubicSpline(const std::vector<double>& x, const std::vector<double>& y,
                EndCondition left = EndCondition::NotAKnot, EndCondition right = EndCondition::NotAKnot);
    CubicSpline(const SplineSystem& sys, const std::vector<double>& y);

    double operator()(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;

    // Integral of the spline over [lo, hi] within the node range.
    double integral(double lo, double hi) const;
    // Running integral from x_0 to every node.
    std::vector<double> cumulative() const;

    std::size_t cells() const { return b_.size(); }
    const std::vector<double>& nodes() const { return x_; }
    double a(std::size_t j) const { return a_[j]; }
    double b(std::size_t j) const { return b_[j]; }
    double c(std::size_t j) const { return c_[j]; }
    double d(std::size_t j) const { return d_[j]; }

private:
    void build(const std::vector<double>& M);
    std::size_t cell(double x) const;

    std::vector<double> x_, a_, b_, c_, d_;
};

}  // namespace gsqg

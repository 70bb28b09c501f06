#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsqg/mesh.hpp"
#include "gsqg/params.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

enum class OpKind { P1FullPlane, UHalfPlane, TFullPlane, THalfPlane };
enum class Plane { Full, Half };
// Parity of the density on the whole line; only P1 accepts even densities.
enum class Parity { Odd, Even };

const char* op_kind_name(OpKind k);

// Dense n x n product-integration weights: (W y)_i approximates the operator
// applied to the cubic spline through the samples y, evaluated at node i.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(std::size_t n, OpKind kind, double alpha, std::string mesh_id);

    std::size_t size() const { return n_; }
    OpKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    const std::string& mesh_id() const { return mesh_id_; }

    double& operator()(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
    double* row(std::size_t i) { return w_.data() + i * n_; }
    const double* row(std::size_t i) const { return w_.data() + i * n_; }

    std::vector<double> apply(const std::vector<double>& y) const;

    // n as little-endian u64, then n*n row-major little-endian doubles.
    void save(const std::string& path) const;
    static OperatorMatrix load(const std::string& path, OpKind kind, double alpha);

private:
    std::size_t n_ = 0;
    OpKind kind_ = OpKind::P1FullPlane;
    double alpha_ = 0.0;
    std::string mesh_id_;
    std::vector<double> w_;
};

// c1 P.V. int omega(xi) (x - xi)|x - xi|^{-1-2 alpha} d xi over the line, omega
// extended by parity and by zero beyond the last node.
OperatorMatrix assemble_p1(const Mesh& mesh, const AlphaParams& params, Parity parity = Parity::Odd);

// (c0 / -alpha) int theta(xi) |x - xi|^{-2 alpha} d xi, theta odd, zero beyond the last node.
OperatorMatrix assemble_u_hp(const Mesh& mesh, const AlphaParams& params);

// Full plane:  c1 int_0^X f'(xi) xi^{2-2a} F1_{1-2a}(x/xi) d xi.
// Half plane: -2c0 int_0^X f'(xi) xi^{1-2a} F1_{-2a}(x/xi) d xi.
OperatorMatrix assemble_T_f1form(const Mesh& mesh, const AlphaParams& params, Plane which);

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int q);

// Integral of fn over [a, b] for fn smooth except at the listed points, where
// it may have bounded or integrable power-type behaviour. Panels are split at
// interior singular points and graded geometrically toward them.
double integrate_graded(const std::function<double(double)>& fn, double a, double b,
                        const std::vector<double>& singular = {});

// int_{x_0}^{x_last} s(xi) xi^p d xi for a spline on nodes starting at 0.
// Moments that diverge on the first cell are dropped, so s must vanish there
// to the matching order (e.g. s(0) = s'(0) = 0 for p in (-3, -1]).
double integrate_spline_power(const CubicSpline& s, double p);

}  // namespace gsqg

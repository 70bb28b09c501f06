#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gsqg {

struct MeshKind {
    enum class Type { Power, Sinh, Uniform, Custom };
    Type type = Type::Custom;
    double L = 0.0;  // power / uniform length
    double p = 1.0;  // power exponent
    double a = 0.0;  // sinh rate
    double s = 1.0;  // sinh inner scale
};

// Strictly increasing nodes starting at 0. Node i of an n-point mesh sits at
// the nominal position i/n; the right endpoint itself is not a node.
class Mesh {
public:
    Mesh() = default;
    Mesh(std::vector<double> nodes, MeshKind kind);

    std::size_t size() const { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    const std::vector<double>& nodes() const { return x_; }
    double back() const { return x_.back(); }
    const MeshKind& kind() const { return kind_; }
    double width(std::size_t cell) const { return x_[cell + 1] - x_[cell]; }

    // Index of the node nearest to x.
    std::size_t nearest(double x) const;
    // Cell index j with x_j <= x < x_{j+1}, clamped to [0, n-2].
    std::size_t locate(double x) const;

    std::string describe() const;  // e.g. "power:5:2000:2"

private:
    std::vector<double> x_;
    MeshKind kind_;
};

Mesh power_mesh(double L, std::size_t n, double p);
// s * sinh(A i/n) with A chosen so the nominal right end stays at sinh(a);
// s = 1 gives sinh(a i/n). Smaller s resolves profiles with a narrow core.
Mesh sinh_mesh(double a, std::size_t n, double s = 1.0);
Mesh uniform_mesh(double L, std::size_t n);
Mesh custom_mesh(std::vector<double> nodes);

// Same family with factor times as many nodes; node factor*i equals old node i.
Mesh refine(const Mesh& m, std::size_t factor);

// Parse "power:L:n[:p]", "sinh:a:n[:s]" or "uniform:L:n".
Mesh parse_mesh(const std::string& spec);

}  // namespace gsqg

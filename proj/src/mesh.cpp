#include "gsqg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsqg/errors.hpp"

namespace gsqg {

Mesh::Mesh(std::vector<double> nodes, MeshKind kind) : x_(std::move(nodes)), kind_(kind) {
    if (x_.size() < 4) throw DomainError("mesh needs at least 4 nodes");
    if (x_.front() != 0.0) throw DomainError("mesh must start at 0");
    for (std::size_t i = 1; i < x_.size(); ++i) {
        if (!std::isfinite(x_[i]) || !(x_[i] > x_[i - 1]))
            throw DomainError("mesh nodes must be finite and strictly increasing");
    }
}

std::size_t Mesh::nearest(double x) const {
    const std::size_t j = locate(x);
    return (x - x_[j] <= x_[j + 1] - x) ? j : j + 1;
}

std::size_t Mesh::locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t j = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(j, x_.size() - 2);
}

std::string Mesh::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_.type) {
        case MeshKind::Type::Power: os << "power:" << kind_.L << ':' << size() << ':' << kind_.p; break;
        case MeshKind::Type::Sinh:
            os << "sinh:" << kind_.a << ':' << size();
            if (kind_.s != 1.0) os << ':' << kind_.s;
            break;
        case MeshKind::Type::Uniform: os << "uniform:" << kind_.L << ':' << size(); break;
        case MeshKind::Type::Custom: os << "custom:" << size(); break;
    }
    return os.str();
}

Mesh power_mesh(double L, std::size_t n, double p) {
    if (!(L > 0.0) || n < 16 || !(p >= 1.0)) throw DomainError("power mesh needs L > 0, n >= 16, p >= 1");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = L * std::pow(static_cast<double>(i) / static_cast<double>(n), p);
    return Mesh(std::move(x), {MeshKind::Type::Power, L, p, 0.0});
}

Mesh sinh_mesh(double a, std::size_t n, double s) {
    if (!(a > 0.0) || n < 16 || !(s > 0.0 && s <= 1.0)) throw DomainError("sinh mesh needs a > 0, n >= 16, 0 < s <= 1");
    const double A = s == 1.0 ? a : std::asinh(std::sinh(a) / s);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = s * std::sinh(A * (static_cast<double>(i) / static_cast<double>(n)));
    return Mesh(std::move(x), {MeshKind::Type::Sinh, 0.0, 1.0, a, s});
}

Mesh uniform_mesh(double L, std::size_t n) {
    if (!(L > 0.0) || n < 16) throw DomainError("uniform mesh needs L > 0, n >= 16");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = L * (static_cast<double>(i) / static_cast<double>(n));
    return Mesh(std::move(x), {MeshKind::Type::Uniform, L, 1.0, 0.0});
}

Mesh custom_mesh(std::vector<double> nodes) { return Mesh(std::move(nodes), {}); }

Mesh refine(const Mesh& m, std::size_t factor) {
    if (factor < 1) throw DomainError("refinement factor must be >= 1");
    const std::size_t n = m.size() * factor;
    switch (m.kind().type) {
        case MeshKind::Type::Power: return power_mesh(m.kind().L, n, m.kind().p);
        case MeshKind::Type::Sinh: return sinh_mesh(m.kind().a, n, m.kind().s);
        case MeshKind::Type::Uniform: return uniform_mesh(m.kind().L, n);
        case MeshKind::Type::Custom: break;
    }
    // Custom meshes: subdivide each cell uniformly and extrapolate the last cell.
    std::vector<double> x;
    x.reserve(n);
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        for (std::size_t k = 0; k < factor; ++k)
            x.push_back(m[j] + m.width(j) * static_cast<double>(k) / static_cast<double>(factor));
    const double h = m.width(m.size() - 2);
    for (std::size_t k = 0; k < factor; ++k)
        x.push_back(m.back() + h * static_cast<double>(k) / static_cast<double>(factor));
    return custom_mesh(std::move(x));
}

Mesh parse_mesh(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    auto num = [&](std::size_t i) {
        try {
            return std::stod(parts.at(i));
        } catch (const std::exception&) {
            throw ConfigError("bad mesh spec '" + spec + "'");
        }
    };
    if (parts.empty()) throw ConfigError("empty mesh spec");
    if (parts[0] == "power" && (parts.size() == 3 || parts.size() == 4))
        return power_mesh(num(1), static_cast<std::size_t>(num(2)), parts.size() == 4 ? num(3) : 2.0);
    if (parts[0] == "sinh" && (parts.size() == 3 || parts.size() == 4))
        return sinh_mesh(num(1), static_cast<std::size_t>(num(2)), parts.size() == 4 ? num(3) : 1.0);
    if (parts[0] == "uniform" && parts.size() == 3) return uniform_mesh(num(1), static_cast<std::size_t>(num(2)));
    throw ConfigError("bad mesh spec '" + spec + "' (expected power:L:n[:p], sinh:a:n[:s] or uniform:L:n)");
}

}  // namespace gsqg

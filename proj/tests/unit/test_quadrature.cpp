#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <vector>

#include "doctest.h"
#include "fixtures_operators.hpp"
#include "gsqg/errors.hpp"
#include "gsqg/quadrature.hpp"

using namespace gsqg;

namespace {

double odd_density(int id, double x) {
    switch (id) {
        case 0: return x * std::exp(-x * x);
        case 1: return x < 1.0 ? x * std::pow(1.0 - x * x, 4) : 0.0;
        default: return x * std::pow(1.0 + x * x, -4);
    }
}

double even_density(int id, double x) { return x == 0.0 ? 1.0 : odd_density(id, x) / x; }

// One assembly per (operator, alpha), shared by the cases below.
const OperatorMatrix& oracle_operator(const std::string& op, double alpha, const Mesh& mesh) {
    static std::map<std::pair<std::string, double>, OperatorMatrix> cache;
    auto key = std::make_pair(op, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    OperatorMatrix M;
    if (op == "P1") M = assemble_p1(mesh, make_alpha_params(alpha, false));
    if (op == "U") M = assemble_u_hp(mesh, make_alpha_params(alpha, false));
    if (op == "TF") M = assemble_T_f1form(mesh, make_alpha_params(alpha, false), Plane::Full);
    if (op == "TH") M = assemble_T_f1form(mesh, make_alpha_params(alpha, false), Plane::Half);
    return cache.emplace(key, std::move(M)).first->second;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    for (int q : {1, 3, 8, 20}) {
        const auto& g = gauss_legendre(q);
        double s = 0.0, m = 0.0;
        for (std::size_t k = 0; k < g.x.size(); ++k) {
            s += g.w[k];
            m += g.w[k] * std::pow(g.x[k], 2 * q - 2);
        }
        CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(m == doctest::Approx(2.0 / (2 * q - 1)).epsilon(1e-13));
    }
}

TEST_CASE("graded integration handles endpoint and interior power singularities") {
    CHECK(integrate_graded([](double x) { return std::pow(x, 0.3); }, 0.0, 1.0, {0.0}) ==
          doctest::Approx(1.0 / 1.3).epsilon(1e-13));
    CHECK(integrate_graded([](double x) { return std::sqrt(std::abs(x - 0.37)); }, 0.0, 1.0, {0.37}) ==
          doctest::Approx((std::pow(0.37, 1.5) + std::pow(0.63, 1.5)) / 1.5).epsilon(1e-13));
}

TEST_CASE("operators agree with independent high-precision oracles") {
    const auto mesh = power_mesh(fixtures::kOpL, fixtures::kOpN, fixtures::kOpP);
    for (const auto& c : fixtures::kOperatorCases) {
        const std::string op = c.op;
        const auto& M = oracle_operator(op, c.alpha, mesh);
        std::vector<double> y(mesh.size());
        const bool even = op == "TF" || op == "TH";
        for (std::size_t i = 0; i < mesh.size(); ++i)
            y[i] = even ? even_density(c.density, mesh[i]) : odd_density(c.density, mesh[i]);
        const auto r = M.apply(y);
        double scale = 0.0, err = 0.0;
        for (int k = 0; k < 8; ++k) scale = std::max(scale, std::abs(c.values[k]));
        for (int k = 0; k < 8; ++k) err = std::max(err, std::abs(r[fixtures::kOpProbe[k]] - c.values[k]));
        CAPTURE(op);
        CAPTURE(c.alpha);
        CAPTURE(c.density);
        CHECK(err / scale <= 1e-5);
    }
}

TEST_CASE("oracle error falls at least threefold when the mesh is doubled") {
    // Probe k of the fixture mesh is node k/10 (k/5) of the 100 (200) node mesh.
    auto rel_error = [](const fixtures::OperatorCase& c, std::size_t n) {
        const auto mesh = power_mesh(fixtures::kOpL, n, fixtures::kOpP);
        const std::string op = c.op;
        const auto p = make_alpha_params(c.alpha, false);
        OperatorMatrix M = op == "P1"   ? assemble_p1(mesh, p)
                           : op == "U"  ? assemble_u_hp(mesh, p)
                           : op == "TF" ? assemble_T_f1form(mesh, p, Plane::Full)
                                        : assemble_T_f1form(mesh, p, Plane::Half);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = (op == "TF" || op == "TH") ? even_density(c.density, mesh[i]) : odd_density(c.density, mesh[i]);
        const auto r = M.apply(y);
        double scale = 0.0, err = 0.0;
        for (int k = 0; k < 8; ++k) {
            scale = std::max(scale, std::abs(c.values[k]));
            if (fixtures::kOpProbe[k] % 10 != 0) continue;
            err = std::max(err, std::abs(r[fixtures::kOpProbe[k] * n / fixtures::kOpN] - c.values[k]));
        }
        return err / scale;
    };
    for (const auto& c : fixtures::kOperatorCases) {
        const double e1 = rel_error(c, 100), e2 = rel_error(c, 200);
        CAPTURE(c.op);
        CAPTURE(c.alpha);
        CAPTURE(c.density);
        CAPTURE(e1);
        CAPTURE(e2);
        CHECK((e1 / e2 >= 3.0 || e2 < 1e-9));
    }
}

TEST_CASE("Hilbert transform pair at alpha = 1/2") {
    const auto mesh = power_mesh(40.0, 2000, 2.0);
    const auto M = assemble_p1(mesh, make_alpha_params(0.5, false), Parity::Even);
    std::vector<double> y;
    for (double x : mesh.nodes()) y.push_back(1.0 / (1.0 + x * x));
    const auto r = M.apply(y);
    double err = 0.0;
    for (std::size_t i = 0; i < mesh.size() && mesh[i] <= 5.0; ++i)
        err = std::max(err, std::abs(r[i] - mesh[i] / (1.0 + mesh[i] * mesh[i])));
    CHECK(err < 1e-4);
}

TEST_CASE("structural properties") {
    const auto mesh = power_mesh(6.0, 200, 2.0);
    const auto p = make_alpha_params(0.25, false);
    const auto U = assemble_u_hp(mesh, p);
    const auto T = assemble_T_f1form(mesh, p, Plane::Full);
    std::vector<double> zero(mesh.size(), 0.0), one(mesh.size(), 1.0), a(mesh.size()), b(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        a[i] = std::exp(-mesh[i]);
        b[i] = std::cos(mesh[i]);
    }
    for (double v : U.apply(zero)) CHECK(v == 0.0);
    for (double v : T.apply(one)) CHECK(std::abs(v) < 1e-12);
    const auto th = U.apply(a);
    CHECK(std::abs(th[0]) < 1e-12);
    std::vector<double> comb(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) comb[i] = 2.0 * a[i] - 3.0 * b[i];
    const auto lhs = T.apply(comb), ra = T.apply(a), rb = T.apply(b);
    for (std::size_t i = 0; i < mesh.size(); ++i)
        CHECK(lhs[i] == doctest::Approx(2.0 * ra[i] - 3.0 * rb[i]).epsilon(1e-12).scale(1.0));
    const auto T2 = assemble_T_f1form(mesh, p, Plane::Full);
    CHECK(std::memcmp(T.row(0), T2.row(0), sizeof(double) * mesh.size() * mesh.size()) == 0);
}

TEST_CASE("binary dump round trip") {
    const auto mesh = power_mesh(3.0, 32, 2.0);
    const auto M = assemble_p1(mesh, make_alpha_params(0.3, false));
    const auto path = (std::filesystem::temp_directory_path() / "gsqg_dump.bin").string();
    M.save(path);
    CHECK(std::filesystem::file_size(path) == 8 + 8 * 32 * 32);
    const auto L = OperatorMatrix::load(path, OpKind::P1FullPlane, 0.3);
    REQUIRE(L.size() == 32);
    for (std::size_t i = 0; i < 32; ++i)
        for (std::size_t j = 0; j < 32; ++j) CHECK(L(i, j) == M(i, j));
    std::filesystem::remove(path);
}

TEST_CASE("half-plane operators reject alpha >= 1/2") {
    const auto mesh = power_mesh(3.0, 32, 2.0);
    CHECK_THROWS_AS(assemble_u_hp(mesh, make_alpha_params(0.6, false)), DomainError);
    CHECK_THROWS_AS(assemble_T_f1form(mesh, make_alpha_params(0.5, false), Plane::Half), DomainError);
}

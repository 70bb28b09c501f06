#include <cmath>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "gsqg/errors.hpp"
#include "gsqg/field2d.hpp"
#include "gsqg/quadrature.hpp"
#include "gsqg/spline.hpp"

using namespace gsqg;

namespace {

double bump_theta(double x, double y) { return x * std::exp(-x * x) * std::exp(-(y / 4.0) * (y / 4.0)); }

double sup_abs(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

Field2D solved(std::size_t n, double alpha = 0.15) {
    Field2D f(n, 16.0);
    f.fill_upper(bump_theta);
    velocity_from_theta(f, make_alpha_params(alpha, true));
    return f;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Field2D(100, 1.0), GridError);
    CHECK_THROWS_AS(Field2D(4, 1.0), GridError);
    Field2D f(8, 2.0);
    CHECK(f.h() == 0.5);
    CHECK(f.coord(f.zero_row()) == 0.0);
    FieldOptions tiny;
    tiny.memory_cap_bytes = 1024;
    CHECK_THROWS_AS(velocity_from_theta(f, make_alpha_params(0.2, true), tiny), GridError);
    CHECK_THROWS_AS(velocity_from_theta(f, make_alpha_params(0.7, false)), DomainError);
}

TEST_CASE("zero theta gives zero velocity") {
    Field2D f(16, 4.0);
    f.fill_upper([](double, double) { return 0.0; });
    velocity_from_theta(f, make_alpha_params(0.2, true));
    CHECK(sup_abs(f.u1) == 0.0);
    CHECK(sup_abs(f.u2) == 0.0);
}

TEST_CASE("reflection and velocity parity") {
    const auto f = solved(128);
    const std::size_t n = f.n, z = f.zero_row();
    const double scale = sup_abs(f.u1);
    for (std::size_t m = 1; m < n / 2; ++m)
        for (std::size_t j = 0; j < n; ++j) {
            REQUIRE(f.at(f.theta, z - m, j) == -f.at(f.theta, z + m, j));
            // u1 even in y, u2 odd in y
            REQUIRE(std::abs(f.at(f.u1, z - m, j) - f.at(f.u1, z + m, j)) <= 1e-12 * scale);
            REQUIRE(std::abs(f.at(f.u2, z - m, j) + f.at(f.u2, z + m, j)) <= 1e-12 * scale);
        }
    double u2_boundary = 0.0;
    for (std::size_t j = 0; j < n; ++j) u2_boundary = std::max(u2_boundary, std::abs(f.at(f.u2, z, j)));
    CHECK(u2_boundary <= 1e-10 * scale);
    // theta odd in x (node 0 at x = -L has no mirror): u1 odd in x on the boundary row
    for (std::size_t j = 1; j < n / 2; ++j)
        CHECK(std::abs(f.at(f.u1, z, n / 2 - j) + f.at(f.u1, z, n / 2 + j)) <= 1e-12 * scale);
}

TEST_CASE("boundary-row u1 follows the 1D velocity in shape") {
    const auto f = solved(256);
    const auto params = make_alpha_params(0.15, true);
    const auto m = power_mesh(16.0, 2000, 2.0);
    std::vector<double> th(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) th[i] = m[i] * std::exp(-m[i] * m[i]);
    const CubicSpline U(m.nodes(), assemble_u_hp(m, params).apply(th), EndCondition::Natural, EndCondition::NotAKnot);
    const std::size_t z = f.zero_row(), j1 = static_cast<std::size_t>(std::lround((1.0 + f.L) / f.h()));
    const double ratio = f.at(f.u1, z, j1) / U(1.0);
    double err = 0.0, sup = 0.0;
    for (std::size_t j = 0; j < f.n; ++j) {
        const double x = f.coord(j);
        if (std::abs(x) > 4.0) continue;
        const double ref = (x < 0.0 ? -1.0 : 1.0) * U(std::abs(x)) * ratio;
        err = std::max(err, std::abs(f.at(f.u1, z, j) - ref));
        sup = std::max(sup, std::abs(ref));
    }
    CAPTURE(ratio);
    CHECK(err <= 0.1 * sup);
    CHECK(ratio > 0.0);
}

TEST_CASE("doubling the grid barely moves boundary-row u1") {
    const auto a = solved(128), b = solved(256);
    double diff = 0.0, sup = 0.0;
    for (std::size_t j = 0; j < a.n; ++j) {
        if (std::abs(a.coord(j)) > 8.0) continue;
        const double ua = a.at(a.u1, a.zero_row(), j), ub = b.at(b.u1, b.zero_row(), 2 * j);
        diff = std::max(diff, std::abs(ua - ub));
        sup = std::max(sup, std::abs(ub));
    }
    CHECK(diff < 0.05 * sup);
}

TEST_CASE("cross sections") {
    Field2D f(16, 4.0);
    f.fill_upper([](double x, double y) { return x + 2.0 * y; });
    velocity_from_theta(f, make_alpha_params(0.2, true));
    const auto rows = cross_sections(f, {0.25, 4.0}, {1.0});
    CHECK(rows.size() == 3 * f.n);
    for (const auto& r : rows) {
        if (r.axis == 'x' && r.value == 0.25 && r.s > 0.0) CHECK(r.theta == doctest::Approx(0.25 + 2.0 * r.s));
        if (r.axis == 'y') CHECK(r.theta == doctest::Approx(r.s + 2.0));
    }
    // x = +L snaps to the last node
    bool saw_edge = false;
    for (const auto& r : rows)
        if (r.axis == 'x' && r.value == 4.0 && r.s == 1.0) {
            CHECK(r.theta == doctest::Approx(3.5 + 2.0));
            saw_edge = true;
        }
    CHECK(saw_edge);
    CHECK_THROWS_AS(cross_sections(f, {5.0}, {}), DomainError);
    CHECK_THROWS_AS(cross_sections(f, {}, {-4.5}), DomainError);
}

TEST_CASE("raw dump round trip") {
    const auto path = (std::filesystem::temp_directory_path() / "gsqg_field_roundtrip.bin").string();
    Field2D f(8, 3.0);
    f.fill_upper([](double x, double y) { return std::sin(x) * y; });
    dump_raw(path, f, f.theta);
    std::size_t n = 0;
    double L = 0.0;
    const auto back = load_raw(path, n, L);
    CHECK(n == 8);
    CHECK(L == 3.0);
    CHECK(back == f.theta);
    CHECK(std::filesystem::file_size(path) == 16 + 8 * 64);
    std::filesystem::remove(path);
    CHECK_THROWS(load_raw(path, n, L));
}

TEST_CASE("iterate_field calls the hook after each velocity evaluation") {
    Field2D f(8, 2.0);
    f.fill_upper([](double x, double y) { return x * y; });
    int calls = 0;
    iterate_field(f, make_alpha_params(0.2, true), 3, [&](Field2D& g, int k) {
        CHECK(k == calls);
        CHECK(g.u1.size() == 64);
        ++calls;
    });
    CHECK(calls == 3);
}

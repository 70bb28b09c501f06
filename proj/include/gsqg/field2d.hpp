#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsqg/params.hpp"

namespace gsqg {

// n x n nodes on [-L, L)^2 with spacing h = 2L/n; node (i, j) sits at
// x = -L + j h, y = -L + i h, stored row-major (row i is a fixed y). Row n/2 is y = 0.
struct Field2D {
    std::size_t n = 0;
    double L = 0.0;
    std::vector<double> theta, u1, u2;

    Field2D() = default;
    Field2D(std::size_t n, double L);  // GridError unless n is a power of two >= 8
    double h() const { return 2.0 * L / static_cast<double>(n); }
    double coord(std::size_t k) const { return -L + static_cast<double>(k) * h(); }
    std::size_t zero_row() const { return n / 2; }
    double& at(std::vector<double>& v, std::size_t i, std::size_t j) const { return v[i * n + j]; }
    double at(const std::vector<double>& v, std::size_t i, std::size_t j) const { return v[i * n + j]; }

    // theta(x, y) sampled for y >= 0 and extended oddly; the row y = -L has no
    // mirror and is zeroed. Row y = 0 keeps the boundary trace theta(x, 0+);
    // the odd extension jumps there, and the velocity treats that row as two half cells.
    void fill_upper(const std::function<double(double, double)>& fn);
    void enforce_odd_in_y();
};

struct FieldOptions {
    std::size_t memory_cap_bytes = std::size_t(2) << 30;
};

std::size_t field_memory_estimate(std::size_t n);

// u1, u2 from the reflected kernels by zero-padded FFT convolution against
// cell integrals of the kernel (theta piecewise constant per cell). The
// singular cell's integral vanishes by oddness.
void velocity_from_theta(Field2D& field, const AlphaParams& params, const FieldOptions& opt = {});

struct SectionRow {
    char axis = 'x';  // 'x': line x = value (varying y); 'y': line y = value (varying x)
    double value = 0.0;
    double s = 0.0;  // coordinate along the line
    double theta = 0.0, u1 = 0.0, u2 = 0.0;
};

// Bilinear samples at the grid nodes along each line. A value within one
// spacing of +L is snapped to the last node; anything else outside is a DomainError.
std::vector<SectionRow> cross_sections(const Field2D& field, const std::vector<double>& xs,
                                       const std::vector<double>& ys);

// Row-major float64 payload after a 16-byte header (uint64 n, float64 L).
void dump_raw(const std::string& path, const Field2D& field, const std::vector<double>& data);
std::vector<double> load_raw(const std::string& path, std::size_t& n, double& L);

// Evaluates the velocity and then calls update(field, k) for k = 0..steps-1.
// No update rule is built in.
using FieldUpdate = std::function<void(Field2D&, int)>;
void iterate_field(Field2D& field, const AlphaParams& params, int steps, const FieldUpdate& update,
                   const FieldOptions& opt = {});

}  // namespace gsqg

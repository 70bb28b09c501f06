#include "gsqg/field2d.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>

#include "gsqg/errors.hpp"
#include "gsqg/quadrature.hpp"

namespace gsqg {

namespace {

bool power_of_two(std::size_t n) { return n >= 8 && (n & (n - 1)) == 0; }

std::mutex& plan_mutex() {
    static std::mutex m;  // FFTW planning is not thread-safe
    return m;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};
template <class T>
using FftwBuf = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuf<T> alloc(std::size_t count) {
    auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * count));
    if (!p) throw GridError("FFTW allocation failed");
    return FftwBuf<T>(p);
}

constexpr double kNearCells = 8.0;
constexpr int kMaxSplit = 8;

double kernel(double dx, double dy, double a, int comp) {
    const double k = std::pow(dx * dx + dy * dy, -1.0 - a);
    return comp == 0 ? dy * k : -dx * k;
}

// Integral of the kernel over the source rectangle [x0,x1] x [y0,y1], seen from
// offset (dx, dy). Rectangles touching the singularity are split toward it.
double rect_integral(double dx, double dy, double x0, double x1, double y0, double y1, double a, int comp,
                     int depth) {
    const double cx = dx - 0.5 * (x0 + x1), cy = dy - 0.5 * (y0 + y1);
    const double wx = x1 - x0, wy = y1 - y0;
    const bool touches = std::abs(cx) <= 0.5 * wx && std::abs(cy) <= 0.5 * wy;
    if (touches && depth < kMaxSplit) {
        const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
        return rect_integral(dx, dy, x0, xm, y0, ym, a, comp, depth + 1) +
               rect_integral(dx, dy, xm, x1, y0, ym, a, comp, depth + 1) +
               rect_integral(dx, dy, x0, xm, ym, y1, a, comp, depth + 1) +
               rect_integral(dx, dy, xm, x1, ym, y1, a, comp, depth + 1);
    }
    const double dist = std::max(std::abs(cx) - 0.5 * wx, std::abs(cy) - 0.5 * wy);
    const auto& g = gauss_legendre(dist <= std::max(wx, wy) ? 16 : 8);
    double s = 0.0;
    for (std::size_t p = 0; p < g.x.size(); ++p)
        for (std::size_t q = 0; q < g.x.size(); ++q)
            s += g.w[p] * g.w[q] * kernel(cx - 0.5 * wx * g.x[q], cy - 0.5 * wy * g.x[p], a, comp);
    return 0.25 * wx * wy * s;
}

// Source cell of the interior rows: full cell, theta constant.
double interior_weight(double dx, double dy, double h, double a, int comp, bool near) {
    if (dx == 0.0 && dy == 0.0) return 0.0;  // odd kernel over a centred cell
    if (!near) return h * h * kernel(dx, dy, a, comp);
    return rect_integral(dx, dy, -0.5 * h, 0.5 * h, -0.5 * h, 0.5 * h, a, comp, 0);
}

// Source cell on the boundary row: theta above y = 0, -theta below.
double boundary_weight(double dx, double dy, double h, double a, int comp, bool near) {
    if (!near)
        return 0.5 * h * h * (kernel(dx, dy - 0.25 * h, a, comp) - kernel(dx, dy + 0.25 * h, a, comp));
    return rect_integral(dx, dy, -0.5 * h, 0.5 * h, 0.0, 0.5 * h, a, comp, 0) -
           rect_integral(dx, dy, -0.5 * h, 0.5 * h, -0.5 * h, 0.0, a, comp, 0);
}

}  // namespace

Field2D::Field2D(std::size_t n_, double L_) : n(n_), L(L_) {
    if (!power_of_two(n)) throw GridError("field grid size must be a power of two >= 8");
    if (!(L > 0.0)) throw GridError("field half-width must be positive");
    theta.assign(n * n, 0.0);
    u1.assign(n * n, 0.0);
    u2.assign(n * n, 0.0);
}

void Field2D::fill_upper(const std::function<double(double, double)>& fn) {
    for (std::size_t i = zero_row(); i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at(theta, i, j) = fn(coord(j), coord(i));
    enforce_odd_in_y();
}

void Field2D::enforce_odd_in_y() {
    const std::size_t z = zero_row();
    for (std::size_t j = 0; j < n; ++j) at(theta, 0, j) = 0.0;
    for (std::size_t m = 1; m < z; ++m)
        for (std::size_t j = 0; j < n; ++j) at(theta, z - m, j) = -at(theta, z + m, j);
}

std::size_t field_memory_estimate(std::size_t n) {
    const std::size_t N = 2 * n;
    const std::size_t spec = N * (N / 2 + 1) * sizeof(fftw_complex);
    return 3 * spec + 2 * N * N * sizeof(double) + 3 * n * n * sizeof(double);
}

void velocity_from_theta(Field2D& field, const AlphaParams& params, const FieldOptions& opt) {
    const std::size_t n = field.n;
    if (!power_of_two(n)) throw GridError("field grid size must be a power of two >= 8");
    if (!(params.alpha > 0.0 && params.alpha < 0.5)) throw DomainError("2D kernels need alpha in (0, 1/2)");
    if (field_memory_estimate(n) > opt.memory_cap_bytes)
        throw GridError("field of size " + std::to_string(n) + " exceeds the memory cap");

    const std::size_t N = 2 * n, NC = N / 2 + 1, z = field.zero_row();
    const double h = field.h(), a = params.alpha;
    auto real = alloc<double>(N * N);
    auto interior_hat = alloc<fftw_complex>(N * NC);
    auto boundary_hat = alloc<fftw_complex>(N * NC);
    auto k_hat = alloc<fftw_complex>(N * NC);
    auto acc = alloc<fftw_complex>(N * NC);

    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fwd = fftw_plan_dft_r2c_2d(static_cast<int>(N), static_cast<int>(N), real.get(), k_hat.get(), FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(static_cast<int>(N), static_cast<int>(N), acc.get(), real.get(), FFTW_ESTIMATE);
    }

    // Interior rows and the boundary trace (row y = 0) are convolved separately.
    for (int part = 0; part < 2; ++part) {
        std::memset(real.get(), 0, sizeof(double) * N * N);
        for (std::size_t i = 0; i < n; ++i) {
            if ((i == z) != (part == 1)) continue;
            for (std::size_t j = 0; j < n; ++j) real[i * N + j] = field.at(field.theta, i, j);
        }
        fftw_execute_dft_r2c(fwd, real.get(), part == 0 ? interior_hat.get() : boundary_hat.get());
    }

    // Kernel tables on offsets -n+1 .. n-1 in wrapped order.
    auto offset = [&](std::size_t k) {
        return k < n ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(N);
    };
    const double scale = params.c0 / static_cast<double>(N * N);
    for (int comp = 0; comp < 2; ++comp) {
        std::memset(acc.get(), 0, sizeof(fftw_complex) * N * NC);
        for (int part = 0; part < 2; ++part) {
            for (std::size_t i = 0; i < N; ++i) {
                for (std::size_t j = 0; j < N; ++j) {
                    double v = 0.0;
                    if (i != n && j != n) {
                        const bool near = std::max(std::abs(offset(i)), std::abs(offset(j))) <= kNearCells;
                        const double dx = offset(j) * h, dy = offset(i) * h;
                        v = part == 0 ? interior_weight(dx, dy, h, a, comp, near)
                                      : boundary_weight(dx, dy, h, a, comp, near);
                    }
                    real[i * N + j] = v * scale;
                }
            }
            fftw_execute_dft_r2c(fwd, real.get(), k_hat.get());
            const fftw_complex* src = part == 0 ? interior_hat.get() : boundary_hat.get();
            for (std::size_t k = 0; k < N * NC; ++k) {
                const std::complex<double> p = std::complex<double>(src[k][0], src[k][1]) *
                                               std::complex<double>(k_hat[k][0], k_hat[k][1]);
                acc[k][0] += p.real();
                acc[k][1] += p.imag();
            }
        }
        fftw_execute_dft_c2r(bwd, acc.get(), real.get());
        auto& out = comp == 0 ? field.u1 : field.u2;
        out.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] = real[i * N + j];
    }
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
}

std::vector<SectionRow> cross_sections(const Field2D& field, const std::vector<double>& xs,
                                       const std::vector<double>& ys) {
    const std::size_t n = field.n;
    const double h = field.h();
    auto index = [&](double c) {
        double t = (c + field.L) / h;
        if (t > static_cast<double>(n - 1) && t <= static_cast<double>(n) + 1e-12) t = static_cast<double>(n - 1);
        if (!(t >= -1e-12 && t <= static_cast<double>(n - 1) + 1e-12))
            throw DomainError("section line " + std::to_string(c) + " lies outside the grid");
        return std::clamp(t, 0.0, static_cast<double>(n - 1));
    };
    auto sample = [&](const std::vector<double>& v, double ti, double tj) {
        const std::size_t i0 = std::min<std::size_t>(static_cast<std::size_t>(ti), n - 2);
        const std::size_t j0 = std::min<std::size_t>(static_cast<std::size_t>(tj), n - 2);
        const double fi = ti - static_cast<double>(i0), fj = tj - static_cast<double>(j0);
        return (1 - fi) * ((1 - fj) * field.at(v, i0, j0) + fj * field.at(v, i0, j0 + 1)) +
               fi * ((1 - fj) * field.at(v, i0 + 1, j0) + fj * field.at(v, i0 + 1, j0 + 1));
    };
    std::vector<SectionRow> rows;
    for (double x : xs) {
        const double tj = index(x);
        for (std::size_t i = 0; i < n; ++i) {
            const double ti = static_cast<double>(i);
            rows.push_back({'x', x, field.coord(i), sample(field.theta, ti, tj), sample(field.u1, ti, tj),
                            sample(field.u2, ti, tj)});
        }
    }
    for (double y : ys) {
        const double ti = index(y);
        for (std::size_t j = 0; j < n; ++j) {
            const double tj = static_cast<double>(j);
            rows.push_back({'y', y, field.coord(j), sample(field.theta, ti, tj), sample(field.u1, ti, tj),
                            sample(field.u2, ti, tj)});
        }
    }
    return rows;
}

void dump_raw(const std::string& path, const Field2D& field, const std::vector<double>& data) {
    if (data.size() != field.n * field.n) throw DomainError("raw dump expects n*n values");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    const std::uint64_t n = field.n;
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&field.L), sizeof field.L);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(sizeof(double) * data.size()));
    if (!out) throw DomainError("write failed for " + path);
}

std::vector<double> load_raw(const std::string& path, std::size_t& n, double& L) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::uint64_t nn = 0;
    in.read(reinterpret_cast<char*>(&nn), sizeof nn);
    in.read(reinterpret_cast<char*>(&L), sizeof L);
    if (!in || nn == 0 || nn > (1u << 16)) throw DomainError("bad raw field header in " + path);
    n = nn;
    std::vector<double> v(n * n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(sizeof(double) * v.size()));
    if (!in) throw DomainError("truncated raw field " + path);
    return v;
}

void iterate_field(Field2D& field, const AlphaParams& params, int steps, const FieldUpdate& update,
                   const FieldOptions& opt) {
    for (int k = 0; k < steps; ++k) {
        velocity_from_theta(field, params, opt);
        if (update) update(field, k);
    }
}

}  // namespace gsqg

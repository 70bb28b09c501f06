#include "gsqg/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/errors.hpp"

namespace gsqg {

namespace {

// Running minimum of a margin with its location.
struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    double at = 0.0;
    void see(double m, double x) {
        if (m < margin) {
            margin = m;
            at = x;
        }
    }
};

void add(MembershipReport& r, const std::string& name, const Worst& w) {
    const double m = std::isfinite(w.margin) ? w.margin : 0.0;
    r.checks.push_back({name, m >= -r.tol, m, w.at});
}

void add(MembershipReport& r, const std::string& name, double margin, double at) {
    r.checks.push_back({name, margin >= -r.tol, margin, at});
}

void shape_checks(MembershipReport& r, const std::vector<double>& x, const std::vector<double>& f, bool positive) {
    add(r, "normalized", -std::abs(f[0] - 1.0), 0.0);
    Worst sign, mono, conv;
    for (std::size_t i = 0; i < f.size(); ++i) sign.see(f[i], x[i]);
    if (positive && sign.margin <= 0.0) sign.margin = std::min(sign.margin, -std::numeric_limits<double>::min());
    add(r, positive ? "positive" : "nonnegative", sign);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) mono.see(f[i] - f[i + 1], x[i + 1]);
    add(r, "monotone", mono);
    // f(sqrt s) convex: the middle value lies on or below the chord in s = x^2
    for (std::size_t i = 0; i + 2 < f.size(); ++i) {
        const double s0 = x[i] * x[i], s1 = x[i + 1] * x[i + 1], s2 = x[i + 2] * x[i + 2];
        const double w = (s1 - s0) / (s2 - s0);
        conv.see((1.0 - w) * f[i] + w * f[i + 2] - f[i + 1], x[i + 1]);
    }
    add(r, "sqrt_convex", conv);
}

std::vector<std::size_t> log_probes(const Mesh& m, double lo, double hi, int count) {
    std::vector<std::size_t> out;
    for (int k = 0; k < count; ++k) {
        const double x = lo * std::pow(hi / lo, count == 1 ? 0.0 : static_cast<double>(k) / (count - 1));
        const std::size_t i = std::max<std::size_t>(1, m.nearest(x));
        if (out.empty() || out.back() != i) out.push_back(i);
    }
    return out;
}

}  // namespace

const char* set_kind_name(SetKind k) {
    switch (k) {
        case SetKind::V1FullPlane: return "V1_full_plane";
        case SetKind::V1HalfPlane: return "V1_half_plane";
        case SetKind::LemmaFullPlane: return "lemma_full_plane";
        case SetKind::LemmaHalfPlane: return "lemma_half_plane";
    }
    return "unknown";
}

bool MembershipReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check& MembershipReport::get(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw DomainError("no check named " + name);
}

std::vector<std::string> MembershipReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

double default_tol(const std::vector<double>& f) {
    double s = 0.0;
    for (double v : f) s = std::max(s, std::abs(v));
    return 1e-8 * (1.0 + s);
}

double secant_slope(const std::vector<double>& x, const std::vector<double>& f, double at) {
    auto it = std::lower_bound(x.begin(), x.end(), at);
    std::size_t j = static_cast<std::size_t>(it - x.begin());
    j = std::clamp<std::size_t>(j, 1, x.size() - 1);
    return (f[j] - f[j - 1]) / (x[j] - x[j - 1]);
}

MembershipReport check_V1(const ProfileR2& p, const AlphaParams& params, double tol) {
    MembershipReport r;
    r.kind = SetKind::V1FullPlane;
    r.tol = tol < 0.0 ? default_tol(p.f) : tol;
    const auto& x = p.mesh.nodes();
    shape_checks(r, x, p.f, false);
    Worst lower, upper;
    const double eta = params.eta;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lower.see(p.f[i] - std::max(0.0, 1.0 - x[i] * x[i]), x[i]);
        upper.see(std::max(1.0 - eta * x[i] * x[i], 1.0 - eta / 4.0) - p.f[i], x[i]);
    }
    add(r, "lower_barrier", lower);
    add(r, "upper_barrier", upper);
    add(r, "slope_at_half", -eta - secant_slope(x, p.f, 0.5), 0.5);
    return r;
}

MembershipReport check_V1_hp(const ProfileHP& p, const AlphaParams& params, double tol) {
    if (!params.half_plane) throw DomainError("half-plane constants are not available for this alpha");
    MembershipReport r;
    r.kind = SetKind::V1HalfPlane;
    r.tol = tol < 0.0 ? default_tol(p.f) : tol;
    const auto& x = p.mesh.nodes();
    shape_checks(r, x, p.f, true);
    Worst lower, upper;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lower.see(p.f[i] - barrier_lower(params, x[i]), x[i]);
        upper.see(barrier_upper(params, x[i]) - p.f[i], x[i]);
    }
    add(r, "lower_barrier", lower);
    add(r, "upper_barrier", upper);
    const double t0 = params.t0;
    if (t0 < x.back())
        add(r, "slope_at_t0", -std::pow(t0, params.alpha - 1.5) - secant_slope(x, p.f, t0), t0);
    else
        add(r, "slope_at_t0", -std::numeric_limits<double>::infinity(), t0);
    return r;
}

MembershipReport check_lemma_bounds(const ProfileR2& p, const AlphaParams& params, const FunctionalsR2& fn,
                                    double tol) {
    MembershipReport r;
    r.kind = SetKind::LemmaFullPlane;
    r.tol = tol < 0.0 ? 1e-8 * (1.0 + std::abs(fn.c)) : tol;
    const double a = params.alpha;
    const double pref = (1.0 + 2.0 * a) / (3.0 * (1.0 - a)) * params.c1;
    const double expo = std::min(1.0 - a, a);
    const double hi = p.mesh[std::max<std::size_t>(p.support_idx, 2)];
    Worst w;
    for (std::size_t i : log_probes(p.mesh, p.mesh[1], hi, 10)) {
        const double x = p.mesh[i];
        const double bound = pref * std::pow(std::max(0.0, 1.0 - p.f[i]), expo) * (1.0 + std::pow(x, -2.0 * a));
        w.see(bound - fn.c, x);
    }
    add(r, "c_upper_bound", w);
    add(r, "c_positive", fn.c, 0.0);
    return r;
}

MembershipReport check_lemma_bounds(const ProfileHP& p, const AlphaParams& params, const FunctionalsHP& fn,
                                    const std::vector<double>& frakT, double tol) {
    if (!params.half_plane) throw DomainError("half-plane constants are not available for this alpha");
    MembershipReport r;
    r.kind = SetKind::LemmaHalfPlane;
    r.tol = tol < 0.0 ? 1e-8 * (1.0 + std::abs(fn.b_frak)) : tol;
    add(r, "b_lower", fn.b_frak - params.b_lo, 0.0);
    add(r, "b_upper", params.b_hi - fn.b_frak, 0.0);
    add(r, "c_lower", fn.c_frak - params.c_lo, 0.0);
    add(r, "c_upper", params.c_hi - fn.c_frak, 0.0);
    Worst cap, decr;
    const auto probes = log_probes(p.mesh, p.mesh[1], 0.5 * p.mesh.back(), 10);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i : probes) {
        const double x = p.mesh[i];
        cap.see(std::min(fn.b_frak, 0.5 * fn.c_frak * x * x) - frakT[i], x);
        const double q = frakT[i] / (x * x);
        decr.see((prev - q) / (1.0 + q), x);  // relative: q starts near c/2, which can be huge
        prev = q;
    }
    add(r, "T_below_min_b_cx2", cap);
    add(r, "T_over_x2_nonincreasing", decr);
    return r;
}

}  // namespace gsqg

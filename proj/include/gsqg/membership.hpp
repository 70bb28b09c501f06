#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsqg/operators_hp.hpp"
#include "gsqg/operators_r2.hpp"
#include "gsqg/params.hpp"

namespace gsqg {

enum class SetKind { V1FullPlane, V1HalfPlane, LemmaFullPlane, LemmaHalfPlane };
const char* set_kind_name(SetKind k);

// margin is the worst slack of the inequality (negative means violated);
// a check passes when margin >= -tol.
struct Check {
    std::string name;
    bool pass = true;
    double margin = 0.0;
    double location = 0.0;
};

struct MembershipReport {
    SetKind kind = SetKind::V1FullPlane;
    double tol = 0.0;
    std::vector<Check> checks;

    bool passed() const;
    const Check& get(const std::string& name) const;  // throws DomainError if absent
    std::vector<std::string> failures() const;
};

// Default tolerance 1e-8 (1 + sup|f|).
double default_tol(const std::vector<double>& f);

// tol < 0 selects default_tol.
MembershipReport check_V1(const ProfileR2& p, const AlphaParams& params, double tol = -1.0);
MembershipReport check_V1_hp(const ProfileHP& p, const AlphaParams& params, double tol = -1.0);

// Functional bounds at ten log-spaced probes.
MembershipReport check_lemma_bounds(const ProfileR2& p, const AlphaParams& params, const FunctionalsR2& fn,
                                    double tol = -1.0);
// frakT holds 𝔗(f) at the nodes.
MembershipReport check_lemma_bounds(const ProfileHP& p, const AlphaParams& params, const FunctionalsHP& fn,
                                    const std::vector<double>& frakT, double tol = -1.0);

// Secant slope over the cell containing x (the left cell when x is a node).
double secant_slope(const std::vector<double>& x, const std::vector<double>& f, double at);

}  // namespace gsqg

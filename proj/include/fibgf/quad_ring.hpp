#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibgf/classifier.hpp"
#include "fibgf/params.hpp"
#include "fibgf/quad_num.hpp"

namespace fibgf {

enum class GenFn { F, L };

// Denotes the radius 2 / (a sqrt(d) + sqrt(a^2 d + 4b)).
struct RadiusSpec {
    Params params;
    Int d;
};

// t / (1 - a sqrt(d) t - b t^2), exactly in Q(sqrt(d)).
QuadNum eval_f_quad(const Params& params, const Int& d, const QuadNum& t);
// (2 - a sqrt(d) t) / (1 - a sqrt(d) t - b t^2).
QuadNum eval_l_quad(const Params& params, const Int& d, const QuadNum& t);

// Strict |t| < radius, decided exactly by nested squaring (no floating point
// and no precision cap; the comparison always resolves).
bool within_radius(const RadiusSpec& spec, const QuadNum& t);

// Sign of t - r where r is the positive root of b r^2 + a sqrt(d) r - 1 = 0,
// the shared limit of the F- and L-ratio families. Exact.
int cmp_vs_positive_root(const Params& params, const Int& d, const QuadNum& t);
// Same for the negative root, the limit of both negated families.
int cmp_vs_negative_root(const Params& params, const Int& d, const QuadNum& t);

// Index i with t equal to the i-th member of the family, or nullopt once the
// parity brackets certify non-membership. The family ratios converge to the
// roots above monotonically by parity, so the search always terminates.
std::optional<int> find_family_index(const Params& params, const Int& d,
                                     const QuadNum& t, Verdict family);

struct FamilyMembership {
    Verdict family;
    std::optional<int> index;
};

// Membership report against the f families (two) or l families (four).
std::vector<FamilyMembership> quad_family_membership(const Params& params,
                                                     const Int& d,
                                                     const QuadNum& t,
                                                     GenFn which);

struct CounterexampleClaim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CounterexampleEntry {
    std::string id;  // "f" or "l"
    Int a, b, d;
    std::string t_text;
    std::string expected_text;
    std::vector<CounterexampleClaim> claims;
    bool ok = false;
    // What happens to the same (u, v) pair when d is forced to 1: the
    // counterexample status does not survive there.
    std::string d1_flipped_claim;  // "family membership" or "integrality"
    std::string d1_note;
    bool d1_counterexample = false;
};

struct CounterexampleReport {
    std::vector<CounterexampleEntry> entries;
    bool all_ok = false;
};

// Recomputes both d = 2 counterexamples from scratch (evaluation, ring
// membership, radius, family non-membership) and reports pass/fail per claim.
CounterexampleReport counterexample_report();

}  // namespace fibgf

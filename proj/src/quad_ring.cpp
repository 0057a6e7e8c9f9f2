#include "fibgf/quad_ring.hpp"

#include "fibgf/error.hpp"
#include "fibgf/sequences.hpp"

namespace fibgf {

namespace {

QuadNum rat_in(const Rat& r, const Int& d) {
    return QuadNum::rational(r, d);
}

// Denominator 1 - a sqrt(d) t - b t^2 of both generating functions.
QuadNum gen_denominator(const Params& params, const Int& d, const QuadNum& t) {
    QuadNum a_sqrt_d(Rat(0), Rat(params.a), d);
    return rat_in(Rat(1), d) - a_sqrt_d * t - rat_in(Rat(params.b), d) * t * t;
}

void require_matching_d(const Int& d, const QuadNum& t) {
    if (t.d() != d)
        throw_precondition("point lives in Q(sqrt(" + t.d().get_str() +
                           ")) but d = " + d.get_str());
}

}  // namespace

QuadNum eval_f_quad(const Params& params, const Int& d, const QuadNum& t) {
    require_matching_d(d, t);
    QuadNum den = gen_denominator(params, d, t);
    if (den.is_zero()) throw_pole("1 - a sqrt(d) t - b t^2 = 0");
    return t / den;
}

QuadNum eval_l_quad(const Params& params, const Int& d, const QuadNum& t) {
    require_matching_d(d, t);
    QuadNum den = gen_denominator(params, d, t);
    if (den.is_zero()) throw_pole("1 - a sqrt(d) t - b t^2 = 0");
    QuadNum a_sqrt_d(Rat(0), Rat(params.a), d);
    return (rat_in(Rat(2), d) - a_sqrt_d * t) / den;
}

bool within_radius(const RadiusSpec& spec, const QuadNum& t) {
    require_matching_d(spec.d, t);
    // |t| < 2 / (a sqrt(d) + sqrt(c)) with c = a^2 d + 4b. Rationalizing,
    // the radius is (sqrt(c) - a sqrt(d)) / (2b), so the comparison is
    // 2b |t| + a sqrt(d) < sqrt(c), decided exactly by squaring.
    const Params& P = spec.params;
    Int c = P.a * P.a * spec.d + 4 * P.b;
    QuadNum lhs = rat_in(Rat(Int(2 * P.b)), spec.d) * t.abs() +
                  QuadNum(Rat(0), Rat(P.a), spec.d);
    return cmp_with_sqrt(lhs, c) < 0;
}

int cmp_vs_positive_root(const Params& params, const Int& d, const QuadNum& t) {
    // t - r has the sign of (2b t + a sqrt(d)) - sqrt(c).
    Int c = params.a * params.a * d + 4 * params.b;
    QuadNum s = rat_in(Rat(Int(2 * params.b)), d) * t + QuadNum(Rat(0), Rat(params.a), d);
    return cmp_with_sqrt(s, c);
}

int cmp_vs_negative_root(const Params& params, const Int& d, const QuadNum& t) {
    // t - r' has the sign of (2b t + a sqrt(d)) + sqrt(c).
    Int c = params.a * params.a * d + 4 * params.b;
    QuadNum s = rat_in(Rat(Int(2 * params.b)), d) * t + QuadNum(Rat(0), Rat(params.a), d);
    if (s.sign() >= 0) return 1;
    QuadNum diff = rat_in(Rat(c), d) - s * s;  // sign of sqrt(c) - |s|
    return diff.sign();
}

std::optional<int> find_family_index(const Params& params, const Int& d, const QuadNum& t,
                                     Verdict family) {
    require_matching_d(d, t);
    const bool lucas = family == Verdict::LRatio || family == Verdict::NegLRatioOverB;
    const bool negated = family == Verdict::NegFRatioOverB || family == Verdict::NegLRatioOverB;
    const int i0 = family == Verdict::NegFRatioOverB ? 1 : 0;

    // The positive families converge to the positive root of
    // b r^2 + a sqrt(d) r - 1, the negated ones to the negative root. If t
    // sits exactly on the relevant root it equals no member (the ratios are
    // never stationary), and otherwise each parity subsequence approaches the
    // root monotonically, so membership is excluded once t falls outside the
    // interval between the current member and the root.
    int t_vs_limit = negated ? cmp_vs_negative_root(params, d, t)
                             : cmp_vs_positive_root(params, d, t);
    if (t_vs_limit == 0) return std::nullopt;

    QuadNum point = QuadNum::sqrt_d(d);
    QuadNum cur = seq_at(params, lucas ? SeqKind::Lucas : SeqKind::Fib, i0, point);
    QuadNum nxt = seq_at(params, lucas ? SeqKind::Lucas : SeqKind::Fib, i0 + 1, point);
    QuadNum a_point = QuadNum(Rat(0), Rat(params.a), d);
    QuadNum b_in = rat_in(Rat(params.b), d);

    bool done[2] = {false, false};
    constexpr int kMaxIndex = 100000;
    for (int i = i0; i <= kMaxIndex; ++i) {
        int parity = i & 1;
        if (!done[parity]) {
            QuadNum member = negated ? -(nxt / (b_in * cur)) : cur / nxt;
            if (member == t) return i;
            // Future members of this parity lie strictly between the current
            // member and the limit.
            done[parity] = cmp(member, t) != t_vs_limit;
        }
        if (done[0] && done[1]) return std::nullopt;
        QuadNum next = a_point * nxt + b_in * cur;
        cur = nxt;
        nxt = next;
    }
    throw_internal("family search did not terminate within the index cap");
}

std::vector<FamilyMembership> quad_family_membership(const Params& params, const Int& d,
                                                     const QuadNum& t, GenFn which) {
    std::vector<Verdict> families;
    if (which == GenFn::F) {
        families = {Verdict::FRatio, Verdict::NegFRatioOverB};
    } else {
        families = {Verdict::FRatio, Verdict::LRatio, Verdict::NegLRatioOverB,
                    Verdict::NegFRatioOverB};
    }
    std::vector<FamilyMembership> out;
    out.reserve(families.size());
    for (Verdict fam : families)
        out.push_back(FamilyMembership{fam, find_family_index(params, d, t, fam)});
    return out;
}

namespace {

CounterexampleEntry build_entry(const std::string& id, const Params& params, const Int& d,
                                const QuadNum& t, const QuadNum& expected, GenFn fn) {
    CounterexampleEntry e;
    e.id = id;
    e.a = params.a;
    e.b = params.b;
    e.d = d;
    e.t_text = format_quad(t);
    e.expected_text = format_quad(expected);

    QuadNum value = fn == GenFn::F ? eval_f_quad(params, d, t) : eval_l_quad(params, d, t);
    e.claims.push_back({"value equals " + e.expected_text, value == expected,
                        "computed " + format_quad(value)});
    e.claims.push_back({"value lies in Z[sqrt(d)]", in_z_sqrt_d(value), format_quad(value)});
    e.claims.push_back({"t is within the radius of convergence",
                        within_radius(RadiusSpec{params, d}, t), e.t_text});
    for (const auto& fm : quad_family_membership(params, d, t, fn)) {
        std::string name = std::string("t is not in the ") + verdict_name(fm.family) + " family";
        e.claims.push_back({name, !fm.index.has_value(),
                            fm.index ? "matched at index " + std::to_string(*fm.index)
                                     : "excluded by the parity brackets"});
    }
    e.ok = true;
    for (const auto& c : e.claims) e.ok = e.ok && c.pass;

    // The same (u, v) pair read in Q(sqrt(1)) stops being a counterexample:
    // either the value loses integrality or the point joins a family.
    QuadNum t1(t.u(), t.v(), Int(1));
    QuadNum v1 = fn == GenFn::F ? eval_f_quad(params, Int(1), t1)
                                : eval_l_quad(params, Int(1), t1);
    bool integral = in_z_sqrt_d(v1);
    std::optional<std::pair<Verdict, int>> member;
    for (const auto& fm : quad_family_membership(params, Int(1), t1, fn)) {
        if (fm.index) {
            member = {fm.family, *fm.index};
            break;
        }
    }
    e.d1_counterexample = integral && !member;
    if (member) {
        e.d1_flipped_claim = "family membership";
        e.d1_note = "at d = 1 the point " + format_quad(t1) + " equals the " +
                    verdict_name(member->first) + " member of index " +
                    std::to_string(member->second) + "; not a counterexample";
    } else if (!integral) {
        e.d1_flipped_claim = "integrality";
        e.d1_note = "at d = 1 the value " + format_quad(v1) +
                    " is not an integer; not a counterexample";
    }
    return e;
}

}  // namespace

CounterexampleReport counterexample_report() {
    CounterexampleReport report;

    // f at a=2, b=1, d=2, t = 1/(2 + sqrt(2)); expected value 2 + sqrt(2).
    {
        Params params(Int(2), Int(1));
        Int d(2);
        QuadNum t = QuadNum::rational(Rat(1), d) / QuadNum(Rat(2), Rat(1), d);
        report.entries.push_back(
            build_entry("f", params, d, t, QuadNum(Rat(2), Rat(1), d), GenFn::F));
    }
    // l at a=1, b=1, d=2, t = (6 - 5 sqrt(2))/7; expected value 16 - 10 sqrt(2).
    {
        Params params(Int(1), Int(1));
        Int d(2);
        QuadNum t = QuadNum(Rat(Int(6), Int(7)), Rat(Int(-5), Int(7)), d);
        report.entries.push_back(
            build_entry("l", params, d, t, QuadNum(Rat(16), Rat(-10), d), GenFn::L));
    }

    report.all_ok = true;
    for (const auto& e : report.entries) {
        report.all_ok = report.all_ok && e.ok && !e.d1_counterexample;
    }
    return report;
}

}  // namespace fibgf

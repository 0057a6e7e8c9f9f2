#include "fibgf/classifier.hpp"

#include <algorithm>
#include <span>

#include "fibgf/error.hpp"
#include "fibgf/pell_descent.hpp"
#include "fibgf/quad_ring.hpp"
#include "fibgf/sequences.hpp"

namespace fibgf {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::FRatio: return "FRatio";
        case Verdict::NegFRatioOverB: return "NegFRatioOverB";
        case Verdict::LRatio: return "LRatio";
        case Verdict::NegLRatioOverB: return "NegLRatioOverB";
        case Verdict::NotInteger: return "NotInteger";
    }
    return "?";
}

namespace {

// Shared denominator 1 - a x q - b q^2 written over q = n/d: the evaluation
// of f is (n d) / (d^2 - a x n d - b n^2) and of l is (2 d^2 - a x n d) over
// the same denominator.
Poly eval_denominator(const Params& params, const Poly& n, const Poly& d) {
    Poly ax = Poly::monomial(Rat(params.a), 1);
    return d * d - ax * n * d - Rat(params.b) * (n * n);
}

bool integer_polynomial_value(const RatFn& v) {
    return v.is_polynomial() && is_integer_poly(v.num());
}

// q == n2/d2 by cross-multiplication.
bool cross_eq(const RatFn& q, const Poly& n2, const Poly& d2) {
    return q.num() * d2 == q.den() * n2;
}

}  // namespace

RatFn eval_f(const Params& params, const RatFn& q) {
    Poly den = eval_denominator(params, q.num(), q.den());
    if (den.is_zero())
        throw_pole("1 - a x q - b q^2 vanishes identically");
    return RatFn(q.num() * q.den(), std::move(den));
}

RatFn eval_l(const Params& params, const RatFn& q) {
    Poly den = eval_denominator(params, q.num(), q.den());
    if (den.is_zero())
        throw_pole("1 - a x q - b q^2 vanishes identically");
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Poly num = Rat(2) * (q.den() * q.den()) - ax * q.num() * q.den();
    return RatFn(std::move(num), std::move(den));
}

std::optional<Rat> eval_f_rational(const Params& params, const Rat& q) {
    Rat den = Rat(1) - Rat(params.a) * q - Rat(params.b) * q * q;
    if (den.is_zero()) return std::nullopt;
    return q / den;
}

std::optional<Rat> eval_l_rational(const Params& params, const Rat& q) {
    Rat den = Rat(1) - Rat(params.a) * q - Rat(params.b) * q * q;
    if (den.is_zero()) return std::nullopt;
    return (Rat(2) - Rat(params.a) * q) / den;
}

namespace {

ClassifyResult classify_fn(const Params& params, const RatFn& q, GenFn fn) {
    params.require_b_divides_a(fn == GenFn::F ? "classify_f" : "classify_l");
    RatFn value = fn == GenFn::F ? eval_f(params, q) : eval_l(params, q);
    if (!integer_polynomial_value(value)) return ClassifyResult{};

    // deg F_{i+1} = i, so a matching index cannot exceed the degrees of q.
    int bound = std::max(q.num().degree().value_or(0), q.den().degree().value_or(0)) + 2;
    auto result = [&](Verdict verdict, int i, Poly n2, Poly d2) {
        ClassifyResult r;
        r.verdict = verdict;
        r.index = i;
        r.value = value.num();
        r.witness = RatFn(std::move(n2), std::move(d2));
        return r;
    };
    Rat b(params.b);
    for (int i = 0; i <= bound; ++i) {
        Poly fi = fib_poly(params, i), fi1 = fib_poly(params, i + 1);
        if (cross_eq(q, fi, fi1)) return result(Verdict::FRatio, i, fi, fi1);
    }
    if (fn == GenFn::L) {
        for (int i = 0; i <= bound; ++i) {
            Poly li = lucas_poly(params, i), li1 = lucas_poly(params, i + 1);
            if (cross_eq(q, li, li1)) return result(Verdict::LRatio, i, li, li1);
            if (cross_eq(q, -li1, b * li))
                return result(Verdict::NegLRatioOverB, i, -li1, b * li);
        }
    }
    for (int i = 1; i <= bound; ++i) {
        Poly fi = fib_poly(params, i), fi1 = fib_poly(params, i + 1);
        if (cross_eq(q, -fi1, b * fi))
            return result(Verdict::NegFRatioOverB, i, -fi1, b * fi);
    }
    throw_internal("integer polynomial value but no family match within the degree bound");
}

}  // namespace

ClassifyResult classify_f(const Params& params, const RatFn& q) {
    return classify_fn(params, q, GenFn::F);
}

ClassifyResult classify_l(const Params& params, const RatFn& q) {
    return classify_fn(params, q, GenFn::L);
}

namespace {

std::vector<RatFn> verified_roots(const Params& params, const Poly& k, const Poly& m,
                                  const Poly& minus_lin, GenFn fn) {
    // Roots (minus_lin +/- m) / (2 b k) of the defining quadratic; substitution
    // is the authoritative check.
    Poly twobk = Rat(Int(2 * params.b)) * k;
    std::vector<RatFn> out;
    for (const Poly& numr : {minus_lin + m, minus_lin - m}) {
        RatFn root(numr, twobk);
        RatFn value = fn == GenFn::F ? eval_f(params, root) : eval_l(params, root);
        if (value == RatFn::from_poly(k)) out.push_back(std::move(root));
    }
    if (out.empty())
        throw_internal("discriminant was a perfect square but no root verified");
    std::sort(out.begin(), out.end(), [](const RatFn& x, const RatFn& y) {
        return format_ratfn(x) < format_ratfn(y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void descent_cross_check(const Params& params, Poly p, const Poly& q, const char* what) {
    if (p.leading().sign() < 0) p = -p;
    Poly qq = q;
    if (qq.leading().sign() < 0) qq = -qq;
    DescentResult dr = descend(params, p, qq);
    if (dr.n % 2 == 0)
        throw_internal(std::string(what) + ": descent cross-check produced an even index");
}

}  // namespace

std::vector<RatFn> solve_f(const Params& params, const Poly& k) {
    params.require_b_divides_a("solve_f");
    if (!is_integer_poly(k)) throw_precondition("solve_f needs k with integer coefficients");
    if (k.is_zero()) return {RatFn()};
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Poly axk1 = ax * k + Poly(Rat(1));
    Poly disc_of_quadratic = axk1 * axk1 + Rat(Int(4 * params.b)) * (k * k);
    auto m = poly_square_root(disc_of_quadratic);
    if (!m) return {};
    // ((a^2 x^2 + 4b) k + a x, M) solves the Pell equation with constant
    // 4(-b); its descent index must be odd.
    descent_cross_check(params, pell_discriminant(params) * k + ax, *m, "solve_f");
    return verified_roots(params, k, *m, -axk1, GenFn::F);
}

std::vector<RatFn> solve_l(const Params& params, const Poly& k) {
    params.require_b_divides_a("solve_l");
    if (!is_integer_poly(k)) throw_precondition("solve_l needs k with integer coefficients");
    Poly ax = Poly::monomial(Rat(params.a), 1);
    if (k.is_zero()) return {RatFn(Poly(Rat(2)), ax)};
    Poly km1 = k - Poly(Rat(1));
    Poly axkm1 = ax * km1;
    Poly disc_of_quadratic =
        axkm1 * axkm1 - Rat(Int(4 * params.b)) * (k * (Poly(Rat(2)) - k));
    auto m = poly_square_root(disc_of_quadratic);
    if (!m) return {};
    // (M, k - 1) solves the Pell equation with constant 4(-b).
    descent_cross_check(params, *m, km1, "solve_l");
    return verified_roots(params, k, *m, -axkm1, GenFn::L);
}

namespace {

ClassifyRationalResult classify_rational(const Params& params, const Rat& q, GenFn fn) {
    params.require_b_divides_a(fn == GenFn::F ? "classify_f_rational" : "classify_l_rational");
    auto value = fn == GenFn::F ? eval_f_rational(params, q) : eval_l_rational(params, q);
    if (!value || !value->is_integer()) return ClassifyRationalResult{};

    const Int one_d(1);
    QuadNum t = QuadNum::rational(q, one_d);
    ClassifyRationalResult r;
    r.value = *value;
    r.witness = q;
    static const Verdict order_f[] = {Verdict::FRatio, Verdict::NegFRatioOverB};
    static const Verdict order_l[] = {Verdict::FRatio, Verdict::LRatio, Verdict::NegLRatioOverB,
                                      Verdict::NegFRatioOverB};
    bool found = false;
    for (Verdict fam : fn == GenFn::F ? std::span<const Verdict>(order_f)
                                      : std::span<const Verdict>(order_l)) {
        if (auto i = find_family_index(params, one_d, t, fam)) {
            r.verdict = fam;
            r.index = *i;
            found = true;
            break;
        }
    }
    if (!found)
        throw_internal("integer value but the point is in no family");

    // The x = 1 classification and the integer Pell descent must name the
    // same index.
    const Int kk = value->num();
    long expect = -1;
    if (fn == GenFn::F) {
        if (kk == 0) return r;  // q = 0, index 0; nothing to descend
        Int m2 = (params.a * kk + 1) * (params.a * kk + 1) + 4 * params.b * kk * kk;
        auto m = int_sqrt(m2);
        if (!m) throw_internal("rational solution without a perfect-square discriminant");
        Int p = (params.a * params.a + 4 * params.b) * kk + params.a;
        if (sgn(p) < 0) p = -p;
        expect = descend_int(params, p, *m);
    } else {
        Int km1 = kk - 1;
        Int m2 = params.a * params.a * km1 * km1 - 4 * params.b * kk * (2 - kk);
        auto m = int_sqrt(m2);
        if (!m) throw_internal("rational solution without a perfect-square discriminant");
        if (sgn(km1) < 0) km1 = -km1;
        expect = descend_int(params, *m, km1);
    }
    if ((expect - 1) / 2 != r.index)
        throw_internal("family index disagrees with the integer descent index");
    return r;
}

}  // namespace

ClassifyRationalResult classify_f_rational(const Params& params, const Rat& q) {
    return classify_rational(params, q, GenFn::F);
}

ClassifyRationalResult classify_l_rational(const Params& params, const Rat& q) {
    return classify_rational(params, q, GenFn::L);
}

namespace {

std::vector<ScanItem> scan_fn(const Params& params, long max_den, GenFn fn) {
    params.require_b_divides_a(fn == GenFn::F ? "scan_f" : "scan_l");
    if (max_den < 1) throw_precondition("max_den must be a positive integer");
    RadiusSpec spec{params, Int(1)};
    std::vector<ScanItem> out;
    for (long den = 1; den <= max_den; ++den) {
        for (long num = -den; num <= den; ++num) {
            if (int_gcd(Int(num), Int(den)) != 1) continue;
            Rat q{Int(num), Int(den)};
            if (!within_radius(spec, QuadNum::rational(q, Int(1)))) continue;
            auto value = fn == GenFn::F ? eval_f_rational(params, q) : eval_l_rational(params, q);
            if (!value || !value->is_integer()) continue;
            out.push_back(ScanItem{q, value->num()});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ScanItem& x, const ScanItem& y) { return x.q < y.q; });
    return out;
}

}  // namespace

std::vector<ScanItem> scan_f(const Params& params, long max_den) {
    return scan_fn(params, max_den, GenFn::F);
}

std::vector<ScanItem> scan_l(const Params& params, long max_den) {
    return scan_fn(params, max_den, GenFn::L);
}

}  // namespace fibgf

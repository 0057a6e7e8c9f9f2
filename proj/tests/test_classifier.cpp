#include <doctest.h>

#include <vector>

#include "fibgf/classifier.hpp"
#include "fibgf/error.hpp"
#include "fibgf/sequences.hpp"
#include "test_support.hpp"

using namespace fibgf;

namespace {

Poly P(const std::string& text) { return parse_poly(text); }
RatFn R(const std::string& text) { return parse_ratfn(text); }

const Params& p11() {
    static const Params p(Int(1), Int(1));
    return p;
}

// Independent oracle: compose the defining expression with generic rational-
// function arithmetic instead of the classifier's internal formula.
RatFn oracle_f(const Params& params, const RatFn& q) {
    RatFn one = RatFn::from_poly(P("1"));
    RatFn ax = RatFn::from_poly(Poly::monomial(Rat(params.a), 1));
    RatFn b = RatFn::from_poly(Poly(Rat(params.b)));
    return q / (one - ax * q - b * q * q);
}

RatFn oracle_l(const Params& params, const RatFn& q) {
    RatFn two = RatFn::from_poly(P("2"));
    RatFn one = RatFn::from_poly(P("1"));
    RatFn ax = RatFn::from_poly(Poly::monomial(Rat(params.a), 1));
    RatFn b = RatFn::from_poly(Poly(Rat(params.b)));
    return (two - ax * q) / (one - ax * q - b * q * q);
}

}  // namespace

TEST_CASE("eval_f examples") {
    CHECK(eval_f(p11(), RatFn()).is_zero());
    CHECK(eval_f(p11(), R("(x)/(x^2+1)")) == RatFn::from_poly(P("x^3 + x")));
    CHECK(eval_f(p11(), R("1/2")) == R("(2)/(-2*x + 3)"));
}

TEST_CASE("eval_l examples") {
    CHECK(eval_l(p11(), RatFn()) == RatFn::from_poly(P("2")));
    CHECK(eval_l(p11(), R("(x)/(x^2+2)")) == RatFn::from_poly(P("x^2 + 2")));
    CHECK(eval_l(p11(), R("-1/2*x")) == RatFn::from_poly(P("2")));
    CHECK(eval_l(p11(), R("(2)/(x)")).is_zero());
}

TEST_CASE("eval matches the generic-arithmetic oracle") {
    test::Rng rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        RatFn q = ratfn_reduce(rng.poly(5, 15, 4), rng.poly(5, 15, 4, true));
        CHECK(eval_f(p11(), q) == oracle_f(p11(), q));
        CHECK(eval_l(p11(), q) == oracle_l(p11(), q));
    }
}

TEST_CASE("classify_f examples") {
    ClassifyResult a = classify_f(p11(), R("(x)/(x^2+1)"));
    CHECK(a.verdict == Verdict::FRatio);
    CHECK(a.index == 2);
    CHECK(*a.value == P("x^3 + x"));
    CHECK(*a.witness == R("(x)/(x^2+1)"));

    ClassifyResult b = classify_f(p11(), R("(-x^2 - 1)/(x)"));
    CHECK(b.verdict == Verdict::NegFRatioOverB);
    CHECK(b.index == 2);
    CHECK(*b.value == P("x^3 + x"));

    CHECK(classify_f(p11(), R("1/2")).verdict == Verdict::NotInteger);
    CHECK_THROWS_AS(classify_f(Params(Int(3), Int(2)), R("x")), Error);
}

TEST_CASE("classify_l examples") {
    // l(x, 2/(a x)) = 0: the k = 0 member L_0/L_1
    ClassifyResult a = classify_l(p11(), R("(2)/(x)"));
    CHECK(a.verdict == Verdict::LRatio);
    CHECK(a.index == 0);
    CHECK(a.value->is_zero());

    ClassifyResult b = classify_l(p11(), R("(x)/(x^2+2)"));
    CHECK(b.verdict == Verdict::LRatio);
    CHECK(b.index == 1);
    CHECK(*b.value == P("x^2 + 2"));

    ClassifyResult c = classify_l(p11(), R("-1/2*x"));
    CHECK(c.verdict == Verdict::NegLRatioOverB);
    CHECK(c.index == 0);
    CHECK(*c.value == P("2"));

    CHECK(classify_l(p11(), R("1/3")).verdict == Verdict::NotInteger);
}

TEST_CASE("solve_f examples") {
    auto zero = solve_f(p11(), Poly());
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].is_zero());

    auto sols = solve_f(p11(), P("x^3 + x"));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == R("(-x^2 - 1)/(x)"));
    CHECK(sols[1] == R("(x)/(x^2+1)"));
    for (const auto& s : sols) CHECK(eval_f(p11(), s) == RatFn::from_poly(P("x^3 + x")));

    CHECK(solve_f(p11(), P("1")).empty());
    CHECK_THROWS_AS(solve_f(p11(), P("1/2*x")), Error);
}

TEST_CASE("solve_l examples") {
    for (const Params& params : {Params(Int(1), Int(1)), Params(Int(2), Int(2))}) {
        auto zero = solve_l(params, Poly());
        REQUIRE(zero.size() == 1);
        CHECK(zero[0] == ratfn_reduce(P("2"), Poly::monomial(Rat(params.a), 1)));
    }

    auto two = solve_l(p11(), P("2"));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == R("-1/2*x"));
    CHECK(two[1].is_zero());

    auto sols = solve_l(p11(), P("x^2 + 2"));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == R("(x)/(x^2+2)"));
    CHECK(sols[1] == R("-x"));
    for (const auto& s : sols) CHECK(eval_l(p11(), s) == RatFn::from_poly(P("x^2 + 2")));

    CHECK(solve_l(p11(), P("1")).empty());
}

TEST_CASE("classification round trip for f on small indices") {
    for (const Params& params : {Params(Int(1), Int(1)), Params(Int(2), Int(2))}) {
        for (int i = 0; i <= 8; ++i) {
            Poly fi = fib_poly(params, i), fi1 = fib_poly(params, i + 1);
            RatFn q = ratfn_reduce(fi, fi1);
            ClassifyResult r = classify_f(params, q);
            CHECK(r.verdict == Verdict::FRatio);
            CHECK(r.index == i);
            // value formula F_i F_{i+1} / (-b)^i
            Rat scale = neg_pow(params.b, static_cast<unsigned long>(i)).inverse();
            Poly expected = scale * (fi * fi1);
            CHECK(*r.value == expected);

            if (i >= 1) {
                RatFn neg = ratfn_reduce(-fi1, Rat(params.b) * fi);
                ClassifyResult rn = classify_f(params, neg);
                CHECK(rn.verdict == Verdict::NegFRatioOverB);
                CHECK(rn.index == i);
                CHECK(*rn.value == expected);
                auto sols = solve_f(params, expected);
                REQUIRE(sols.size() == 2);
                CHECK((sols[0] == q || sols[1] == q));
                CHECK((sols[0] == neg || sols[1] == neg));
            } else {
                auto sols = solve_f(params, expected);
                REQUIRE(sols.size() == 1);
                CHECK(sols[0] == q);
            }
        }
    }
}

TEST_CASE("classification round trip for l on small indices") {
    for (const Params& params : {Params(Int(1), Int(1)), Params(Int(2), Int(2))}) {
        Rat b(params.b);
        Poly ax = Poly::monomial(Rat(params.a), 1);
        for (int i = 0; i <= 8; ++i) {
            Poly fi = fib_poly(params, i), fi1 = fib_poly(params, i + 1);
            Poly li = lucas_poly(params, i), li1 = lucas_poly(params, i + 1);
            Rat inv_nb = neg_pow(params.b, static_cast<unsigned long>(i)).inverse();

            // L-ratio value L_{i+1} F_i / (-(-b)^i)
            ClassifyResult rl = classify_l(params, ratfn_reduce(li, li1));
            CHECK(rl.verdict == Verdict::LRatio);
            CHECK(rl.index == i);
            CHECK(*rl.value == (-inv_nb) * (li1 * fi));

            // negated L-ratio value L_i F_{i+1} / (-b)^i
            ClassifyResult rnl = classify_l(params, ratfn_reduce(-li1, b * li));
            CHECK(rnl.verdict == Verdict::NegLRatioOverB);
            CHECK(rnl.index == i);
            CHECK(*rnl.value == inv_nb * (li * fi1));

            // F-ratio value (2 F_{i+1}^2 - a x F_i F_{i+1}) / (-b)^i
            ClassifyResult rf = classify_l(params, ratfn_reduce(fi, fi1));
            CHECK(rf.verdict == Verdict::FRatio);
            CHECK(rf.index == i);
            CHECK(*rf.value == inv_nb * (Rat(2) * (fi1 * fi1) - ax * fi * fi1));

            if (i >= 1) {
                // negated F-ratio value F_i (2 b F_i + a x F_{i+1}) / (-(-b)^i)
                ClassifyResult rnf = classify_l(params, ratfn_reduce(-fi1, b * fi));
                CHECK(rnf.verdict == Verdict::NegFRatioOverB);
                CHECK(rnf.index == i);
                CHECK(*rnf.value == (-inv_nb) * (fi * (Rat(2) * b * fi + ax * fi1)));
                // shared value pairs: {L_i/L_{i+1}, -F_{i+1}/(b F_i)}
                CHECK(*rnf.value == *rl.value);
                auto sols = solve_l(params, *rl.value);
                REQUIRE(sols.size() == 2);
            }
            // shared value pairs: {F_i/F_{i+1}, -L_{i+1}/(b L_i)}
            CHECK(*rf.value == *rnl.value);
            auto sols = solve_l(params, *rf.value);
            REQUIRE(sols.size() == 2);
            CHECK((sols[0] == ratfn_reduce(fi, fi1) || sols[1] == ratfn_reduce(fi, fi1)));
        }
    }
}

TEST_CASE("classify_f_rational examples") {
    auto a = classify_f_rational(p11(), Rat(Int(1), Int(2)));
    CHECK(a.verdict == Verdict::FRatio);
    CHECK(a.index == 2);
    CHECK(*a.value == Rat(2));

    auto b = classify_f_rational(p11(), Rat(-1));
    CHECK(b.verdict == Verdict::NegFRatioOverB);
    CHECK(b.index == 1);
    CHECK(*b.value == Rat(-1));

    auto c = classify_f_rational(p11(), Rat(Int(1), Int(3)));
    CHECK(c.verdict == Verdict::NotInteger);

    CHECK_THROWS_AS(classify_f_rational(Params(Int(3), Int(2)), Rat(0)), Error);
}

TEST_CASE("classify_l_rational examples") {
    auto a = classify_l_rational(p11(), Rat(Int(1), Int(3)));
    CHECK(a.verdict == Verdict::LRatio);
    CHECK(a.index == 1);
    CHECK(*a.value == Rat(3));

    auto b = classify_l_rational(p11(), Rat(Int(4), Int(7)));
    CHECK(b.verdict == Verdict::LRatio);
    CHECK(b.index == 3);
    CHECK(*b.value == Rat(14));

    auto c = classify_l_rational(p11(), Rat(Int(1), Int(4)));
    CHECK(c.verdict == Verdict::NotInteger);

    auto d = classify_l_rational(p11(), Rat(Int(-1), Int(2)));
    CHECK(d.verdict == Verdict::NegLRatioOverB);
    CHECK(d.index == 0);
    CHECK(*d.value == Rat(2));
}

TEST_CASE("rational evaluation handles poles") {
    // a = 1, b = 2 puts rational roots on 1 - a q - b q^2 (discriminant 9)
    Params p12(Int(1), Int(2));
    CHECK(!eval_f_rational(p12, Rat(Int(1), Int(2))));
    CHECK(!eval_l_rational(p12, Rat(-1)));
    CHECK(*eval_f_rational(p11(), Rat(Int(1), Int(3))) == Rat(Int(3), Int(5)));
}

TEST_CASE("scan_f examples") {
    auto items = scan_f(p11(), 13);
    REQUIRE(items.size() == 4);
    CHECK(items[0].q == Rat(0));
    CHECK(items[0].value == 0);
    CHECK(items[1].q == Rat(Int(1), Int(2)));
    CHECK(items[1].value == 2);
    CHECK(items[2].q == Rat(Int(3), Int(5)));
    CHECK(items[2].value == 15);
    CHECK(items[3].q == Rat(Int(8), Int(13)));
    CHECK(items[3].value == 104);

    auto only_zero = scan_f(p11(), 1);
    REQUIRE(only_zero.size() == 1);
    CHECK(only_zero[0].q == Rat(0));

    auto p22 = Params(Int(2), Int(2));
    auto small = scan_f(p22, 3);
    REQUIRE(small.size() == 2);
    CHECK(small[0].q == Rat(0));
    CHECK(small[1].q == Rat(Int(1), Int(3)));  // F_2/F_3 = 2/6 reduced
    CHECK(small[1].value == 3);
}

TEST_CASE("scan_l includes every integer point inside the interval") {
    // Alongside F_{2i}/F_{2i+1} and L_{2i+1}/L_{2i+2}, the point
    // -L_1/(b L_0) = -1/2 lies strictly inside the interval for a = b = 1
    // and has l(-1/2) = 2; the brute-force contract keeps it.
    auto items = scan_l(p11(), 7);
    REQUIRE(items.size() == 6);
    CHECK(items[0].q == Rat(Int(-1), Int(2)));
    CHECK(items[0].value == 2);
    CHECK(items[1].q == Rat(0));
    CHECK(items[1].value == 2);
    CHECK(items[2].q == Rat(Int(1), Int(3)));
    CHECK(items[2].value == 3);
    CHECK(items[3].q == Rat(Int(1), Int(2)));
    CHECK(items[3].value == 6);
    CHECK(items[4].q == Rat(Int(4), Int(7)));
    CHECK(items[4].value == 14);
    CHECK(items[5].q == Rat(Int(3), Int(5)));
    CHECK(items[5].value == 35);

    auto tiny = scan_l(p11(), 2);
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0].q == Rat(Int(-1), Int(2)));
    CHECK(tiny[1].q == Rat(0));
    CHECK(tiny[2].q == Rat(Int(1), Int(2)));

    CHECK_THROWS_AS(scan_l(p11(), 0), Error);
}

TEST_CASE("scan output equals an in-test brute force") {
    for (const Params& params : {Params(Int(1), Int(1)), Params(Int(2), Int(2))}) {
        auto items = scan_f(params, 20);
        std::vector<ScanItem> brute;
        for (long den = 1; den <= 20; ++den) {
            for (long num = -den; num <= den; ++num) {
                if (int_gcd(Int(num), Int(den)) != 1) continue;
                Rat q{Int(num), Int(den)};
                // inside iff b q^2 + a|q| < 1 (from the nested-squaring chain at d=1)
                Rat lhs = Rat(params.b) * q * q + Rat(params.a) * q.abs();
                if (!(lhs < Rat(1))) continue;
                auto v = eval_f_rational(params, q);
                if (v && v->is_integer()) brute.push_back({q, v->num()});
            }
        }
        std::sort(brute.begin(), brute.end(),
                  [](const ScanItem& x, const ScanItem& y) { return x.q < y.q; });
        REQUIRE(items.size() == brute.size());
        for (std::size_t i = 0; i < items.size(); ++i) {
            CHECK(items[i].q == brute[i].q);
            CHECK(items[i].value == brute[i].value);
        }
    }
}

TEST_CASE("fuzz agreement between classify and direct evaluation") {
    test::Rng rng(12);
    for (const Params& params : {Params(Int(1), Int(1)), Params(Int(2), Int(2))}) {
        for (int iter = 0; iter < 250; ++iter) {
            RatFn q = ratfn_reduce(rng.poly(5, 20, 5), rng.poly(5, 20, 5, true));
            RatFn vf = oracle_f(params, q);
            bool integral_f = vf.is_polynomial() && is_integer_poly(vf.num());
            CHECK((classify_f(params, q).verdict != Verdict::NotInteger) == integral_f);
            RatFn vl = oracle_l(params, q);
            bool integral_l = vl.is_polynomial() && is_integer_poly(vl.num());
            CHECK((classify_l(params, q).verdict != Verdict::NotInteger) == integral_l);
        }
    }
}

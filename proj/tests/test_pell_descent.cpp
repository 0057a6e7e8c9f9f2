#include <doctest.h>

#include <vector>

#include "fibgf/error.hpp"
#include "fibgf/pell_descent.hpp"
#include "fibgf/sequences.hpp"

using namespace fibgf;

namespace {

const std::vector<Params>& matrix() {
    static const std::vector<Params> m = {
        Params(Int(1), Int(1)), Params(Int(2), Int(1)), Params(Int(2), Int(2)),
        Params(Int(4), Int(2)), Params(Int(6), Int(2)), Params(Int(6), Int(3)),
    };
    return m;
}

Poly P(const std::string& text) { return parse_poly(text); }

// The scaled pair (L_n / b^floor(n/2), F_n / b^floor(n/2)).
std::pair<Poly, Poly> scaled_pair(const Params& params, int n) {
    Rat inv = Rat(Int(1), int_pow(params.b, static_cast<unsigned long>(n / 2)));
    return {inv * lucas_poly(params, n), inv * fib_poly(params, n)};
}

}  // namespace

TEST_CASE("pell pair construction infers r0 and validates") {
    Params p22(Int(2), Int(2));
    PellPair good(p22, P("4*x^3 + 6*x"), P("2*x^2 + 1"));
    CHECK(good.r0() == 1);
    PellPair base(p22, P("2"), Poly());
    CHECK(base.r0() == 0);
    CHECK_THROWS_AS(PellPair(p22, P("x^3"), P("x^2")), Error);
    CHECK_THROWS_AS(PellPair(p22, P("-2"), Poly()), Error);  // negative leading coefficient
}

TEST_CASE("phi worked examples") {
    Params p22(Int(2), Int(2));
    PellPair in(p22, P("4*x^3 + 6*x"), P("2*x^2 + 1"));
    PellPair out = phi(p22, in);
    CHECK(out.p() == P("2*x"));
    CHECK(out.q() == P("1"));
    CHECK(out.r0() == 1);

    Params p11(Int(1), Int(1));
    PellPair l4f4(p11, lucas_poly(p11, 4), fib_poly(p11, 4));
    PellPair l2f2 = phi(p11, l4f4);
    CHECK(l2f2.p() == lucas_poly(p11, 2));
    CHECK(l2f2.q() == fib_poly(p11, 2));
}

TEST_CASE("phi requires deg q >= 2") {
    Params p11(Int(1), Int(1));
    CHECK_THROWS_AS(phi(p11, PellPair(p11, P("x"), P("1"))), Error);
    CHECK_THROWS_AS(phi(p11, PellPair(p11, P("2"), Poly())), Error);
}

TEST_CASE("phi_inv worked examples") {
    Params p22(Int(2), Int(2));
    PellPair in(p22, P("2*x"), P("1"));
    PellPair out = phi_inv(p22, in);
    CHECK(out.p() == P("4*x^3 + 6*x"));
    CHECK(out.q() == P("2*x^2 + 1"));

    for (const auto& params : matrix()) {
        PellPair two(params, P("2"), Poly());
        PellPair up = phi_inv(params, two);
        Rat invb = Rat(Int(1), params.b);
        CHECK(up.p() == invb * lucas_poly(params, 2));
        CHECK(up.q() == invb * fib_poly(params, 2));
    }
}

TEST_CASE("phi and phi_inv invert each other and move degrees by exactly 2") {
    for (const auto& params : matrix()) {
        for (int n = 2; n <= 20; ++n) {
            auto [p, q] = scaled_pair(params, n);
            PellPair pair(params, p, q);
            PellPair up = phi_inv(params, pair);
            CHECK(*up.p().degree() == *pair.p().degree() + 2);
            CHECK(*up.q().degree() == *pair.q().degree() + 2);
            PellPair back = phi(params, up);
            CHECK(back.p() == pair.p());
            CHECK(back.q() == pair.q());
            if (pair.q().degree().value_or(-1) >= 2) {
                PellPair down = phi(params, pair);
                CHECK(down.r0() == pair.r0());
                CHECK(down.p().leading().sign() >= 0);
                CHECK(down.q().leading().sign() >= 0);
                CHECK(*down.p().degree() == *pair.p().degree() - 2);
                PellPair restored = phi_inv(params, down);
                CHECK(restored.p() == pair.p());
                CHECK(restored.q() == pair.q());
            }
        }
    }
}

TEST_CASE("descend base cases") {
    for (const auto& params : matrix()) {
        std::string a = params.a.get_str();
        CHECK(descend(params, P("2"), Poly()).n == 0);
        CHECK(descend(params, P(a + "*x"), P("1")).n == 1);
        auto [p2, q2] = scaled_pair(params, 2);
        CHECK(descend(params, p2, q2).n == 2);
    }
}

TEST_CASE("descend worked example with scaled equalities") {
    Params p22(Int(2), Int(2));
    DescentResult r = descend(p22, P("4*x^3 + 6*x"), P("2*x^2 + 1"));
    CHECK(r.n == 3);
    CHECK(Rat(2) * P("4*x^3 + 6*x") == lucas_poly(p22, 3));
    CHECK(Rat(2) * P("2*x^2 + 1") == fib_poly(p22, 3));
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0] == std::pair<int, int>(3, 2));
}

TEST_CASE("descend round trip across the matrix") {
    for (const auto& params : matrix()) {
        for (int n = 0; n <= 15; ++n) {
            auto [p, q] = scaled_pair(params, n);
            DescentResult r = descend(params, p, q);
            CHECK(r.n == n);
            for (std::size_t i = 1; i < r.trace.size(); ++i) {
                CHECK(r.trace[i - 1].first - r.trace[i].first == 2);
                CHECK(r.trace[i - 1].second - r.trace[i].second == 2);
            }
        }
    }
}

TEST_CASE("descend rejects non-solutions") {
    Params p11(Int(1), Int(1));
    CHECK_THROWS_AS(descend(p11, P("x^2"), P("x")), Error);
    try {
        descend(p11, P("x^2"), P("x"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
    }
}

TEST_CASE("descend_int worked examples") {
    Params p11(Int(1), Int(1));
    CHECK(descend_int(p11, Int(4), Int(2)) == 3);    // 16 - 5*4 = -4
    CHECK(descend_int(p11, Int(11), Int(5)) == 5);   // 121 - 125 = -4
    Params p22(Int(2), Int(2));
    CHECK(descend_int(p22, Int(2), Int(1)) == 1);    // 4 - 12 = -8
}

TEST_CASE("descend_int error paths") {
    CHECK_THROWS_AS(descend_int(Params(Int(3), Int(2)), Int(2), Int(1)), Error);  // b does not divide a
    Params p11(Int(1), Int(1));
    CHECK_THROWS_AS(descend_int(p11, Int(5), Int(2)), Error);   // fails (**)
    CHECK_THROWS_AS(descend_int(p11, Int(0), Int(2)), Error);   // not positive
    try {
        descend_int(Params(Int(3), Int(2)), Int(2), Int(1));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
        CHECK(std::string(e.what()).find("b | a") != std::string::npos);
    }
}

TEST_CASE("descend_int round trip against independently recomputed numbers") {
    for (const auto& params : matrix()) {
        // plain integer recurrences, no library sequence calls
        std::vector<Int> f{Int(0), Int(1)}, l{Int(2), params.a};
        for (int i = 2; i <= 21; ++i) {
            f.push_back(params.a * f[i - 1] + params.b * f[i - 2]);
            l.push_back(params.a * l[i - 1] + params.b * l[i - 2]);
        }
        for (int n = 0; 2 * n + 1 <= 21; ++n) {
            int m = 2 * n + 1;
            Int scale = int_pow(params.b, static_cast<unsigned long>(n));
            Int p = l[static_cast<std::size_t>(m)] / scale;
            Int q = f[static_cast<std::size_t>(m)] / scale;
            CHECK(descend_int(params, p, q) == m);
        }
    }
}

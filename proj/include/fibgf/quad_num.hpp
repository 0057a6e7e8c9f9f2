#pragma once

#include <string>
#include <string_view>

#include "fibgf/polynomial.hpp"
#include "fibgf/rational.hpp"

namespace fibgf {

bool is_square_free(const Int& d);

// Element u + v*sqrt(d) of Q(sqrt(d)) for a square-free positive d. For d > 1
// the pair (u, v) is unique; for d = 1 the sqrt part is folded into the
// rational part at construction so representations stay unique there too.
class QuadNum {
public:
    QuadNum(Rat u, Rat v, Int d);

    static QuadNum rational(const Rat& u, const Int& d = Int(1));
    static QuadNum sqrt_d(const Int& d) { return QuadNum(Rat(0), Rat(1), d); }

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const Int& d() const { return d_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    QuadNum conj() const;
    Rat norm() const;  // u^2 - d v^2, rational
    QuadNum inverse() const;

    // Sign in the real embedding with sqrt(d) > 0; exact.
    int sign() const;
    QuadNum abs() const;

    QuadNum operator-() const;
    friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator/(const QuadNum& a, const QuadNum& b);

    friend bool operator==(const QuadNum& a, const QuadNum& b);
    friend bool operator!=(const QuadNum& a, const QuadNum& b) { return !(a == b); }

private:
    struct Unchecked {};
    QuadNum(Rat u, Rat v, Int d, Unchecked);

    Rat u_, v_;
    Int d_;

    void fold_if_d1();
    static void require_same_d(const QuadNum& a, const QuadNum& b);
};

// Sign of a - b; both operands must live in the same Q(sqrt(d)).
int cmp(const QuadNum& a, const QuadNum& b);
// Sign of s - sqrt(c) for a non-negative integer c; exact via squaring.
int cmp_with_sqrt(const QuadNum& s, const Int& c);

bool in_z_sqrt_d(const QuadNum& t);

QuadNum eval_poly_at(const Poly& p, const QuadNum& point);

// Text form "u + v*sqrt(d)" with rational u, v; d is supplied by the caller
// and must agree with any sqrt(n) appearing in the text.
QuadNum parse_quad(std::string_view text, const Int& d);
std::string format_quad(const QuadNum& t);

}  // namespace fibgf

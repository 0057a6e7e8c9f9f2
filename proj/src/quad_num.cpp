#include "fibgf/quad_num.hpp"

#include <cctype>

#include "fibgf/error.hpp"

namespace fibgf {

bool is_square_free(const Int& d) {
    if (sgn(d) <= 0) return false;
    if (mpz_divisible_ui_p(d.get_mpz_t(), 4)) return false;
    Int p(3);
    while (p * p <= d) {
        Int sq = p * p;
        if (mpz_divisible_p(d.get_mpz_t(), sq.get_mpz_t())) return false;
        p += 2;
    }
    return true;
}

QuadNum::QuadNum(Rat u, Rat v, Int d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
    if (!is_square_free(d_))
        throw_precondition("d must be a square-free positive integer, got " + d_.get_str());
    fold_if_d1();
}

QuadNum::QuadNum(Rat u, Rat v, Int d, Unchecked)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
    fold_if_d1();
}

void QuadNum::fold_if_d1() {
    if (d_ == 1 && !v_.is_zero()) {
        u_ += v_;
        v_ = Rat(0);
    }
}

QuadNum QuadNum::rational(const Rat& u, const Int& d) {
    return QuadNum(u, Rat(0), d);
}

void QuadNum::require_same_d(const QuadNum& a, const QuadNum& b) {
    if (a.d_ != b.d_)
        throw_precondition("mixed quadratic fields: sqrt(" + a.d_.get_str() + ") vs sqrt(" +
                           b.d_.get_str() + ")");
}

QuadNum QuadNum::conj() const {
    return QuadNum(u_, -v_, d_, Unchecked{});
}

Rat QuadNum::norm() const {
    return u_ * u_ - Rat(d_) * v_ * v_;
}

QuadNum QuadNum::inverse() const {
    Rat n = norm();
    if (n.is_zero()) throw_precondition("division by zero in Q(sqrt(d))");
    Rat inv = n.inverse();
    return QuadNum(u_ * inv, -v_ * inv, d_, Unchecked{});
}

int QuadNum::sign() const {
    int su = u_.sign();
    int sv = v_.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Mixed signs: compare u^2 with d v^2; sqrt(d) irrational for d > 1 so a
    // tie cannot occur with both parts nonzero.
    Rat uu = u_ * u_;
    Rat dvv = Rat(d_) * v_ * v_;
    if (uu == dvv) return 0;
    return uu > dvv ? su : sv;
}

QuadNum QuadNum::abs() const {
    return sign() < 0 ? -*this : *this;
}

QuadNum QuadNum::operator-() const {
    return QuadNum(-u_, -v_, d_, Unchecked{});
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
    QuadNum::require_same_d(a, b);
    return QuadNum(a.u_ + b.u_, a.v_ + b.v_, a.d_, QuadNum::Unchecked{});
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) {
    return a + (-b);
}

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
    QuadNum::require_same_d(a, b);
    return QuadNum(a.u_ * b.u_ + Rat(a.d_) * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_, a.d_,
                   QuadNum::Unchecked{});
}

QuadNum operator/(const QuadNum& a, const QuadNum& b) {
    QuadNum::require_same_d(a, b);
    return a * b.inverse();
}

bool operator==(const QuadNum& a, const QuadNum& b) {
    QuadNum::require_same_d(a, b);
    return a.u_ == b.u_ && a.v_ == b.v_;
}

int cmp(const QuadNum& a, const QuadNum& b) {
    return (a - b).sign();
}

int cmp_with_sqrt(const QuadNum& s, const Int& c) {
    if (sgn(c) < 0) throw_precondition("cmp_with_sqrt needs a non-negative radicand");
    if (sgn(c) == 0) return s.sign();
    if (s.sign() <= 0) return -1;
    QuadNum diff = s * s - QuadNum::rational(Rat(c), s.d());
    return diff.sign();
}

bool in_z_sqrt_d(const QuadNum& t) {
    return t.u().is_integer() && t.v().is_integer();
}

QuadNum eval_poly_at(const Poly& p, const QuadNum& point) {
    QuadNum acc = QuadNum::rational(Rat(0), point.d());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * point + QuadNum::rational(*it, point.d());
    return acc;
}

namespace {

struct QCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool starts_with(std::string_view s) const { return text.substr(pos, s.size()) == s; }
    [[noreturn]] void fail(const std::string& what) const { throw_parse(what, pos); }

    Rat parse_rat(bool negate) {
        bool neg = negate;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') neg = !neg;
            ++pos;
            skip_ws();
        }
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        Int num(std::string(text.substr(start, pos - start)), 10);
        Int den(1);
        if (peek() == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator digits");
            den = Int(std::string(text.substr(dstart, pos - dstart)), 10);
            if (sgn(den) == 0) throw_parse("zero denominator", dstart);
        }
        if (neg) num = -num;
        return Rat(num, den);
    }

    // 'sqrt' '(' uint ')'
    Int parse_sqrt_arg() {
        if (!starts_with("sqrt")) fail("expected 'sqrt'");
        pos += 4;
        skip_ws();
        if (peek() != '(') fail("expected '(' after sqrt");
        ++pos;
        skip_ws();
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits inside sqrt(...)");
        Int n(std::string(text.substr(start, pos - start)), 10);
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return n;
    }
};

}  // namespace

QuadNum parse_quad(std::string_view text, const Int& d) {
    QCursor cur{text};
    cur.skip_ws();
    if (cur.done()) cur.fail("expected a quadratic number");

    Rat u(0), v(0);
    bool saw_sqrt = false;
    Int sqrt_arg(0);

    auto check_sqrt_arg = [&](const Int& n) {
        if (saw_sqrt) cur.fail("more than one sqrt term");
        saw_sqrt = true;
        sqrt_arg = n;
    };

    // Leading term: either a sqrt term (optionally signed / with a rational
    // coefficient) or the rational part.
    bool lead_neg = false;
    std::size_t mark = cur.pos;
    if (cur.peek() == '+' || cur.peek() == '-') {
        lead_neg = cur.peek() == '-';
        ++cur.pos;
        cur.skip_ws();
    }
    if (cur.starts_with("sqrt")) {
        check_sqrt_arg(cur.parse_sqrt_arg());
        v = lead_neg ? Rat(-1) : Rat(1);
    } else {
        cur.pos = mark;
        Rat r = cur.parse_rat(false);
        cur.skip_ws();
        if (cur.peek() == '*') {
            ++cur.pos;
            cur.skip_ws();
            check_sqrt_arg(cur.parse_sqrt_arg());
            v = r;
        } else {
            u = r;
        }
    }
    cur.skip_ws();

    // Optional second term: ('+'|'-') [rat '*']? sqrt(...)
    if (!cur.done()) {
        bool neg;
        if (cur.peek() == '+') {
            neg = false;
        } else if (cur.peek() == '-') {
            neg = true;
        } else {
            cur.fail("expected '+' or '-'");
        }
        ++cur.pos;
        cur.skip_ws();
        Rat coeff(1);
        if (!cur.starts_with("sqrt")) {
            coeff = cur.parse_rat(false);
            cur.skip_ws();
            if (cur.peek() != '*') cur.fail("expected '*' before sqrt");
            ++cur.pos;
            cur.skip_ws();
        }
        check_sqrt_arg(cur.parse_sqrt_arg());
        v = neg ? -coeff : coeff;
        cur.skip_ws();
    }
    if (!cur.done()) cur.fail("unexpected trailing input");

    if (saw_sqrt && sqrt_arg != d)
        throw_precondition("sqrt(" + sqrt_arg.get_str() + ") in text does not match d = " +
                           d.get_str());
    return QuadNum(u, v, d);
}

std::string format_quad(const QuadNum& t) {
    if (t.v().is_zero()) return t.u().str();
    Rat vmag = t.v().abs();
    std::string vpart;
    if (vmag != Rat(1)) vpart = vmag.str() + "*";
    vpart += "sqrt(" + t.d().get_str() + ")";
    if (t.u().is_zero()) return (t.v().sign() < 0 ? "-" : "") + vpart;
    return t.u().str() + (t.v().sign() < 0 ? " - " : " + ") + vpart;
}

}  // namespace fibgf

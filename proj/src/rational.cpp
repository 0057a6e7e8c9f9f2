#include "fibgf/rational.hpp"

#include <cctype>

#include "fibgf/error.hpp"

namespace fibgf {

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Int int_gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::optional<Int> int_sqrt(const Int& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

Rat::Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw_precondition("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw_precondition("division by zero");
    return Rat(den(), num());
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw_precondition("division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
}

std::string Rat::str() const {
    return q_.get_str();
}

Rat Rat::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw_parse(std::string("expected ") + what, start);
        return std::string(text.substr(start, i - start));
    };
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    Int num(digits("digits"), 10);
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_pos = i;
        den = Int(digits("denominator digits"), 10);
        if (sgn(den) == 0) throw_parse("zero denominator", den_pos);
    }
    skip_ws();
    if (i != text.size()) throw_parse("unexpected trailing input", i);
    if (neg) num = -num;
    return Rat(num, den);
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    return Rat(int_pow(base.num(), exp), int_pow(base.den(), exp));
}

Rat neg_pow(const Int& b, unsigned long n) {
    Int mag = int_pow(b, n);
    return Rat(n % 2 == 0 ? mag : Int(-mag));
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    auto n = int_sqrt(r.num());
    if (!n) return std::nullopt;
    auto d = int_sqrt(r.den());
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

}  // namespace fibgf

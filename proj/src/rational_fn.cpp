#include "fibgf/rational_fn.hpp"

#include <cctype>

#include "fibgf/error.hpp"

namespace fibgf {

RatFn::RatFn() : num_(), den_(Rat(1)) {}

RatFn::RatFn(Poly num, Poly den) {
    if (den.is_zero()) throw_precondition("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree().value_or(0) > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }
    Rat scale = den.leading().inverse();
    num_ = scale * num;
    den_ = scale * den;
}

RatFn RatFn::from_poly(Poly p) {
    RatFn out;
    out.num_ = std::move(p);
    out.den_ = Poly(Rat(1));
    return out;
}

bool RatFn::is_polynomial() const {
    return den_ == Poly(Rat(1));
}

RatFn RatFn::operator-() const {
    RatFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    return a + (-b);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw_precondition("division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFn ratfn_reduce(Poly num, Poly den) {
    return RatFn(std::move(num), std::move(den));
}

RatFn parse_ratfn(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '(') {
        // "(" poly ")" "/" "(" poly ")"
        std::size_t open1 = i;
        std::size_t close1 = text.find(')', open1);
        if (close1 == std::string_view::npos) throw_parse("missing ')'", text.size());
        Poly num = parse_poly(text.substr(open1 + 1, close1 - open1 - 1));
        std::size_t j = close1 + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= text.size() || text[j] != '/') throw_parse("expected '/'", j);
        ++j;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= text.size() || text[j] != '(') throw_parse("expected '('", j);
        std::size_t open2 = j;
        std::size_t close2 = text.find(')', open2);
        if (close2 == std::string_view::npos) throw_parse("missing ')'", text.size());
        Poly den = parse_poly(text.substr(open2 + 1, close2 - open2 - 1));
        std::size_t k = close2 + 1;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k != text.size()) throw_parse("unexpected trailing input", k);
        return RatFn(std::move(num), std::move(den));
    }
    return RatFn::from_poly(parse_poly(text));
}

std::string format_ratfn(const RatFn& f) {
    if (f.is_polynomial()) return format_poly(f.num());
    return "(" + format_poly(f.num()) + ")/(" + format_poly(f.den()) + ")";
}

}  // namespace fibgf

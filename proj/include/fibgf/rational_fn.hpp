#pragma once

#include <string>
#include <string_view>

#include "fibgf/polynomial.hpp"

namespace fibgf {

// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and den
// monic, with any content pushed into the numerator. Equality nonetheless
// goes through cross-multiplication so scaling conventions can never cause a
// false negative.
class RatFn {
public:
    RatFn();  // zero
    RatFn(Poly num, Poly den);

    static RatFn from_poly(Poly p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);

    friend bool operator==(const RatFn& a, const RatFn& b);
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

private:
    Poly num_;
    Poly den_;
};

RatFn ratfn_reduce(Poly num, Poly den);
RatFn parse_ratfn(std::string_view text);
std::string format_ratfn(const RatFn& f);

}  // namespace fibgf

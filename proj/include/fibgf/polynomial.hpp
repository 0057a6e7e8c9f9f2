#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibgf/rational.hpp"

namespace fibgf {

// Dense univariate polynomial over Q. Coefficients are stored by ascending
// degree with no trailing zeros; the zero polynomial has an empty vector and
// no degree (degree() is disengaged rather than -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly monomial(const Rat& c, int degree);
    static Poly variable() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const;

private:
    std::vector<Rat> c_;

    void trim();
};

// Quotient and remainder with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Monic gcd (zero if both arguments are zero).
Poly poly_gcd(Poly a, Poly b);

bool is_integer_poly(const Poly& p);

// The unique M with M*M == p and non-negative leading coefficient, when one
// exists. Works by descending-degree coefficient matching; fails fast on odd
// degree or a leading coefficient without a rational square root.
std::optional<Poly> poly_square_root(const Poly& p);

Poly parse_poly(std::string_view text);
std::string format_poly(const Poly& p);

}  // namespace fibgf

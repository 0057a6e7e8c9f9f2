#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fibgf {

using Int = mpz_class;

Int int_pow(const Int& base, unsigned long exp);
Int int_gcd(const Int& a, const Int& b);
// Exact integer square root; nullopt unless the argument is a perfect square.
std::optional<Int> int_sqrt(const Int& n);

// Arbitrary-precision rational, kept in lowest terms with a positive
// denominator. Zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const;
    Rat inverse() const;

    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    std::string str() const;
    static Rat parse(std::string_view text);

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

Rat rat_pow(const Rat& base, unsigned long exp);
// (-b)^n as a rational, the sign constant that runs through the identities.
Rat neg_pow(const Int& b, unsigned long n);
// Exact rational square root; nullopt unless both numerator and denominator
// are perfect squares.
std::optional<Rat> rat_sqrt(const Rat& r);

}  // namespace fibgf

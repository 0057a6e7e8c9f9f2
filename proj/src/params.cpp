#include "fibgf/params.hpp"

#include "fibgf/error.hpp"

namespace fibgf {

Params::Params(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (sgn(a) < 1 || sgn(b) < 1)
        throw_precondition("a and b must be positive integers");
    b_divides_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

void Params::require_b_divides_a(const char* operation) const {
    if (!b_divides_a)
        throw_precondition(std::string(operation) +
                           " requires b | a (the hypothesis of the integrality "
                           "classification); got a = " +
                           a.get_str() + ", b = " + b.get_str());
}

}  // namespace fibgf

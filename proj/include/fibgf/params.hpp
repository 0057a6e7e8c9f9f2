#pragma once

#include "fibgf/rational.hpp"

namespace fibgf {

// The recurrence coefficients (a, b), both positive. Whether b divides a is
// certified once at construction; the integrality classification assumes it.
struct Params {
    Int a;
    Int b;
    bool b_divides_a;

    Params(Int a_, Int b_);

    // Throws a precondition error naming the b | a hypothesis.
    void require_b_divides_a(const char* operation) const;

    friend bool operator==(const Params& x, const Params& y) {
        return x.a == y.a && x.b == y.b;
    }
};

}  // namespace fibgf

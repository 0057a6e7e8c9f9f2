#pragma once

#include <utility>
#include <vector>

#include "fibgf/params.hpp"
#include "fibgf/polynomial.hpp"

namespace fibgf {

// A solution (P, Q) of P^2 - (a^2 x^2 + 4b) Q^2 = 4 (-b)^{r0} with
// non-negative leading coefficients. r0 is inferred from the constant the
// pair actually produces; construction rejects anything else.
class PellPair {
public:
    PellPair(const Params& params, Poly p, Poly q);

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    int r0() const { return r0_; }

private:
    Poly p_, q_;
    int r0_;
};

struct DescentResult {
    int n = 0;
    // (deg p, deg q) recorded before each descent step; consecutive entries
    // drop by exactly 2 in both components.
    std::vector<std::pair<int, int>> trace;
};

// One descent step; requires deg q >= 2 and lowers both degrees by exactly 2.
PellPair phi(const Params& params, const PellPair& pair);
// Inverse step; raises both degrees by exactly 2.
PellPair phi_inv(const Params& params, const PellPair& pair);

// Names the unique n with b^floor(n/2) p = L_n and b^floor(n/2) q = F_n by
// repeated phi steps down to the base pairs of degree <= 1.
DescentResult descend(const Params& params, const Poly& p, const Poly& q);

// Integer variant at x = 1: positive integers with
// p^2 - (a^2 + 4b) q^2 = -4b descend to the odd index m = 2n+1 with
// b^n p = L_m(1) and b^n q = F_m(1). Requires b | a.
long descend_int(const Params& params, const Int& p, const Int& q);

// a^2 x^2 + 4b, the discriminant polynomial the descent revolves around.
Poly pell_discriminant(const Params& params);

}  // namespace fibgf

#include "fibgf/pell_descent.hpp"

#include "fibgf/error.hpp"
#include "fibgf/sequences.hpp"

namespace fibgf {

Poly pell_discriminant(const Params& params) {
    Poly ax = Poly::monomial(Rat(params.a), 1);
    return ax * ax + Poly(Rat(Int(4 * params.b)));
}

PellPair::PellPair(const Params& params, Poly p, Poly q)
    : p_(std::move(p)), q_(std::move(q)) {
    if (p_.leading().sign() < 0 || q_.leading().sign() < 0)
        throw_precondition("Pell pair needs non-negative leading coefficients");
    Poly lhs = p_ * p_ - pell_discriminant(params) * q_ * q_;
    if (lhs == Poly(Rat(4))) {
        r0_ = 0;
    } else if (lhs == Poly(Rat(Int(-4 * params.b)))) {
        r0_ = 1;
    } else {
        throw_precondition("pair does not satisfy P^2 - (a^2 x^2 + 4b) Q^2 = 4 (-b)^r0");
    }
}

namespace {

// a^2 x^2 + 2b, the multiplier shared by both descent maps.
Poly half_discriminant(const Params& params) {
    Poly ax = Poly::monomial(Rat(params.a), 1);
    return ax * ax + Poly(Rat(Int(2 * params.b)));
}

}  // namespace

PellPair phi(const Params& params, const PellPair& pair) {
    if (pair.q().degree().value_or(-1) < 2)
        throw_precondition("phi requires deg Q >= 2");
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Poly disc = pell_discriminant(params);
    Poly half = half_discriminant(params);
    Rat inv2b = Rat(Int(1), Int(2 * params.b));
    Poly pbar = inv2b * (half * pair.p() - ax * disc * pair.q());
    Poly qbar = inv2b * (half * pair.q() - ax * pair.p());
    PellPair out(params, std::move(pbar), std::move(qbar));
    if (out.r0() != pair.r0() ||
        out.p().degree().value_or(-1) != *pair.p().degree() - 2 ||
        out.q().degree().value_or(-1) != *pair.q().degree() - 2)
        throw_internal("phi did not reduce degrees by 2; input was not a genuine solution");
    return out;
}

PellPair phi_inv(const Params& params, const PellPair& pair) {
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Poly disc = pell_discriminant(params);
    Poly half = half_discriminant(params);
    Rat inv2b = Rat(Int(1), Int(2 * params.b));
    Poly punder = inv2b * (half * pair.p() + ax * disc * pair.q());
    Poly qunder = inv2b * (half * pair.q() + ax * pair.p());
    PellPair out(params, std::move(punder), std::move(qunder));
    if (out.r0() != pair.r0())
        throw_internal("phi_inv changed the Pell constant");
    return out;
}

DescentResult descend(const Params& params, const Poly& p, const Poly& q) {
    PellPair cur(params, p, q);
    DescentResult result;
    const int budget = (p.degree().value_or(0) + 1) / 2 + 1;
    int steps = 0;
    while (cur.q().degree().value_or(-1) >= 2) {
        if (++steps > budget)
            throw_internal("descent exceeded its step budget");
        result.trace.emplace_back(*cur.p().degree(), *cur.q().degree());
        cur = phi(params, cur);
    }

    Poly ax = Poly::monomial(Rat(params.a), 1);
    Rat invb = Rat(Int(1), params.b);
    int base;
    if (cur.q().is_zero()) {
        if (cur.p() != Poly(Rat(2)))
            throw_internal("descent base with Q = 0 requires P = 2");
        base = 0;
    } else if (*cur.q().degree() == 0) {
        if (cur.q() != Poly(Rat(1)) || cur.p() != ax)
            throw_internal("descent base with deg Q = 0 requires (P, Q) = (a x, 1)");
        base = 1;
    } else {
        if (cur.q() != invb * ax || cur.p() != invb * half_discriminant(params))
            throw_internal(
                "descent base with deg Q = 1 requires (P, Q) = ((a^2 x^2 + 2b)/b, a x / b)");
        base = 2;
    }
    result.n = base + 2 * steps;
    if (result.n % 2 != cur.r0())
        throw_internal("descent index parity disagrees with r0");
    Rat scale(int_pow(params.b, static_cast<unsigned long>(result.n / 2)));
    if (scale * p != lucas_poly(params, result.n) || scale * q != fib_poly(params, result.n))
        throw_internal("descent index does not reproduce the scaled sequence pair");
    return result;
}

long descend_int(const Params& params, const Int& p0, const Int& q0) {
    params.require_b_divides_a("descend_int");
    if (sgn(p0) <= 0 || sgn(q0) <= 0)
        throw_precondition("descend_int needs positive integers");
    const Int c = params.a * params.a + 4 * params.b;
    const Int half = params.a * params.a + 2 * params.b;
    const Int twob = 2 * params.b;
    const Int target = -4 * params.b;
    auto satisfies = [&](const Int& pp, const Int& qq) { return pp * pp - c * qq * qq == target; };
    if (!satisfies(p0, q0))
        throw_precondition("pair does not satisfy P^2 - (a^2 + 4b) Q^2 = -4b");

    Int p = p0, q = q0;
    long steps = 0;
    while (q > 1) {
        Int pn = half * p - params.a * c * q;
        Int qn = half * q - params.a * p;
        if (!mpz_divisible_p(pn.get_mpz_t(), twob.get_mpz_t()) ||
            !mpz_divisible_p(qn.get_mpz_t(), twob.get_mpz_t()))
            throw_precondition("non-integer intermediate; input is not a valid pair");
        pn /= twob;
        qn /= twob;
        if (sgn(pn) <= 0 || sgn(qn) <= 0 || qn >= q)
            throw_internal("integer descent failed to make progress");
        if (!satisfies(pn, qn))
            throw_internal("integer descent lost the Pell identity");
        p = pn;
        q = qn;
        ++steps;
    }
    if (q != 1 || p != params.a)
        throw_internal("integer descent did not reach the base pair (a, 1)");
    long m = 1 + 2 * steps;

    Int scale = int_pow(params.b, static_cast<unsigned long>(m / 2));
    if (scale * p0 != lucas_number(params, static_cast<int>(m)) ||
        scale * q0 != fib_number(params, static_cast<int>(m)))
        throw_internal("integer descent index does not reproduce the scaled sequence values");
    return m;
}

}  // namespace fibgf

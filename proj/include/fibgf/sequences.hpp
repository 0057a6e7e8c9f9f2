#pragma once

#include <optional>
#include <string_view>

#include "fibgf/params.hpp"
#include "fibgf/polynomial.hpp"
#include "fibgf/quad_num.hpp"

namespace fibgf {

enum class SeqKind { Fib, Lucas };

// The identity toolbox; Norm is L_n^2 - (a^2 x^2 + 4b) F_n^2 = 4 (-b)^n, the
// identity the polynomial descent rests on.
enum class IdentityId { I5, I6, I7, I8, I9, I10, I11, I12, I13, I14, Norm };

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
// Smallest n the identity is stated for (I5/I6 reference index n-1).
int identity_min_n(IdentityId id);

// F_n(x): F_0 = 0, F_1 = 1, F_{i+2} = a x F_{i+1} + b F_i. Memoized per
// (a, b); safe for concurrent use.
Poly fib_poly(const Params& params, int n);
// L_n(x): L_0 = 2, L_1 = a x, same recurrence.
Poly lucas_poly(const Params& params, int n);

// The numeric sequences F_n(1), L_n(1).
Int fib_number(const Params& params, int n);
Int lucas_number(const Params& params, int n);

// Exact polynomial-identity check. Identities with divisions by 2 or 2b are
// verified in cleared form so the arithmetic stays in Q[x].
bool check_identity(const Params& params, IdentityId id, int n);

// The polynomial evaluated at a point of Q(sqrt(d)); at point = sqrt(d) this
// is the sqrt(d) sequence itself.
QuadNum seq_at(const Params& params, SeqKind kind, int n, const QuadNum& point);

}  // namespace fibgf

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fibgf/params.hpp"
#include "fibgf/polynomial.hpp"
#include "fibgf/rational_fn.hpp"

namespace fibgf {

// Which family a classified point belongs to, if any:
//   FRatio(i)         q = F_i / F_{i+1}            (i >= 0)
//   NegFRatioOverB(i) q = -F_{i+1} / (b F_i)       (i >= 1)
//   LRatio(i)         q = L_i / L_{i+1}            (i >= 0)
//   NegLRatioOverB(i) q = -L_{i+1} / (b L_i)       (i >= 0)
enum class Verdict { FRatio, NegFRatioOverB, LRatio, NegLRatioOverB, NotInteger };

const char* verdict_name(Verdict v);

struct ClassifyResult {
    Verdict verdict = Verdict::NotInteger;
    int index = -1;
    std::optional<Poly> value;    // the integer polynomial f(x, q) or l(x, q)
    std::optional<RatFn> witness; // the family member q equals
};

struct ClassifyRationalResult {
    Verdict verdict = Verdict::NotInteger;
    int index = -1;
    std::optional<Rat> value;
    std::optional<Rat> witness;
};

// q / (1 - a x q - b q^2), reduced.
RatFn eval_f(const Params& params, const RatFn& q);
// (2 - a x q) / (1 - a x q - b q^2), reduced.
RatFn eval_l(const Params& params, const RatFn& q);

// The same evaluations at a rational point (x = 1); nullopt at a pole.
std::optional<Rat> eval_f_rational(const Params& params, const Rat& q);
std::optional<Rat> eval_l_rational(const Params& params, const Rat& q);

// Integrality classification of f(x, q) over Q(x); requires b | a.
ClassifyResult classify_f(const Params& params, const RatFn& q);
ClassifyResult classify_l(const Params& params, const RatFn& q);

// All q with f(x, q) = k (resp. l(x, q) = k), for integer-coefficient k.
// Solutions come from the quadratic formula, each verified by substitution
// and cross-checked against the Pell descent; sorted by formatted text.
std::vector<RatFn> solve_f(const Params& params, const Poly& k);
std::vector<RatFn> solve_l(const Params& params, const Poly& k);

// The x = 1 classification of f(q) and l(q) for rational q; requires b | a.
ClassifyRationalResult classify_f_rational(const Params& params, const Rat& q);
ClassifyRationalResult classify_l_rational(const Params& params, const Rat& q);

struct ScanItem {
    Rat q;
    Int value;
};

// Every reduced rational with denominator <= max_den strictly inside the
// interval of convergence whose f-value (resp. l-value) is an integer,
// ordered by ascending q. Enumerates candidates by brute force; it does not
// shortcut through the families.
std::vector<ScanItem> scan_f(const Params& params, long max_den);
std::vector<ScanItem> scan_l(const Params& params, long max_den);

}  // namespace fibgf

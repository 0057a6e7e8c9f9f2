#include "fibgf/sequences.hpp"

#include <map>
#include <mutex>

#include "fibgf/error.hpp"

namespace fibgf {

namespace {

using Key = std::pair<Int, Int>;

struct Cache {
    std::mutex mu;
    std::map<Key, std::vector<Poly>> fib, lucas;
    std::map<Key, std::vector<Int>> fib1, lucas1;
};

Cache& cache() {
    static Cache c;
    return c;
}

Poly seq_poly(const Params& params, int n, bool lucas) {
    if (n < 0) throw_precondition("sequence index must be non-negative");
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    Key key{params.a, params.b};
    auto& vec = lucas ? c.lucas[key] : c.fib[key];
    if (vec.empty()) {
        if (lucas) {
            vec.push_back(Poly(Rat(2)));
            vec.push_back(Poly::monomial(Rat(params.a), 1));
        } else {
            vec.push_back(Poly());
            vec.push_back(Poly(Rat(1)));
        }
    }
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Rat b(params.b);
    while (static_cast<int>(vec.size()) <= n) {
        std::size_t i = vec.size();
        vec.push_back(ax * vec[i - 1] + b * vec[i - 2]);
    }
    return vec[static_cast<std::size_t>(n)];
}

Int seq_number(const Params& params, int n, bool lucas) {
    if (n < 0) throw_precondition("sequence index must be non-negative");
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    Key key{params.a, params.b};
    auto& vec = lucas ? c.lucas1[key] : c.fib1[key];
    if (vec.empty()) {
        vec.push_back(lucas ? Int(2) : Int(0));
        vec.push_back(lucas ? params.a : Int(1));
    }
    while (static_cast<int>(vec.size()) <= n) {
        std::size_t i = vec.size();
        vec.push_back(params.a * vec[i - 1] + params.b * vec[i - 2]);
    }
    return vec[static_cast<std::size_t>(n)];
}

}  // namespace

Poly fib_poly(const Params& params, int n) {
    return seq_poly(params, n, false);
}

Poly lucas_poly(const Params& params, int n) {
    return seq_poly(params, n, true);
}

Int fib_number(const Params& params, int n) {
    return seq_number(params, n, false);
}

Int lucas_number(const Params& params, int n) {
    return seq_number(params, n, true);
}

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::I5: return "I5";
        case IdentityId::I6: return "I6";
        case IdentityId::I7: return "I7";
        case IdentityId::I8: return "I8";
        case IdentityId::I9: return "I9";
        case IdentityId::I10: return "I10";
        case IdentityId::I11: return "I11";
        case IdentityId::I12: return "I12";
        case IdentityId::I13: return "I13";
        case IdentityId::I14: return "I14";
        case IdentityId::Norm: return "NORM";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    static const std::pair<std::string_view, IdentityId> table[] = {
        {"I5", IdentityId::I5},   {"I6", IdentityId::I6},   {"I7", IdentityId::I7},
        {"I8", IdentityId::I8},   {"I9", IdentityId::I9},   {"I10", IdentityId::I10},
        {"I11", IdentityId::I11}, {"I12", IdentityId::I12}, {"I13", IdentityId::I13},
        {"I14", IdentityId::I14}, {"NORM", IdentityId::Norm},
    };
    for (const auto& [n, id] : table)
        if (n == name) return id;
    return std::nullopt;
}

int identity_min_n(IdentityId id) {
    return (id == IdentityId::I5 || id == IdentityId::I6) ? 1 : 0;
}

bool check_identity(const Params& params, IdentityId id, int n) {
    if (n < identity_min_n(id))
        throw_precondition(std::string(identity_name(id)) + " requires n >= " +
                           std::to_string(identity_min_n(id)));
    auto F = [&](int i) { return fib_poly(params, i); };
    auto L = [&](int i) { return lucas_poly(params, i); };
    auto C = [](const Rat& r) { return Poly(r); };
    Poly ax = Poly::monomial(Rat(params.a), 1);
    Poly disc = ax * ax + Poly(Rat(Int(4 * params.b)));
    const unsigned long un = static_cast<unsigned long>(n);
    Rat nb = neg_pow(params.b, un);           // (-b)^n
    Rat nbm1 = n >= 1 ? neg_pow(params.b, un - 1) : Rat(0);  // (-b)^(n-1)
    Rat two(2);
    Rat twob(Int(2 * params.b));

    switch (id) {
        case IdentityId::I5:
            return F(n) * F(n) - F(n - 1) * F(n + 1) == C(nbm1);
        case IdentityId::I6:
            return L(n) * L(n) - L(n - 1) * L(n + 1) == (-nbm1) * disc;
        case IdentityId::I7:
            return F(2 * n + 1) == L(n + 1) * F(n) + C(nb);
        case IdentityId::I8:
            return L(2 * n + 1) == L(n + 1) * L(n) - nb * ax;
        case IdentityId::I9:
            return L(2 * n + 1) == disc * F(n + 1) * F(n) + nb * ax;
        case IdentityId::I10:
            return F(n + 1) * L(n) == F(n) * L(n + 1) + C(two * nb);
        // (11)-(14) divide by 2 or 2b; checked in cleared form.
        case IdentityId::I11:
            return two * F(n + 1) == ax * F(n) + L(n);
        case IdentityId::I12:
            return twob * F(n) == -(ax * F(n + 1)) + L(n + 1);
        case IdentityId::I13:
            return two * L(n + 1) == ax * L(n) + disc * F(n);
        case IdentityId::I14:
            return twob * L(n) == -(ax * L(n + 1)) + disc * F(n + 1);
        case IdentityId::Norm:
            return L(n) * L(n) - disc * F(n) * F(n) == C(Rat(4) * nb);
    }
    throw_internal("unhandled identity id");
}

QuadNum seq_at(const Params& params, SeqKind kind, int n, const QuadNum& point) {
    if (n < 0) throw_precondition("sequence index must be non-negative");
    const Int& d = point.d();
    QuadNum cur = kind == SeqKind::Fib ? QuadNum::rational(Rat(0), d)
                                       : QuadNum::rational(Rat(2), d);
    QuadNum nxt = kind == SeqKind::Fib
                      ? QuadNum::rational(Rat(1), d)
                      : QuadNum::rational(Rat(params.a), d) * point;
    QuadNum b = QuadNum::rational(Rat(params.b), d);
    QuadNum a = QuadNum::rational(Rat(params.a), d);
    for (int i = 0; i < n; ++i) {
        QuadNum next = a * point * nxt + b * cur;
        cur = nxt;
        nxt = next;
    }
    return cur;
}

}  // namespace fibgf

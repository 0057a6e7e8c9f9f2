#include "fibgf/polynomial.hpp"

#include <cctype>
#include <map>

#include "fibgf/error.hpp"

namespace fibgf {

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::monomial(const Rat& c, int degree) {
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rat Poly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat Poly::leading() const {
    return c_.empty() ? Rat(0) : c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    Poly out = p;
    for (auto& x : out.c_) x *= c;
    return out;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw_precondition("polynomial division by zero");
    Poly q;
    Poly r = a;
    const int db = *b.degree();
    const Rat lb = b.leading();
    while (!r.is_zero() && *r.degree() >= db) {
        int shift = *r.degree() - db;
        Rat c = r.leading() / lb;
        Poly t = Poly::monomial(c, shift);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

static Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.leading().inverse() * p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

bool is_integer_poly(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

std::optional<Poly> poly_square_root(const Poly& p) {
    if (p.is_zero()) return Poly();
    int d = *p.degree();
    if (d % 2 != 0) return std::nullopt;
    auto lead = rat_sqrt(p.leading());
    if (!lead) return std::nullopt;
    const int n = d / 2;
    std::vector<Rat> m(static_cast<std::size_t>(n) + 1);
    m[static_cast<std::size_t>(n)] = *lead;
    Rat twice_lead = Rat(2) * *lead;
    // Match coefficients from the top: the x^{n+k} coefficient of M^2 is
    // 2 m_n m_k plus terms in already-known coefficients.
    for (int k = n - 1; k >= 0; --k) {
        Rat s = p.coeff(n + k);
        for (int i = k + 1; i <= n - 1; ++i) {
            int j = n + k - i;
            if (j < k + 1 || j > n) continue;
            s -= m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)];
        }
        m[static_cast<std::size_t>(k)] = s / twice_lead;
    }
    Poly candidate{std::vector<Rat>(m)};
    if (candidate * candidate != p) return std::nullopt;
    return candidate;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw_parse(what, pos); }

    Int parse_uint(const char* what) {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(std::string("expected ") + what);
        return Int(std::string(text.substr(start, pos - start)), 10);
    }
};

// coeff := int ('/' posint)?
Rat parse_coeff(Cursor& cur, bool negate) {
    bool neg = negate;
    if (cur.peek() == '+' || cur.peek() == '-') {
        if (cur.peek() == '-') neg = !neg;
        ++cur.pos;
    }
    Int num = cur.parse_uint("an integer");
    Int den(1);
    if (cur.peek() == '/') {
        ++cur.pos;
        std::size_t den_pos = cur.pos;
        den = cur.parse_uint("a positive denominator");
        if (sgn(den) == 0) throw_parse("zero denominator", den_pos);
    }
    if (neg) num = -num;
    return Rat(num, den);
}

// var := 'x' ('^' uint)?
int parse_var_exponent(Cursor& cur) {
    // caller consumed 'x'
    if (cur.eat('^')) {
        Int e = cur.parse_uint("an exponent");
        if (e > 100000) cur.fail("exponent too large");
        return static_cast<int>(e.get_ui());
    }
    return 1;
}

}  // namespace

Poly parse_poly(std::string_view text) {
    Cursor cur{text};
    std::map<int, Rat> terms;
    bool first = true;
    cur.skip_ws();
    if (cur.done()) cur.fail("expected a polynomial");
    while (true) {
        bool negate = false;
        if (!first) {
            if (cur.eat('+')) {
                negate = false;
            } else if (cur.eat('-')) {
                negate = true;
            } else {
                cur.fail("expected '+' or '-'");
            }
            cur.skip_ws();
        } else if (cur.peek() == '-' || cur.peek() == '+') {
            // allow a sign on the leading term
            negate = cur.peek() == '-';
            ++cur.pos;
            cur.skip_ws();
        }
        // term := coeff ('*'? var)? | var
        Rat coeff(1);
        bool have_coeff = false;
        if (cur.peek() != 'x') {
            coeff = parse_coeff(cur, negate);
            have_coeff = true;
        } else if (negate) {
            coeff = Rat(-1);
        }
        int deg = 0;
        cur.skip_ws();
        if (have_coeff) {
            std::size_t before_star = cur.pos;
            bool star = cur.eat('*');
            cur.skip_ws();
            if (cur.eat('x')) {
                deg = parse_var_exponent(cur);
            } else if (star) {
                cur.pos = before_star;
                cur.fail("expected 'x' after '*'");
            }
        } else {
            if (!cur.eat('x')) cur.fail("expected a term");
            deg = parse_var_exponent(cur);
        }
        terms[deg] += coeff;
        first = false;
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    }
    int max_deg = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rat> coeffs(static_cast<std::size_t>(max_deg) + 1);
    for (const auto& [deg, c] : terms) coeffs[static_cast<std::size_t>(deg)] = c;
    return Poly(std::move(coeffs));
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = *p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rat mag = c.abs();
        bool unit = mag == Rat(1);
        if (k == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += "*";
            }
            out += "x";
            if (k != 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace fibgf

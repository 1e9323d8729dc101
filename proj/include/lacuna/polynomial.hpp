// Sparse multivariate polynomials over exact rationals.
//
// A polynomial owns a fixed variable count (n*m coordinates of a point tuple,
// flattened row-major: variable p*n + c is coordinate c of point p). Terms
// map canonical exponent vectors to nonzero rational coefficients; every
// operation below is exact.
#pragma once

#include "lacuna/interval.hpp"
#include "lacuna/point.hpp"
#include "lacuna/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lacuna {

/// Exponent vector of fixed length num_vars.
struct Monomial {
    std::vector<unsigned> exps;

    explicit Monomial(std::size_t num_vars = 0) : exps(num_vars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const {
        return std::lexicographical_compare(exps.begin(), exps.end(),
                                            o.exps.begin(), o.exps.end());
    }
};

/// Degree of a polynomial: a plain integer, or empty for the zero polynomial
/// ("minus infinity"). Kept as optional so it cannot slip into arithmetic.
using PolyDegree = std::optional<int>;

class RationalPoly {
  public:
    explicit RationalPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static RationalPoly zero(std::size_t num_vars) { return RationalPoly(num_vars); }

    static RationalPoly constant(std::size_t num_vars, const Rational& c) {
        RationalPoly p(num_vars);
        p.add_term(Monomial(num_vars), c);
        return p;
    }

    static RationalPoly variable(std::size_t num_vars, std::size_t index) {
        if (index >= num_vars) throw std::invalid_argument("variable index out of range");
        RationalPoly p(num_vars);
        Monomial m(num_vars);
        m.exps[index] = 1;
        p.add_term(m, 1);
        return p;
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coef * monomial, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& coef) {
        if (coef == 0) return;
        if (m.exps.size() != num_vars_) throw std::invalid_argument("monomial arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const RationalPoly& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_;
    }

    RationalPoly& operator+=(const RationalPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    RationalPoly& operator-=(const RationalPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        a.check_arity(b);
        RationalPoly r(a.num_vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.num_vars_);
                for (std::size_t i = 0; i < a.num_vars_; ++i)
                    m.exps[i] = ma.exps[i] + mb.exps[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend RationalPoly operator*(const Rational& s, const RationalPoly& p) {
        RationalPoly r(p.num_vars_);
        if (s == 0) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }

    friend RationalPoly operator-(const RationalPoly& p) { return Rational(-1) * p; }

  private:
    void check_arity(const RationalPoly& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("polynomial variable counts differ");
    }

    std::size_t num_vars_;
    std::map<Monomial, Rational> terms_;
};

/// Exact value of P at a point (flattened coordinates).
inline Rational poly_eval(const RationalPoly& P, const std::vector<Rational>& point) {
    if (point.size() != P.num_vars())
        throw std::invalid_argument("poly_eval: point dimension mismatch");
    Rational total = 0;
    for (const auto& [m, c] : P.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (m.exps[i]) t *= rat_pow(point[i], m.exps[i]);
        }
        total += t;
    }
    return total;
}

/// Evaluates P on an m-tuple of n-dimensional points (row-major flattening).
inline Rational poly_eval_points(const RationalPoly& P, const std::vector<Point>& pts) {
    std::vector<Rational> flat;
    flat.reserve(P.num_vars());
    for (const auto& p : pts)
        for (const auto& c : p) flat.push_back(c);
    return poly_eval(P, flat);
}

/// Exact formal partial derivative in variable `var`.
inline RationalPoly poly_partial(const RationalPoly& P, std::size_t var) {
    if (var >= P.num_vars())
        throw std::invalid_argument("poly_partial: variable index out of range");
    RationalPoly r(P.num_vars());
    for (const auto& [m, c] : P.terms()) {
        unsigned e = m.exps[var];
        if (e == 0) continue;
        Monomial d = m;
        d.exps[var] = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

/// Total degree; empty optional for the zero polynomial.
inline PolyDegree poly_degree(const RationalPoly& P) {
    if (P.is_zero()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : P.terms()) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

/// Full gradient of P at a flattened point.
inline std::vector<Rational> poly_gradient(const RationalPoly& P,
                                           const std::vector<Rational>& point) {
    std::vector<Rational> g(P.num_vars());
    for (std::size_t v = 0; v < P.num_vars(); ++v) g[v] = poly_eval(poly_partial(P, v), point);
    return g;
}

/// Chain of iterated partials that ends in a nonzero constant. polys[k+1] is
/// the partial of polys[k] in direction var_order[k].
struct DerivativeChain {
    std::vector<RationalPoly> polys;
    std::vector<std::size_t> var_order;
};

/// Differentiates P once per factor of its top monomial: the lexicographically
/// smallest exponent vector among the monomials of maximal total degree,
/// ascending variable order, each variable repeated per its exponent. The last
/// chain element is a nonzero constant because only the chosen monomial
/// survives its own full multi-derivative.
inline DerivativeChain top_monomial_chain(const RationalPoly& P) {
    if (P.is_zero())
        throw std::invalid_argument("top_monomial_chain: zero polynomial");
    unsigned top = 0;
    for (const auto& [m, c] : P.terms()) top = std::max(top, m.total_degree());
    const Monomial* chosen = nullptr;
    for (const auto& [m, c] : P.terms()) {
        if (m.total_degree() != top) continue;
        if (!chosen || m < *chosen) chosen = &m;
    }

    DerivativeChain chain;
    chain.polys.push_back(P);
    for (std::size_t v = 0; v < chosen->exps.size(); ++v) {
        for (unsigned k = 0; k < chosen->exps[v]; ++k) {
            chain.var_order.push_back(v);
            chain.polys.push_back(poly_partial(chain.polys.back(), v));
        }
    }
    return chain;
}

/// Result of rescaling to coprime integer coefficients.
struct ClearedPoly {
    RationalPoly poly;
    Rational lambda;  // poly == lambda * input
};

inline bool has_integer_coefficients(const RationalPoly& P) {
    for (const auto& [m, c] : P.terms())
        if (denominator(c) != 1) return false;
    return true;
}

/// lambda * P with lambda the least positive rational giving integer
/// coefficients of collective gcd 1. The zero polynomial maps to itself with
/// lambda = 1.
inline ClearedPoly clear_denominators(const RationalPoly& P) {
    if (P.is_zero()) return {P, 1};
    Integer l = 1;
    for (const auto& [m, c] : P.terms()) l = lcm(l, denominator(c));
    Integer g = 0;
    for (const auto& [m, c] : P.terms()) g = gcd(g, Integer(numerator(c) * (l / denominator(c))));
    Rational lambda(l, g);
    return {lambda * P, lambda};
}

/// Substitutes subs[v] for variable v. All substitution polynomials must share
/// a common arity, which becomes the arity of the result.
inline RationalPoly poly_substitute(const RationalPoly& P,
                                    const std::vector<RationalPoly>& subs) {
    if (subs.size() != P.num_vars())
        throw std::invalid_argument("poly_substitute: need one replacement per variable");
    std::size_t out_vars = subs.empty() ? 0 : subs[0].num_vars();
    RationalPoly total(out_vars);
    for (const auto& [m, c] : P.terms()) {
        RationalPoly term = RationalPoly::constant(out_vars, c);
        for (std::size_t v = 0; v < subs.size(); ++v) {
            for (unsigned k = 0; k < m.exps[v]; ++k) term = term * subs[v];
        }
        total += term;
    }
    return total;
}

/// Coefficients (ascending) of the univariate polynomial t -> P(x + t*e).
inline std::vector<Rational> univariate_in_direction(const RationalPoly& P,
                                                     const std::vector<Rational>& x,
                                                     const std::vector<Rational>& e) {
    if (x.size() != P.num_vars() || e.size() != P.num_vars())
        throw std::invalid_argument("univariate_in_direction: dimension mismatch");
    std::vector<Rational> acc{0};
    auto mul_linear = [](std::vector<Rational> poly, const Rational& a, const Rational& b) {
        // poly(t) * (a + b t)
        std::vector<Rational> out(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i] * a;
            out[i + 1] += poly[i] * b;
        }
        return out;
    };
    for (const auto& [m, c] : P.terms()) {
        std::vector<Rational> term{c};
        for (std::size_t v = 0; v < P.num_vars(); ++v)
            for (unsigned k = 0; k < m.exps[v]; ++k) term = mul_linear(term, x[v], e[v]);
        if (term.size() > acc.size()) acc.resize(term.size(), Rational(0));
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    return acc;
}

/// Certified range enclosure of P over a product of coordinate intervals.
inline RatInterval poly_range(const RationalPoly& P, const IntervalVector& box) {
    if (box.size() != P.num_vars())
        throw std::invalid_argument("poly_range: box dimension mismatch");
    RatInterval total(0);
    for (const auto& [m, c] : P.terms()) {
        RatInterval t(c);
        for (std::size_t i = 0; i < box.size(); ++i)
            if (m.exps[i]) t = t * int_pow(box[i], m.exps[i]);
        total = total + t;
    }
    return total;
}

/// Sum over terms of |coef| * prod(max corner magnitude^exp): a cheap
/// certified sup-bound of |P| over the box.
inline Rational poly_magnitude_bound(const RationalPoly& P, const IntervalVector& box) {
    if (box.size() != P.num_vars())
        throw std::invalid_argument("poly_magnitude_bound: box dimension mismatch");
    Rational total = 0;
    for (const auto& [m, c] : P.terms()) {
        Rational t = rat_abs(c);
        for (std::size_t i = 0; i < box.size(); ++i)
            if (m.exps[i]) t *= rat_pow(box[i].mag(), m.exps[i]);
        total += t;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Text format: terms joined by " + ", each "coef", "coef*x3" or
// "coef*x0^2*x4"; coefficients as p or p/q (sign on the numerator), unit
// coefficients elided. Printing is canonical (descending monomial order) and
// parse(print(P)) == P bit-exactly.
// ---------------------------------------------------------------------------

inline std::string poly_to_string(const RationalPoly& P) {
    if (P.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) out << " + ";
        first = false;
        bool has_vars = m.total_degree() > 0;
        if (!has_vars) {
            out << rat_str(c);
        } else {
            if (c == -1) {
                out << "-";
            } else if (c != 1) {
                out << rat_str(c) << "*";
            }
            bool first_var = true;
            for (std::size_t v = 0; v < m.exps.size(); ++v) {
                if (!m.exps[v]) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << "x" << v;
                if (m.exps[v] > 1) out << "^" << m.exps[v];
            }
        }
    }
    return out.str();
}

inline RationalPoly poly_parse(const std::string& text, std::size_t num_vars) {
    auto fail = [&](const std::string& why) -> RationalPoly {
        throw std::invalid_argument("poly_parse: " + why + " in '" + text + "'");
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) return fail("empty input");
    if (s == "0") return RationalPoly::zero(num_vars);

    RationalPoly P(num_vars);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find("+", pos);
        // A '+' directly after the term separator belongs to the next term's
        // sign; term separators were normalized to '+' by whitespace removal.
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) return fail("empty term");

        Rational coef = 1;
        Monomial m(num_vars);
        std::size_t tp = 0;
        bool coef_seen = false;
        if (term[0] == '-' && term.size() > 1 && term[1] == 'x') {
            coef = -1;
            tp = 1;
        } else if (term[0] != 'x') {
            std::size_t star = term.find('*');
            std::string cs = term.substr(0, star);
            coef = parse_rational(cs);
            coef_seen = true;
            tp = star == std::string::npos ? term.size() : star + 1;
        }
        while (tp < term.size()) {
            if (term[tp] != 'x') return fail("expected variable");
            ++tp;
            std::size_t start = tp;
            while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp]))) ++tp;
            if (start == tp) return fail("missing variable index");
            std::size_t v = std::stoul(term.substr(start, tp - start));
            if (v >= num_vars) return fail("variable index out of range");
            unsigned e = 1;
            if (tp < term.size() && term[tp] == '^') {
                ++tp;
                start = tp;
                while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp]))) ++tp;
                if (start == tp) return fail("missing exponent");
                e = static_cast<unsigned>(std::stoul(term.substr(start, tp - start)));
            }
            m.exps[v] += e;
            if (tp < term.size()) {
                if (term[tp] != '*') return fail("expected '*'");
                ++tp;
                if (tp >= term.size()) return fail("dangling '*'");
            }
        }
        if (coef_seen && m.total_degree() == 0 && term.find('x') != std::string::npos)
            return fail("malformed term");
        P.add_term(m, coef);
    }
    return P;
}

}  // namespace lacuna

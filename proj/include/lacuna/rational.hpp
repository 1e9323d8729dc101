// Exact rational scalar type and the handful of integer/rational helpers the
// rest of the library leans on. All arithmetic is exact; nothing here rounds
// unless the function name says so (sqrt_bounds, kth_root_bounds).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lacuna {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Floor of an exact rational as a big integer.
inline Integer rat_floor(const Rational& q) {
    Integer t = numerator(q) / denominator(q);  // truncates toward zero
    if (q < 0 && t * denominator(q) != numerator(q)) --t;
    return t;
}

inline Integer rat_ceil(const Rational& q) { return -rat_floor(-q); }

/// Nearest integer; ties round up. Used only where ties are impossible or
/// the choice is immaterial (candidate search).
inline Integer rat_round(const Rational& q) { return rat_floor(q + Rational(1, 2)); }

/// Exact distance from q to the nearest integer, in [0, 1/2].
inline Rational nearest_integer_distance(const Rational& q) {
    Rational frac = q - Rational(rat_floor(q));
    Rational other = 1 - frac;
    return frac <= other ? frac : other;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "p/q" or a plain decimal like "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational: '" + text + "'");
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) return fail();

    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) return fail();
        Integer qi(q);
        if (qi == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        return Rational(Integer(p), qi);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!is_int(head) || tail.empty() || !is_int(tail) || tail[0] == '-' || tail[0] == '+')
            return fail();
        Integer scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        return Rational(Integer(head + tail), scale);
    }
    if (!is_int(s)) return fail();
    return Rational(Integer(s));
}

inline double rat_double(const Rational& q) { return q.convert_to<double>(); }

/// Floor integer square root.
inline Integer int_sqrt(const Integer& x) {
    if (x < 0) throw std::domain_error("int_sqrt of negative");
    return boost::multiprecision::sqrt(x);
}

/// Floor integer k-th root via Newton iteration.
inline Integer int_kth_root(const Integer& x, unsigned k) {
    if (k == 0) throw std::domain_error("0th root");
    if (x < 0) throw std::domain_error("int_kth_root of negative");
    if (x == 0 || x == 1 || k == 1) return x;
    if (k == 2) return int_sqrt(x);
    Integer r = Integer(1) << (static_cast<unsigned>(msb(x)) / k + 1);
    while (true) {
        Integer rk1 = boost::multiprecision::pow(r, k - 1);
        Integer next = ((k - 1) * r + x / rk1) / k;
        if (next >= r) break;
        r = next;
    }
    while (boost::multiprecision::pow(r, k) > x) --r;
    return r;
}

struct RatBounds {
    Rational lo, hi;
};

/// Certified enclosure of sqrt(x): lo^2 <= x <= hi^2, hi - lo <= 2^-bits * hi.
inline RatBounds sqrt_bounds(const Rational& x, unsigned bits = 64) {
    if (x < 0) throw std::domain_error("sqrt_bounds of negative");
    if (x == 0) return {0, 0};
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits so the integer root carries
    // the requested precision.
    Integer p = numerator(x), q = denominator(x);
    Integer scaled = p * q << (2 * bits);
    Integer root = int_sqrt(scaled);
    Rational denom = Rational(q) * (Integer(1) << bits);
    return {Rational(root) / denom, Rational(root + 1) / denom};
}

/// Certified enclosure of x^(1/k) for x >= 0.
inline RatBounds kth_root_bounds(const Rational& x, unsigned k, unsigned bits = 64) {
    if (x < 0) throw std::domain_error("kth_root_bounds of negative");
    if (x == 0) return {0, 0};
    if (k == 1) return {x, x};
    Integer p = numerator(x), q = denominator(x);
    Integer scaled = (p * boost::multiprecision::pow(q, k - 1)) << (k * bits);
    Integer root = int_kth_root(scaled, k);
    Rational denom = Rational(q) * (Integer(1) << bits);
    return {Rational(root) / denom, Rational(root + 1) / denom};
}

}  // namespace lacuna

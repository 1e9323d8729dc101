// Certified rational enclosures of natural logarithms. Comparisons against
// log values are decided with directed bounds that tighten until the answer
// is unambiguous, so no floating point sneaks into an exactness claim.
#pragma once

#include "lacuna/rational.hpp"

#include <utility>

namespace lacuna {

namespace detail {

// atanh series: ln((1+z)/(1-z)) = 2 * sum z^(2j+1)/(2j+1), |z| < 1.
// Returns enclosure given a term count; remainder bounded by the geometric
// tail 2 z^(2J+3) / ((2J+3)(1-z^2)).
inline RatBounds atanh_log_series(const Rational& z, unsigned terms) {
    Rational z2 = z * z;
    Rational sum = 0;
    Rational power = z;
    for (unsigned j = 0; j < terms; ++j) {
        sum += power / Rational(2 * j + 1);
        power *= z2;
    }
    sum *= 2;
    // power is z^(2*terms+1) after the loop; geometric tail bound.
    Rational tail = 2 * power / Rational(2 * terms + 1) / (1 - z2);
    return {sum, sum + tail};
}

inline RatBounds ln2_bounds_cached(unsigned terms) {
    // ln 2 = 2 atanh(1/3); each extra term gains ~3.17 bits.
    static thread_local unsigned cached_terms = 0;
    static thread_local RatBounds cached{0, 0};
    if (terms > cached_terms) {
        cached = atanh_log_series(Rational(1, 3), terms);
        cached_terms = terms;
    }
    return cached;
}

}  // namespace detail

/// Certified bounds on ln(x) for x > 0 rational. `bits` controls the target
/// precision of the series (error roughly 2^-(3*terms)).
inline RatBounds ln_bounds(const Rational& x, unsigned bits = 64) {
    if (x <= 0) throw std::domain_error("ln_bounds requires x > 0");
    if (x == 1) return {0, 0};
    unsigned terms = bits / 3 + 4;

    // Normalize x = m * 2^e with m in [1, 2).
    Integer p = numerator(x), q = denominator(x);
    long e = 0;
    Rational m(p, q);
    if (m >= 2) {
        long shift = static_cast<long>(msb(p / q));
        m /= rat_pow(Rational(2), static_cast<unsigned>(shift));
        e += shift;
        while (m >= 2) { m /= 2; ++e; }
    }
    while (m < 1) { m *= 2; --e; }

    // ln m via atanh series, z = (m-1)/(m+1) in [0, 1/3).
    Rational z = (m - 1) / (m + 1);
    RatBounds lm = z == 0 ? RatBounds{0, 0} : detail::atanh_log_series(z, terms);
    RatBounds l2 = detail::ln2_bounds_cached(terms);

    if (e >= 0) {
        return {lm.lo + e * l2.lo, lm.hi + e * l2.hi};
    }
    return {lm.lo + e * l2.hi, lm.hi + e * l2.lo};
}

/// Certified truth of "ln(x) <= t" for rational x > 0 and rational t.
/// Never ambiguous: ln of a rational != 1 is irrational, so the bounds
/// separate at some finite precision.
inline bool ln_leq(const Rational& x, const Rational& t, unsigned start_bits = 64) {
    for (unsigned bits = start_bits;; bits *= 2) {
        RatBounds b = ln_bounds(x, bits);
        if (b.hi <= t) return true;
        if (b.lo > t) return false;
        if (bits > 1u << 20) throw std::runtime_error("ln_leq failed to separate");
    }
}

/// Certified truth of "a * ln(x) <= b" with a, b rational, x > 1.
inline bool scaled_ln_leq(const Rational& a, const Rational& x, const Rational& b,
                          unsigned start_bits = 64) {
    if (a == 0) return 0 <= b;
    for (unsigned bits = start_bits;; bits *= 2) {
        RatBounds l = ln_bounds(x, bits);
        Rational lhs_hi = a > 0 ? a * l.hi : a * l.lo;
        Rational lhs_lo = a > 0 ? a * l.lo : a * l.hi;
        if (lhs_hi <= b) return true;
        if (lhs_lo > b) return false;
        if (bits > 1u << 20) throw std::runtime_error("scaled_ln_leq failed to separate");
    }
}

}  // namespace lacuna

// Rational-endpoint interval arithmetic. Conservative by construction; used
// for certified range bounds of polynomials over boxes (radius certificates,
// tuple pruning).
#pragma once

#include "lacuna/point.hpp"
#include "lacuna/rational.hpp"

#include <vector>

namespace lacuna {

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational v) : lo(v), hi(std::move(v)) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    Rational width() const { return hi - lo; }

    /// max(|lo|, |hi|)
    Rational mag() const {
        Rational a = rat_abs(lo), b = rat_abs(hi);
        return a > b ? a : b;
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rational lo = c1, hi = c1;
    for (const Rational* v : {&c2, &c3, &c4}) {
        if (*v < lo) lo = *v;
        if (*v > hi) hi = *v;
    }
    return {lo, hi};
}

inline RatInterval operator*(const Rational& s, const RatInterval& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

/// Tight interval power (even powers of sign-spanning intervals floor at 0).
inline RatInterval int_pow(const RatInterval& a, unsigned e) {
    if (e == 0) return {1, 1};
    if (e == 1) return a;
    Rational plo = rat_pow(a.lo, e), phi = rat_pow(a.hi, e);
    if (e % 2 == 1) return {plo, phi};
    if (a.lo >= 0) return {plo, phi};
    if (a.hi <= 0) return {phi, plo};
    return {0, plo > phi ? plo : phi};
}

using IntervalVector = std::vector<RatInterval>;

/// Per-coordinate intervals of a box.
inline IntervalVector box_intervals(const Box& box) {
    IntervalVector iv;
    iv.reserve(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) iv.emplace_back(box.lo[i], box.hi[i]);
    return iv;
}

/// Intervals [c_i - r, c_i + r] around a point.
inline IntervalVector ball_box_intervals(const Point& center, const Rational& r) {
    IntervalVector iv;
    iv.reserve(center.size());
    for (const auto& c : center) iv.emplace_back(c - r, c + r);
    return iv;
}

}  // namespace lacuna

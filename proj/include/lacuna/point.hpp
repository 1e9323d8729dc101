#pragma once

#include "lacuna/rational.hpp"

#include <vector>

namespace lacuna {

using Point = std::vector<Rational>;

inline Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Rational squared_distance(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline Rational squared_norm(const Point& a) {
    Rational s = 0;
    for (const auto& c : a) s += c * c;
    return s;
}

/// Axis-aligned closed box.
struct Box {
    Point lo, hi;

    std::size_t dim() const { return lo.size(); }

    bool contains(const Point& p) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    static Box cube(std::size_t n, const Rational& lo_v, const Rational& hi_v) {
        return Box{Point(n, lo_v), Point(n, hi_v)};
    }
};

/// Lexicographic order on coordinate vectors; the library's canonical point
/// order (deterministic scans, greedy nets, child selection).
inline bool lex_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace lacuna

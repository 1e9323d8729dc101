// Catalog of exclusion configurations: a named pattern is an m-point,
// n-dimensional zero-set of one or more rational polynomials, optionally
// composed with per-point affine maps. Every catalog entry carries a witness
// tuple on the zero set and an anti-witness off it.
#pragma once

#include "lacuna/point.hpp"
#include "lacuna/polynomial.hpp"

#include <cmath>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lacuna {

/// Invertible (unless flagged degenerate) affine self-map of R^n. exact=false
/// marks rational approximations of irrational maps; downstream exactness
/// claims are disabled for specs carrying such maps.
struct AffineMap {
    std::vector<std::vector<Rational>> matrix;  // n x n, row-major
    Point offset;                               // length n
    bool exact = true;

    static AffineMap identity(std::size_t n) {
        AffineMap m;
        m.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = 1;
        m.offset.assign(n, Rational(0));
        return m;
    }

    static AffineMap linear(std::vector<std::vector<Rational>> mat) {
        AffineMap m;
        m.offset.assign(mat.size(), Rational(0));
        m.matrix = std::move(mat);
        return m;
    }

    static AffineMap scaling(std::size_t n, const Rational& s) {
        AffineMap m = identity(n);
        for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = s;
        return m;
    }

    /// Exact rational rotation in the plane from a rational point on the unit
    /// circle (c^2 + s^2 must equal 1).
    static AffineMap rotation_exact(const Rational& c, const Rational& s) {
        if (c * c + s * s != 1)
            throw std::invalid_argument("rotation_exact: (c, s) not on the unit circle");
        return linear({{c, -s}, {s, c}});
    }

    /// Nearest-rational approximation of a plane rotation, denominators
    /// bounded by 10^12. Marked exact=false: c^2 + s^2 != 1 in general.
    static AffineMap rotation_approx(double angle_radians);

    std::size_t dim() const { return matrix.size(); }

    Point apply(const Point& p) const {
        Point out(offset);
        for (std::size_t i = 0; i < matrix.size(); ++i)
            for (std::size_t j = 0; j < matrix.size(); ++j) out[i] += matrix[i][j] * p[j];
        return out;
    }

    Rational determinant() const {
        // Fraction-free Gaussian elimination would be overkill at n <= 8.
        std::vector<std::vector<Rational>> a = matrix;
        std::size_t n = a.size();
        Rational det = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a[pivot][col] == 0) ++pivot;
            if (pivot == n) return 0;
            if (pivot != col) {
                std::swap(a[pivot], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (std::size_t row = col + 1; row < n; ++row) {
                if (a[row][col] == 0) continue;
                Rational f = a[row][col] / a[col][col];
                for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            }
        }
        return det;
    }

    bool invertible() const { return determinant() != 0; }
};

/// Best rational approximation with denominator <= max_den (continued
/// fractions / Stern-Brocot walk).
inline Rational rational_approx(double value, const Integer& max_den) {
    if (value == 0) return 0;
    bool neg = value < 0;
    double x = neg ? -value : value;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        Integer a = static_cast<long long>(fl);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1 == 0 ? Integer(1) : q1);
    return neg ? Rational(-r) : r;
}

inline AffineMap AffineMap::rotation_approx(double angle_radians) {
    const Integer max_den = Integer("1000000000000");
    Rational c = rational_approx(std::cos(angle_radians), max_den);
    Rational s = rational_approx(std::sin(angle_radians), max_den);
    AffineMap m = linear({{c, -s}, {s, c}});
    m.exact = false;
    return m;
}

/// A forbidden pattern: m distinct points of R^n violate the configuration
/// when every polynomial vanishes on the (mapped) tuple.
struct ConfigurationSpec {
    std::string name;
    std::size_t n = 0;  // ambient dimension
    std::size_t m = 0;  // points per configuration
    std::vector<RationalPoly> polys;  // each in n*m variables
    std::vector<AffineMap> maps;      // per point; empty means identity
    bool degenerate = false;          // some map is non-invertible

    std::optional<std::vector<Point>> witness;       // exact zero tuple
    std::optional<std::vector<Point>> anti_witness;  // exact nonzero tuple

    bool exact() const {
        for (const auto& mp : maps)
            if (!mp.exact) return false;
        return true;
    }

    bool has_maps() const {
        if (maps.empty()) return false;
        for (const auto& mp : maps) {
            for (std::size_t i = 0; i < mp.dim(); ++i) {
                if (mp.offset[i] != 0) return true;
                for (std::size_t j = 0; j < mp.dim(); ++j)
                    if (mp.matrix[i][j] != (i == j ? 1 : 0)) return true;
            }
        }
        return false;
    }

    std::vector<Point> mapped(const std::vector<Point>& tuple) const {
        if (maps.empty()) return tuple;
        std::vector<Point> out;
        out.reserve(tuple.size());
        for (std::size_t p = 0; p < tuple.size(); ++p) out.push_back(maps[p].apply(tuple[p]));
        return out;
    }

    /// Values of every polynomial on the mapped tuple.
    std::vector<Rational> evaluate(const std::vector<Point>& tuple) const {
        if (tuple.size() != m) throw std::invalid_argument("configuration arity mismatch");
        std::vector<Point> pts = mapped(tuple);
        std::vector<Rational> vals;
        vals.reserve(polys.size());
        for (const auto& P : polys) vals.push_back(poly_eval_points(P, pts));
        return vals;
    }

    /// Each polynomial with the affine maps substituted in, as a plain
    /// polynomial in the unmapped coordinates.
    std::vector<RationalPoly> composed_polys() const {
        if (maps.empty()) return polys;
        std::size_t nv = n * m;
        std::vector<RationalPoly> subs(nv, RationalPoly(nv));
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t c = 0; c < n; ++c) {
                RationalPoly s = RationalPoly::constant(nv, maps[p].offset[c]);
                for (std::size_t j = 0; j < n; ++j)
                    s += maps[p].matrix[c][j] * RationalPoly::variable(nv, p * n + j);
                subs[p * n + c] = s;
            }
        }
        std::vector<RationalPoly> out;
        out.reserve(polys.size());
        for (const auto& P : polys) out.push_back(poly_substitute(P, subs));
        return out;
    }
};

namespace detail {

inline RationalPoly pvar(std::size_t n, std::size_t m, std::size_t point, std::size_t coord) {
    return RationalPoly::variable(n * m, point * n + coord);
}

/// sum_i (a_i - b_i)(c_i - d_i) over coordinates.
inline RationalPoly diff_dot(std::size_t n, std::size_t m, std::size_t a, std::size_t b,
                             std::size_t c, std::size_t d) {
    RationalPoly s(n * m);
    for (std::size_t i = 0; i < n; ++i)
        s += (pvar(n, m, a, i) - pvar(n, m, b, i)) * (pvar(n, m, c, i) - pvar(n, m, d, i));
    return s;
}

/// |a - b|^2
inline RationalPoly diff_norm2(std::size_t n, std::size_t m, std::size_t a, std::size_t b) {
    return diff_dot(n, m, a, b, a, b);
}

inline Point pad(std::initializer_list<long> coords, std::size_t n) {
    Point p(n, Rational(0));
    std::size_t i = 0;
    for (long c : coords) {
        if (i >= n) break;
        p[i++] = c;
    }
    return p;
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer pn = int_sqrt(numerator(q)), pd = int_sqrt(denominator(q));
    if (pn * pn != numerator(q) || pd * pd != denominator(q)) return std::nullopt;
    return Rational(pn, pd);
}

}  // namespace detail

struct PresetParams {
    std::map<std::string, Rational> values;

    Rational get(const std::string& key, const Rational& fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return values.count(key) > 0; }
};

/// Similar-copy exclusion: {a, b, c} similar to the pattern encoded by A
/// exactly when (A - I)a - A b + c = 0. Supported for n in {1, 2}; no linear
/// relation of this shape exists in higher dimension.
inline ConfigurationSpec similarity_preset(std::size_t n, const AffineMap& A) {
    using namespace detail;
    if (n != 1 && n != 2)
        throw std::invalid_argument("similarity_preset: only n = 1 and n = 2 are supported");
    if (A.dim() != n) throw std::invalid_argument("similarity_preset: map dimension mismatch");

    ConfigurationSpec spec;
    spec.name = "similarity";
    spec.n = n;
    spec.m = 3;

    AffineMap a_minus_i = A;
    for (std::size_t i = 0; i < n; ++i) a_minus_i.matrix[i][i] -= 1;
    AffineMap minus_a = A;
    for (auto& row : minus_a.matrix)
        for (auto& v : row) v = -v;
    spec.maps = {a_minus_i, minus_a, AffineMap::identity(n)};
    spec.degenerate = !a_minus_i.invertible() || !A.invertible();
    for (auto& mp : spec.maps) mp.exact = A.exact;

    // Coordinate sums x_c + y_c + z_c; with the maps above, vanishing of all
    // of them is exactly the similarity relation.
    for (std::size_t c = 0; c < n; ++c) {
        RationalPoly s = pvar(n, 3, 0, c) + pvar(n, 3, 1, c) + pvar(n, 3, 2, c);
        spec.polys.push_back(s);
    }

    // Witness (0, b, A b) satisfies c - a = A (b - a).
    Point zero(n, Rational(0));
    Point b(n, Rational(0));
    b[0] = 1;
    Point c = A.apply(b);
    spec.witness = std::vector<Point>{zero, b, c};
    Point c_off = c;
    c_off[n - 1] += 7;
    spec.anti_witness = std::vector<Point>{zero, b, c_off};
    return spec;
}

/// Instantiates a named exclusion pattern. Returns one spec per polynomial
/// family member (point counts differ within a family).
inline std::vector<ConfigurationSpec> builtin_preset(const std::string& name, std::size_t n,
                                                     const PresetParams& params = {}) {
    using namespace detail;
    auto make = [&](const std::string& nm, std::size_t m, std::vector<RationalPoly> polys) {
        ConfigurationSpec s;
        s.name = nm;
        s.n = n;
        s.m = m;
        s.polys = std::move(polys);
        return s;
    };

    if (name == "right_angle") {
        if (n < 2) throw std::invalid_argument("right_angle: requires n >= 2");
        ConfigurationSpec four = make("right_angle_pair", 4, {diff_dot(n, 4, 0, 1, 2, 3)});
        four.witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({2, 3}, n), pad({2, 2}, n)}};
        four.anti_witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({2, 3}, n), pad({1, 2}, n)}};
        ConfigurationSpec three = make("right_angle_vertex", 3, {diff_dot(n, 3, 0, 1, 2, 0)});
        three.witness = {{pad({0, 0}, n), pad({1, 0}, n), pad({0, 1}, n)}};
        three.anti_witness = {{pad({0, 0}, n), pad({1, 0}, n), pad({1, 1}, n)}};
        return {four, three};
    }

    if (name == "rational_cos2") {
        if (n < 2) throw std::invalid_argument("rational_cos2: requires n >= 2");
        Rational q = params.get("q", Rational(1, 2));
        if (q < 0 || q > 1) throw std::invalid_argument("rational_cos2: need q in [0, 1]");
        // <y-x, z-x>^2 - q |y-x|^2 |z-x|^2 and the four-point direction form.
        RationalPoly p3 = diff_dot(n, 3, 1, 0, 2, 0) * diff_dot(n, 3, 1, 0, 2, 0) -
                          q * (diff_norm2(n, 3, 1, 0) * diff_norm2(n, 3, 2, 0));
        RationalPoly p4 = diff_dot(n, 4, 1, 0, 2, 3) * diff_dot(n, 4, 1, 0, 2, 3) -
                          q * (diff_norm2(n, 4, 1, 0) * diff_norm2(n, 4, 2, 3));
        ConfigurationSpec three = make("rational_cos2_vertex", 3, {p3});
        ConfigurationSpec four = make("rational_cos2_pair", 4, {p4});

        // A rational witness direction pair exists iff q/(1-q) is a rational
        // square (or q = 1, parallel rays).
        std::optional<Point> dir;  // v with cos^2(angle((1,0,...), v)) == q
        if (q == 1) {
            dir = pad({2, 0}, n);
        } else if (auto s = rational_sqrt(q / (1 - q))) {
            Point v(n, Rational(0));
            v[0] = *s;
            v[1] = 1;
            dir = v;
        }
        if (dir) {
            Point x0(n, Rational(0));
            Point y = pad({1, 0}, n);
            Point z = *dir;
            three.witness = {{x0, y, z}};
            Point far = pad({3, 1}, n);
            Point v4 = add(far, *dir);
            four.witness = {{x0, y, v4, far}};
        }
        {
            Point x0(n, Rational(0));
            three.anti_witness = {{x0, pad({1, 1}, n), pad({1, 2}, n)}};
            four.anti_witness = {{x0, pad({1, 1}, n), pad({4, 3}, n), pad({3, 1}, n)}};
        }
        return {three, four};
    }

    if (name == "angle_pair_equality") {
        if (n < 2) throw std::invalid_argument("angle_pair_equality: requires n >= 2");
        // Cross-multiplied equality of two direction-pair cosines, degree 8.
        RationalPoly p8 =
            diff_dot(n, 8, 0, 1, 2, 3) * diff_dot(n, 8, 0, 1, 2, 3) * diff_norm2(n, 8, 4, 5) *
                diff_norm2(n, 8, 6, 7) -
            diff_dot(n, 8, 4, 5, 6, 7) * diff_dot(n, 8, 4, 5, 6, 7) * diff_norm2(n, 8, 0, 1) *
                diff_norm2(n, 8, 2, 3);
        // Vertex form: angles at b and at f, six points (a,b,c,e,f,g).
        RationalPoly p6 =
            diff_dot(n, 6, 0, 1, 2, 1) * diff_dot(n, 6, 0, 1, 2, 1) * diff_norm2(n, 6, 3, 4) *
                diff_norm2(n, 6, 5, 4) -
            diff_dot(n, 6, 3, 4, 5, 4) * diff_dot(n, 6, 3, 4, 5, 4) * diff_norm2(n, 6, 0, 1) *
                diff_norm2(n, 6, 2, 1);
        ConfigurationSpec eight = make("angle_pair_equality_pairs", 8, {p8});
        eight.witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({5, 1}, n), pad({5, 0}, n),
                          pad({3, 3}, n), pad({2, 2}, n), pad({7, 2}, n), pad({6, 3}, n)}};
        eight.anti_witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({5, 1}, n), pad({5, 0}, n),
                               pad({3, 3}, n), pad({2, 2}, n), pad({7, 2}, n), pad({6, 4}, n)}};
        ConfigurationSpec six = make("angle_pair_equality_vertices", 6, {p6});
        six.witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({0, 1}, n), pad({5, 3}, n),
                        pad({4, 2}, n), pad({5, 1}, n)}};
        six.anti_witness = {{pad({1, 0}, n), pad({0, 0}, n), pad({0, 1}, n), pad({5, 3}, n),
                             pad({4, 2}, n), pad({6, 3}, n)}};
        return {eight, six};
    }

    if (name == "collinear") {
        if (n < 2) throw std::invalid_argument("collinear: requires n >= 2");
        auto first_two_parallel = [&](std::size_t m, std::size_t x, std::size_t y, std::size_t z,
                                      std::size_t v) {
            return (pvar(n, m, y, 1) - pvar(n, m, x, 1)) * (pvar(n, m, v, 0) - pvar(n, m, z, 0)) -
                   (pvar(n, m, y, 0) - pvar(n, m, x, 0)) * (pvar(n, m, v, 1) - pvar(n, m, z, 1));
        };
        ConfigurationSpec four = make("collinear_directions", 4, {first_two_parallel(4, 0, 1, 2, 3)});
        four.witness = {{pad({0, 0}, n), pad({1, 2}, n), pad({5, 0}, n), pad({6, 2}, n)}};
        four.anti_witness = {{pad({0, 0}, n), pad({1, 2}, n), pad({5, 0}, n), pad({6, 3}, n)}};
        // Three-point collinearity uses (x, y, z) with the pair (y, z) sharing y.
        RationalPoly q3 =
            (pvar(n, 3, 1, 1) - pvar(n, 3, 0, 1)) * (pvar(n, 3, 1, 0) - pvar(n, 3, 2, 0)) -
            (pvar(n, 3, 1, 0) - pvar(n, 3, 0, 0)) * (pvar(n, 3, 1, 1) - pvar(n, 3, 2, 1));
        ConfigurationSpec three = make("collinear_triples", 3, {q3});
        three.witness = {{pad({0, 0}, n), pad({1, 1}, n), pad({2, 2}, n)}};
        three.anti_witness = {{pad({0, 0}, n), pad({1, 1}, n), pad({2, 5}, n)}};
        return {four, three};
    }

    if (name == "distance") {
        Rational r = params.get("r", Rational(1));
        if (n >= 2) {
            RationalPoly pr = diff_norm2(n, 4, 0, 1) - diff_norm2(n, 4, 2, 3) -
                              RationalPoly::constant(4 * n, r);
            RationalPoly pstar = diff_norm2(n, 3, 0, 1) - diff_norm2(n, 3, 2, 1) -
                                 RationalPoly::constant(3 * n, r);
            RationalPoly qr = diff_norm2(n, 2, 0, 1) - RationalPoly::constant(2 * n, r);
            ConfigurationSpec p = make("distance_pairs", 4, {pr});
            ConfigurationSpec ps = make("distance_vertex", 3, {pstar});
            ConfigurationSpec q = make("distance_single", 2, {qr});
            // |a-b|^2 - |c-d|^2 = r always has the 1-D style witness
            // u = (r+1)/2, v = (r-1)/2 on the first coordinate.
            Rational u = (r + 1) / 2, v = (r - 1) / 2;
            Point a(n, Rational(0));
            Point b = a; b[0] = u;
            Point c = a; c[0] = 3; c[1] = 3;
            Point d = c; d[0] = 3 + v;
            p.witness = {{a, b, c, d}};
            Point d_bad = c; d_bad[0] = 4 + v; d_bad[1] = 4;
            p.anti_witness = {{a, b, c, d_bad}};
            Point bs = a; bs[0] = u; bs[1] = 5;
            Point cs = bs; cs[0] = u + v;
            ps.witness = {{a, bs, cs}};
            Point cs_bad = cs; cs_bad[1] = 7;
            ps.anti_witness = {{a, bs, cs_bad}};
            if (auto s = rational_sqrt(r)) {
                Point bq = a; bq[0] = *s;
                q.witness = {{a, bq}};
            }
            Point bq_bad = a; bq_bad[0] = rat_abs(r) + 1;
            q.anti_witness = {{a, bq_bad}};
            return {p, ps, q};
        }
        // One dimension: the same shapes without squaring.
        RationalPoly pr = (pvar(1, 4, 0, 0) - pvar(1, 4, 1, 0)) -
                          (pvar(1, 4, 2, 0) - pvar(1, 4, 3, 0)) - RationalPoly::constant(4, r);
        RationalPoly pstar = (pvar(1, 3, 0, 0) - pvar(1, 3, 1, 0)) -
                             (pvar(1, 3, 1, 0) - pvar(1, 3, 2, 0)) - RationalPoly::constant(3, r);
        RationalPoly qr = (pvar(1, 2, 0, 0) - pvar(1, 2, 1, 0)) - RationalPoly::constant(2, r);
        ConfigurationSpec p = make("distance_pairs", 4, {pr});
        ConfigurationSpec ps = make("distance_vertex", 3, {pstar});
        ConfigurationSpec q = make("distance_single", 2, {qr});
        p.witness = {{Point{r + 5}, Point{2}, Point{3}, Point{0}}};
        p.anti_witness = {{Point{r + 6}, Point{2}, Point{3}, Point{0}}};
        ps.witness = {{Point{r}, Point{0}, Point{-r}}};
        // Degenerate r = 0 would repeat points; nudge the vertex instead.
        if (r == 0) ps.witness = {{Point{2}, Point{1}, Point{0}}};
        ps.anti_witness = {{Point{r + 1}, Point{0}, Point{-r}}};
        q.witness = {{Point{r}, Point{0}}};
        q.anti_witness = {{Point{r + 1}, Point{0}}};
        return {p, ps, q};
    }

    if (name == "hyperplane") {
        if (n < 2) throw std::invalid_argument("hyperplane: requires n >= 2");
        // det of the (n x n) matrix with rows x_i - x_0, i = 1..n; vanishes
        // exactly when the n+1 points share a hyperplane.
        std::size_t m = n + 1;
        std::vector<std::vector<RationalPoly>> rows(n, std::vector<RationalPoly>(n, RationalPoly(n * m)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = pvar(n, m, i + 1, j) - pvar(n, m, 0, j);

        // Laplace expansion along the first column, recursively on index sets.
        std::function<RationalPoly(std::vector<std::size_t>, std::vector<std::size_t>)> det_of =
            [&](std::vector<std::size_t> ri, std::vector<std::size_t> ci) -> RationalPoly {
            if (ri.size() == 1) return rows[ri[0]][ci[0]];
            RationalPoly acc(n * m);
            for (std::size_t k = 0; k < ri.size(); ++k) {
                std::vector<std::size_t> sub_r;
                for (std::size_t t = 0; t < ri.size(); ++t)
                    if (t != k) sub_r.push_back(ri[t]);
                std::vector<std::size_t> sub_c(ci.begin() + 1, ci.end());
                RationalPoly minor = det_of(sub_r, sub_c);
                RationalPoly term = rows[ri[k]][ci[0]] * minor;
                acc += (k % 2 == 0) ? term : -term;
            }
            return acc;
        };
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        ConfigurationSpec spec = make("hyperplane", m, {det_of(idx, idx)});

        std::vector<Point> wit{Point(n, Rational(0))};
        for (std::size_t i = 1; i < n; ++i) {
            Point e(n, Rational(0));
            e[i - 1] = 1;
            wit.push_back(e);
        }
        Point dep(n, Rational(0));
        dep[0] = 1;
        dep[1] = 1;
        wit.push_back(dep);
        spec.witness = wit;
        std::vector<Point> anti = wit;
        anti.back() = Point(n, Rational(0));
        anti.back()[n - 1] = 1;
        spec.anti_witness = anti;
        return {spec};
    }

    if (name == "equilateral") {
        // <y - x, z - (x + y)/2>: z off the perpendicular bisector of (x, y)
        // kills equilateral (indeed all isosceles-apex) triangles.
        RationalPoly s(3 * n);
        for (std::size_t i = 0; i < n; ++i) {
            RationalPoly mid = Rational(1, 2) * (pvar(n, 3, 0, i) + pvar(n, 3, 1, i));
            s += (pvar(n, 3, 1, i) - pvar(n, 3, 0, i)) * (pvar(n, 3, 2, i) - mid);
        }
        ConfigurationSpec spec = make("equilateral", 3, {s});
        if (n >= 2) {
            spec.witness = {{pad({0, 0}, n), pad({2, 0}, n), pad({1, 5}, n)}};
            spec.anti_witness = {{pad({0, 0}, n), pad({2, 0}, n), pad({2, 5}, n)}};
        } else {
            spec.witness = {{Point{0}, Point{2}, Point{1}}};
            spec.anti_witness = {{Point{0}, Point{2}, Point{3}}};
        }
        return {spec};
    }

    if (name == "similarity") {
        AffineMap A = n == 1 ? AffineMap::scaling(1, params.get("scale", Rational(2)))
                             : AffineMap::rotation_exact(0, 1);  // quarter turn
        return {similarity_preset(n, A)};
    }

    throw std::invalid_argument("unknown preset: " + name);
}

struct PresetInfo {
    std::string name;
    std::string parameters;  // human-readable parameter schema
};

inline std::vector<PresetInfo> preset_directory() {
    return {
        {"right_angle", ""},
        {"rational_cos2", "q: squared cosine, rational in [0,1] (default 1/2)"},
        {"angle_pair_equality", ""},
        {"collinear", ""},
        {"distance", "r: excluded (squared) distance, rational (default 1)"},
        {"hyperplane", ""},
        {"equilateral", ""},
        {"similarity", "scale: n=1 ratio (default 2); n=2 uses a quarter turn"},
    };
}

}  // namespace lacuna

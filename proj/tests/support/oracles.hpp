#pragma once

// Independent oracles for expected test values. Everything here computes
// geometric quantities through routes that share no code with the kernel's
// hull / facet / triangulation pipeline: angular-sorted shoelace formulas in
// the plane, product formulas on boxes, Dirichlet integrals on the standard
// simplex, and pairwise line intersections for vertex enumeration.

#include <algorithm>
#include <vector>

#include "vlab/linalg.hpp"

namespace vlab::oracle {

// Sorts the vertex set of a convex polygon counter-clockwise around its
// average point; quadrant split plus exact cross-product comparison.
inline std::vector<Vector> sort_ccw(std::vector<Vector> pts) {
    Vector center = zero_vector(2);
    for (const auto& p : pts) center = vec_add(center, p);
    center = vec_scale(Rational(1, static_cast<long>(pts.size())), center);
    auto half = [&](const Vector& p) {
        const Vector d = vec_sub(p, center);
        return (d[1] > Rational(0) || (d[1] == Rational(0) && d[0] > Rational(0))) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Vector& p, const Vector& q) {
        const int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        const Vector dp = vec_sub(p, center), dq = vec_sub(q, center);
        const Rational cross = dp[0] * dq[1] - dp[1] * dq[0];
        if (!cross.is_zero()) return cross > Rational(0);
        return lex_compare(p, q) < 0;
    });
    return pts;
}

inline Rational polygon_area(const std::vector<Vector>& unordered) {
    const auto pts = sort_ccw(unordered);
    Rational twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return twice / Rational(2);
}

// Integral of x over a convex polygon: signed fan triangles from the first
// vertex, each contributing area times centroid.
inline Vector polygon_moment(const std::vector<Vector>& unordered) {
    const auto pts = sort_ccw(unordered);
    Vector acc = zero_vector(2);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto& a = pts[0];
        const auto& b = pts[i];
        const auto& c = pts[i + 1];
        const Rational area =
            ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])) / Rational(2);
        const Vector centroid = vec_scale(Rational(1, 3), vec_add(vec_add(a, b), c));
        acc = vec_add(acc, vec_scale(area, centroid));
    }
    return acc;
}

struct Line {
    // normal . x <= offset
    Vector normal;
    Rational offset;
};

// Vertex enumeration for a bounded 2-D halfspace intersection: every pair of
// boundary lines, solved exactly and filtered by feasibility.
inline std::vector<Vector> vertex_enum_2d(const std::vector<Line>& lines) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Matrix a(2, 2);
            a.at(0, 0) = lines[i].normal[0];
            a.at(0, 1) = lines[i].normal[1];
            a.at(1, 0) = lines[j].normal[0];
            a.at(1, 1) = lines[j].normal[1];
            const auto x = solve(a, Vector{lines[i].offset, lines[j].offset});
            if (!x) continue;
            bool feasible = true;
            for (const auto& l : lines)
                if (dot(l.normal, *x) > l.offset) {
                    feasible = false;
                    break;
                }
            if (feasible) out.push_back(*x);
        }
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Whether a planar point is a convex combination of some vertex triple,
// solved exactly through barycentric coordinates.
inline bool in_hull_2d(const Vector& point, const std::vector<Vector>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            for (std::size_t k = j + 1; k < verts.size(); ++k) {
                Matrix a(3, 3);
                for (int r = 0; r < 2; ++r) {
                    a.at(r, 0) = verts[i][static_cast<std::size_t>(r)];
                    a.at(r, 1) = verts[j][static_cast<std::size_t>(r)];
                    a.at(r, 2) = verts[k][static_cast<std::size_t>(r)];
                }
                a.at(2, 0) = a.at(2, 1) = a.at(2, 2) = 1;
                const auto lambda = solve(a, Vector{point[0], point[1], Rational(1)});
                if (!lambda) continue;
                if ((*lambda)[0] >= Rational(0) && (*lambda)[1] >= Rational(0) &&
                    (*lambda)[2] >= Rational(0))
                    return true;
            }
    return false;
}

struct Box {
    Vector lo, hi;
};

inline Rational box_volume(const Box& b) {
    Rational v = 1;
    for (std::size_t i = 0; i < b.lo.size(); ++i) v *= b.hi[i] - b.lo[i];
    return v;
}

inline Vector box_moment(const Box& b) {
    const std::size_t n = b.lo.size();
    Vector m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = (b.hi[i] * b.hi[i] - b.lo[i] * b.lo[i]) / Rational(2);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) v *= b.hi[j] - b.lo[j];
        m[i] = v;
    }
    return m;
}

inline Matrix box_moment_matrix(const Box& b) {
    const int n = static_cast<int>(b.lo.size());
    Matrix m(n, n);
    auto first = [&](std::size_t i) { return (b.hi[i] * b.hi[i] - b.lo[i] * b.lo[i]) / Rational(2); };
    auto second = [&](std::size_t i) {
        return (b.hi[i] * b.hi[i] * b.hi[i] - b.lo[i] * b.lo[i] * b.lo[i]) / Rational(3);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = 1;
            for (int k = 0; k < n; ++k) {
                const std::size_t ks = static_cast<std::size_t>(k);
                if (k == i && k == j)
                    v *= second(ks);
                else if (k == i || k == j)
                    v *= first(ks);
                else
                    v *= b.hi[ks] - b.lo[ks];
            }
            m.at(i, j) = v;
        }
    return m;
}

inline Rational factorial(long n) {
    Rational f = 1;
    for (long k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}

// Dirichlet integral over conv{0, e_1, ..., e_n}: x_i x_j integrates to
// (1 + delta_ij) / (n + 2)!.
inline Matrix standard_simplex_moment_matrix(int n) {
    Matrix m(n, n);
    const Rational base = Rational(1) / factorial(n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = i == j ? base * Rational(2) : base;
    return m;
}

// Volume of conv{+-e_i scaled}: one simplex per orthant, each r^n / n!.
inline Rational cross_polytope_volume(int n, const Rational& scale) {
    Rational per_orthant = scale.pow_int(n) / factorial(n);
    Rational v = 0;
    for (long o = 0; o < (1L << n); ++o) v += per_orthant;
    return v;
}

} // namespace vlab::oracle

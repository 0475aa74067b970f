#include "vlab/geometry.hpp"

#include <algorithm>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

// Walks all size-k index subsets of {0, ..., n-1}.
class Combinations {
public:
    Combinations(int n, int k) : n_(n), k_(k), idx_(static_cast<std::size_t>(k)), done_(k > n) {
        for (int i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
    }

    bool done() const { return done_; }
    const std::vector<int>& current() const { return idx_; }

    void advance() {
        int i = k_ - 1;
        while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
        if (i < 0) {
            done_ = true;
            return;
        }
        ++idx_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k_; ++j) idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
    }

private:
    int n_, k_;
    std::vector<int> idx_;
    bool done_;
};

// Vector orthogonal to d-1 given vectors in R^d (generalized cross product
// via cofactor expansion); zero iff the vectors are linearly dependent.
Vector orthogonal_complement(const std::vector<Vector>& rows, int dim) {
    Vector normal(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        Matrix minor(dim - 1, dim - 1);
        for (int r = 0; r < dim - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor.at(r, cc++) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        }
        const Rational d = determinant(minor);
        normal[static_cast<std::size_t>(j)] = (j % 2 == 0) ? d : -d;
    }
    return normal;
}

std::vector<Vector> dedupe_sorted(std::vector<Vector> points) {
    std::sort(points.begin(), points.end(), LexLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool strictly_between(const Vector& p, const Vector& a, const Vector& b) {
    const Vector d = vec_sub(b, a);
    std::size_t j = 0;
    while (j < d.size() && d[j].is_zero()) ++j;
    if (j == d.size()) return false;
    const Rational t = (p[j] - a[j]) / d[j];
    if (t.sign() <= 0 || t >= Rational(1)) return false;
    return p == vec_add(a, vec_scale(t, d));
}

// Cheap exact prefilter for large hull inputs: a point in the open segment
// between two others is never extreme. This is what trims the edge-crossing
// vertices that slab splits and clips introduce.
std::vector<Vector> drop_segment_interior(std::vector<Vector> pts) {
    std::vector<Vector> kept;
    kept.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool interior = false;
        for (std::size_t a = 0; a < pts.size() && !interior; ++a) {
            if (a == i) continue;
            for (std::size_t b = a + 1; b < pts.size() && !interior; ++b) {
                if (b == i) continue;
                interior = strictly_between(pts[i], pts[a], pts[b]);
            }
        }
        if (!interior) kept.push_back(pts[i]);
    }
    return kept;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    const int c = lex_compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
}

// Supporting hyperplanes found by brute force over dim-subsets of the points.
// Exact and complete at the target scale (n <= 4, tens of points).
std::vector<Halfspace> facets_from_points(int dim, const std::vector<Vector>& pts) {
    std::vector<Halfspace> facets;
    const int m = static_cast<int>(pts.size());
    for (Combinations comb(m, dim); !comb.done(); comb.advance()) {
        const auto& idx = comb.current();
        std::vector<Vector> rows;
        rows.reserve(static_cast<std::size_t>(dim - 1));
        for (int i = 1; i < dim; ++i)
            rows.push_back(vec_sub(pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                                   pts[static_cast<std::size_t>(idx[0])]));
        Vector normal = orthogonal_complement(rows, dim);
        if (vec_is_zero(normal)) continue;
        const Rational offset = dot(normal, pts[static_cast<std::size_t>(idx[0])]);
        bool above = false, below = false;
        for (const auto& p : pts) {
            const int s = (dot(normal, p) - offset).sign();
            above = above || s > 0;
            below = below || s < 0;
            if (above && below) break;
        }
        if (above && below) continue;
        if (!above) facets.push_back(canonical_halfspace(normal, offset));
        if (!below) facets.push_back(canonical_halfspace(vec_neg(normal), -offset));
    }
    std::sort(facets.begin(), facets.end(), halfspace_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

std::vector<const Halfspace*> active_facets(const std::vector<Halfspace>& facets, const Vector& x) {
    std::vector<const Halfspace*> act;
    for (const auto& f : facets)
        if (dot(f.normal, x) == f.offset) act.push_back(&f);
    return act;
}

int affine_rank(const std::vector<Vector>& pts) {
    if (pts.size() < 2) return 0;
    std::vector<Vector> rows;
    rows.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(vec_sub(pts[i], pts[0]));
    return rank_of_rows(std::move(rows));
}

// Simplex cover of conv(pts) as index lists: cone from the vertex with the
// smallest id over the facet triangulations not containing it. `pts` must be
// the extreme points of a full-dimensional polytope in R^dim; `ids` carries
// positions in the top-level (lex sorted) vertex list, so min id == lex min.
std::vector<std::vector<int>> triangulate_indices(int dim, const std::vector<Vector>& pts,
                                                  const std::vector<int>& ids) {
    if (pts.size() == static_cast<std::size_t>(dim) + 1) return {ids};
    const auto facets = facets_from_points(dim, pts);
    const std::size_t apex = static_cast<std::size_t>(
        std::min_element(ids.begin(), ids.end()) - ids.begin());
    std::vector<std::vector<int>> out;
    for (const auto& f : facets) {
        if (dot(f.normal, pts[apex]) == f.offset) continue;
        std::vector<Vector> face_pts;
        std::vector<int> face_ids;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(f.normal, pts[i]) == f.offset) {
                face_pts.push_back(pts[i]);
                face_ids.push_back(ids[i]);
            }
        int drop = 0;
        while (f.normal[static_cast<std::size_t>(drop)].is_zero()) ++drop;
        std::vector<Vector> proj;
        proj.reserve(face_pts.size());
        for (const auto& p : face_pts) {
            Vector q;
            q.reserve(static_cast<std::size_t>(dim) - 1);
            for (int c = 0; c < dim; ++c)
                if (c != drop) q.push_back(p[static_cast<std::size_t>(c)]);
            proj.push_back(std::move(q));
        }
        for (auto cell : triangulate_indices(dim - 1, proj, face_ids)) {
            cell.insert(cell.begin(), ids[apex]);
            out.push_back(std::move(cell));
        }
    }
    return out;
}

std::vector<std::vector<int>> facet_triangulation_indices(const Polytope& p, const Halfspace& f) {
    // Triangulates one facet of p (indices into p.vertices()).
    const int dim = p.dim();
    std::vector<Vector> face_pts;
    std::vector<int> face_ids;
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (dot(f.normal, p.vertices()[i]) == f.offset) {
            face_pts.push_back(p.vertices()[i]);
            face_ids.push_back(static_cast<int>(i));
        }
    if (dim == 1) return {face_ids}; // facet of a segment is a single point
    int drop = 0;
    while (f.normal[static_cast<std::size_t>(drop)].is_zero()) ++drop;
    std::vector<Vector> proj;
    proj.reserve(face_pts.size());
    for (const auto& q : face_pts) {
        Vector v;
        v.reserve(static_cast<std::size_t>(dim) - 1);
        for (int c = 0; c < dim; ++c)
            if (c != drop) v.push_back(q[static_cast<std::size_t>(c)]);
        proj.push_back(std::move(v));
    }
    return triangulate_indices(dim - 1, proj, face_ids);
}

} // namespace

Halfspace canonical_halfspace(Vector normal, Rational offset) {
    if (vec_is_zero(normal)) fail(ErrorCode::degenerate_input, "halfspace with zero normal");
    mpz_class l = offset.den();
    for (const auto& c : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    const Rational scale = Rational::from_integer(l);
    for (auto& c : normal) c *= scale;
    offset *= scale;
    mpz_class g = abs(offset.num());
    for (const auto& c : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    if (g > 1) {
        const Rational inv = Rational(1) / Rational::from_integer(g);
        for (auto& c : normal) c *= inv;
        offset *= inv;
    }
    return Halfspace{std::move(normal), std::move(offset)};
}

Rational simplex_volume(const Simplex& s) {
    const int dim = static_cast<int>(s.vertices.size()) - 1;
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const Vector d = vec_sub(s.vertices[static_cast<std::size_t>(i) + 1], s.vertices[0]);
        for (int j = 0; j < dim; ++j) m.at(i, j) = d[static_cast<std::size_t>(j)];
    }
    Rational v = determinant(std::move(m)).abs();
    for (int k = 2; k <= dim; ++k) v /= Rational(k);
    return v;
}

Polytope Polytope::from_points(int dim, const std::vector<Vector>& points) {
    if (dim < 1) fail(ErrorCode::wrong_dimension, "polytope dimension must be positive");
    for (const auto& p : points)
        if (p.size() != static_cast<std::size_t>(dim))
            fail(ErrorCode::wrong_dimension, "point length does not match dimension");
    std::vector<Vector> pts = dedupe_sorted(points);
    if (pts.size() < static_cast<std::size_t>(dim) + 1)
        fail(ErrorCode::degenerate_input, "need at least dim+1 distinct points");
    if (affine_rank(pts) != dim)
        fail(ErrorCode::degenerate_input, "points do not affinely span the ambient space");
    if (pts.size() > 3 * static_cast<std::size_t>(dim + 1)) pts = drop_segment_interior(std::move(pts));
    auto facets = facets_from_points(dim, pts);
    std::vector<Vector> verts;
    for (const auto& p : pts) {
        std::vector<Vector> normals;
        for (const auto* f : active_facets(facets, p)) normals.push_back(f->normal);
        if (rank_of_rows(std::move(normals)) == dim) verts.push_back(p);
    }
    return Polytope(dim, std::move(verts), std::move(facets));
}

Polytope Polytope::from_halfspaces(int dim, const std::vector<Halfspace>& halfspaces) {
    if (dim < 1) fail(ErrorCode::wrong_dimension, "polytope dimension must be positive");
    std::vector<Halfspace> hs;
    hs.reserve(halfspaces.size());
    for (const auto& h : halfspaces) {
        if (h.normal.size() != static_cast<std::size_t>(dim))
            fail(ErrorCode::wrong_dimension, "halfspace normal length does not match dimension");
        hs.push_back(canonical_halfspace(h.normal, h.offset));
    }
    std::sort(hs.begin(), hs.end(), halfspace_less);
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

    std::vector<Vector> candidates;
    const int m = static_cast<int>(hs.size());
    for (Combinations comb(m, dim); !comb.done(); comb.advance()) {
        const auto& idx = comb.current();
        Matrix a(dim, dim);
        Vector b(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            const auto& h = hs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            for (int j = 0; j < dim; ++j) a.at(i, j) = h.normal[static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)] = h.offset;
        }
        const auto x = solve(a, b);
        if (!x) continue;
        bool feasible = true;
        for (const auto& h : hs)
            if (dot(h.normal, *x) > h.offset) {
                feasible = false;
                break;
            }
        if (feasible) candidates.push_back(*x);
    }
    candidates = dedupe_sorted(std::move(candidates));
    if (candidates.size() < static_cast<std::size_t>(dim) + 1 || affine_rank(candidates) != dim)
        fail(ErrorCode::empty_or_degenerate_intersection,
             "halfspace intersection is empty or not full-dimensional");

    // Every facet hyperplane is among the inputs; keep the ones whose active
    // vertex set is (dim-1)-dimensional.
    std::vector<Halfspace> facets;
    for (const auto& h : hs) {
        std::vector<Vector> act;
        for (const auto& v : candidates)
            if (dot(h.normal, v) == h.offset) act.push_back(v);
        if (act.size() >= static_cast<std::size_t>(dim) && affine_rank(act) == dim - 1)
            facets.push_back(h);
    }
    return Polytope(dim, std::move(candidates), std::move(facets));
}

Polytope convex_hull(int dim, const std::vector<Vector>& points) {
    return Polytope::from_points(dim, points);
}

bool polytope_equal(const Polytope& a, const Polytope& b) { return a == b; }

bool point_in_polytope(const Polytope& p, const Vector& x) {
    for (const auto& f : p.facets())
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

bool contains_origin_interior(const Polytope& p) {
    for (const auto& f : p.facets())
        if (f.offset.sign() <= 0) return false;
    return true;
}

Polytope polar(const Polytope& p) {
    if (!contains_origin_interior(p))
        fail(ErrorCode::origin_not_interior, "polar of a polytope without the origin in its interior");
    // Facet (u, o) of P maps to vertex u/o of P*; vertex v of P maps to facet
    // v . y <= 1 of P*. Both lists stay irredundant under this duality.
    std::vector<Vector> verts;
    verts.reserve(p.facets().size());
    for (const auto& f : p.facets()) verts.push_back(vec_scale(Rational(1) / f.offset, f.normal));
    std::sort(verts.begin(), verts.end(), LexLess{});
    std::vector<Halfspace> facets;
    facets.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) facets.push_back(canonical_halfspace(v, Rational(1)));
    std::sort(facets.begin(), facets.end(), halfspace_less);
    return Polytope(p.dim(), std::move(verts), std::move(facets));
}

Polytope apply_linear_map(const LinearMap& phi, const Polytope& p) {
    if (phi.dim() != p.dim()) fail(ErrorCode::wrong_dimension, "map/polytope dimension mismatch");
    if (!phi.invertible()) fail(ErrorCode::singular_map, "image under a singular map");
    std::vector<Vector> verts;
    verts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) verts.push_back(phi.apply(v));
    std::sort(verts.begin(), verts.end(), LexLess{});
    const LinearMap inv_t = phi.transpose_inverse();
    std::vector<Halfspace> facets;
    facets.reserve(p.facets().size());
    for (const auto& f : p.facets()) facets.push_back(canonical_halfspace(inv_t.apply(f.normal), f.offset));
    std::sort(facets.begin(), facets.end(), halfspace_less);
    return Polytope(p.dim(), std::move(verts), std::move(facets));
}

Polytope clip(const Polytope& p, const Halfspace& h_raw) {
    const int dim = p.dim();
    if (h_raw.normal.size() != static_cast<std::size_t>(dim))
        fail(ErrorCode::wrong_dimension, "cut normal length does not match dimension");
    const Halfspace h = canonical_halfspace(h_raw.normal, h_raw.offset);
    std::vector<Rational> side;
    side.reserve(p.vertices().size());
    bool any_outside = false;
    for (const auto& v : p.vertices()) {
        side.push_back(dot(h.normal, v) - h.offset);
        any_outside = any_outside || side.back().sign() > 0;
    }
    if (!any_outside) return p;

    std::vector<Vector> verts;
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (side[i].sign() <= 0) verts.push_back(p.vertices()[i]);
    // New vertices sit where edges pierce the cut plane.
    for (const auto& [i, j] : edges(p)) {
        const auto si = static_cast<std::size_t>(i);
        const auto sj = static_cast<std::size_t>(j);
        if (side[si].sign() * side[sj].sign() >= 0) continue;
        const Rational t = -side[si] / (side[sj] - side[si]);
        verts.push_back(vec_add(p.vertices()[si],
                                vec_scale(t, vec_sub(p.vertices()[sj], p.vertices()[si]))));
    }
    verts = dedupe_sorted(std::move(verts));
    if (verts.size() < static_cast<std::size_t>(dim) + 1 || affine_rank(verts) != dim)
        fail(ErrorCode::empty_or_degenerate_intersection,
             "cut leaves nothing full-dimensional");

    std::vector<Halfspace> candidates = p.facets();
    candidates.push_back(h);
    std::sort(candidates.begin(), candidates.end(), halfspace_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Halfspace> facets;
    for (const auto& c : candidates) {
        std::vector<Vector> act;
        for (const auto& v : verts)
            if (dot(c.normal, v) == c.offset) act.push_back(v);
        if (act.size() >= static_cast<std::size_t>(dim) && affine_rank(act) == dim - 1)
            facets.push_back(c);
    }
    return Polytope(dim, std::move(verts), std::move(facets));
}

Polytope intersect(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) fail(ErrorCode::wrong_dimension, "intersecting polytopes of different dimensions");
    Polytope r = p;
    for (const auto& h : q.facets()) r = clip(r, h);
    return r;
}

Polytope union_if_convex(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) fail(ErrorCode::wrong_dimension, "union of polytopes of different dimensions");
    std::vector<Vector> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    Polytope hull = Polytope::from_points(p.dim(), pts);
    Rational inter_vol = 0;
    try {
        inter_vol = volume(intersect(p, q));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::empty_or_degenerate_intersection) throw;
    }
    if (volume(hull) != volume(p) + volume(q) - inter_vol)
        fail(ErrorCode::non_convex_union, "set union is not convex (volume identity fails)");
    return hull;
}

Rational volume(const Polytope& p) {
    Rational v = 0;
    for (const auto& s : triangulate(p)) v += simplex_volume(s);
    return v;
}

std::vector<Simplex> triangulate(const Polytope& p) {
    // Cone from the first (lexicographically smallest) vertex over the
    // triangulations of the facets that do not contain it; the cached facet
    // list replaces a fresh enumeration.
    const Vector& apex = p.vertices().front();
    std::vector<Simplex> out;
    for (const auto& f : p.facets()) {
        if (dot(f.normal, apex) == f.offset) continue;
        for (const auto& cell : facet_triangulation_indices(p, f)) {
            Simplex s;
            s.vertices.reserve(cell.size() + 1);
            s.vertices.push_back(apex);
            for (int id : cell) s.vertices.push_back(p.vertices()[static_cast<std::size_t>(id)]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Simplex> triangulate_fan(const Polytope& p) {
    if (!contains_origin_interior(p))
        fail(ErrorCode::origin_not_interior, "fan triangulation needs the origin strictly inside");
    std::vector<Simplex> out;
    for (const auto& f : p.facets()) {
        for (const auto& cell : facet_triangulation_indices(p, f)) {
            Simplex s;
            s.vertices.reserve(cell.size() + 1);
            s.vertices.push_back(zero_vector(p.dim()));
            for (int id : cell) s.vertices.push_back(p.vertices()[static_cast<std::size_t>(id)]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::pair<Polytope, Polytope> split_by_slab(const Polytope& p, const Vector& direction,
                                            const Rational& lo, const Rational& hi) {
    if (direction.size() != static_cast<std::size_t>(p.dim()))
        fail(ErrorCode::wrong_dimension, "slab direction length does not match dimension");
    if (vec_is_zero(direction)) fail(ErrorCode::invalid_slab, "slab direction must be nonzero");
    if (!(lo < Rational(0) && Rational(0) < hi)) fail(ErrorCode::invalid_slab, "need lo < 0 < hi");
    Rational mn = dot(direction, p.vertices().front());
    Rational mx = mn;
    for (const auto& v : p.vertices()) {
        const Rational d = dot(direction, v);
        if (d < mn) mn = d;
        if (d > mx) mx = d;
    }
    if (!(mn < lo) || !(hi < mx))
        fail(ErrorCode::invalid_slab, "cut plane misses the interior of the polytope");

    Polytope k = clip(p, Halfspace{direction, hi});
    Polytope l = clip(p, Halfspace{vec_neg(direction), -lo});

    Polytope band = [&] {
        try {
            return intersect(k, l);
        } catch (const Error&) {
            fail(ErrorCode::invalid_slab, "slab overlap K cap L is not full-dimensional");
        }
    }();
    if (!contains_origin_interior(p) || !contains_origin_interior(k) ||
        !contains_origin_interior(l) || !contains_origin_interior(band))
        fail(ErrorCode::invalid_slab, "a slab piece loses the origin from its interior");
    return {std::move(k), std::move(l)};
}

std::vector<std::pair<int, int>> edges(const Polytope& p) {
    const int n = p.dim();
    std::vector<std::pair<int, int>> out;
    const auto& verts = p.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            std::vector<Vector> normals;
            for (const auto& f : p.facets())
                if (dot(f.normal, verts[i]) == f.offset && dot(f.normal, verts[j]) == f.offset)
                    normals.push_back(f.normal);
            if (normals.size() >= static_cast<std::size_t>(n) - 1 &&
                rank_of_rows(std::move(normals)) == n - 1)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

Polytope cross_section_last_zero(const Polytope& p) {
    const int n = p.dim();
    if (n < 2) fail(ErrorCode::wrong_dimension, "cross-section needs dimension >= 2");
    const std::size_t last = static_cast<std::size_t>(n) - 1;
    std::vector<Vector> pts;
    for (const auto& v : p.vertices())
        if (v[last].is_zero()) pts.push_back(Vector(v.begin(), v.end() - 1));
    for (const auto& [i, j] : edges(p)) {
        const Vector& a = p.vertices()[static_cast<std::size_t>(i)];
        const Vector& b = p.vertices()[static_cast<std::size_t>(j)];
        if (a[last].sign() * b[last].sign() >= 0) continue;
        const Rational t = -a[last] / (b[last] - a[last]);
        Vector x = vec_add(a, vec_scale(t, vec_sub(b, a)));
        pts.push_back(Vector(x.begin(), x.end() - 1));
    }
    return Polytope::from_points(n - 1, pts);
}

Polytope make_cube(int dim, const Rational& scale) {
    if (scale.sign() <= 0) fail(ErrorCode::invalid_configuration, "cube scale must be positive");
    std::vector<Vector> pts;
    pts.reserve(1u << dim);
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        Vector v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? scale : -scale;
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(dim, pts);
}

Polytope make_cross_polytope(int dim, const Rational& scale) {
    if (scale.sign() <= 0) fail(ErrorCode::invalid_configuration, "cross-polytope scale must be positive");
    std::vector<Vector> pts;
    pts.reserve(2 * static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        pts.push_back(vec_scale(scale, unit_vector(dim, i)));
        pts.push_back(vec_scale(-scale, unit_vector(dim, i)));
    }
    return Polytope::from_points(dim, pts);
}

Polytope make_segment(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) fail(ErrorCode::degenerate_input, "segment needs lo < hi");
    return Polytope::from_points(1, {Vector{lo}, Vector{hi}});
}

} // namespace vlab

#pragma once

#include <utility>
#include <vector>

#include "vlab/linalg.hpp"

namespace vlab {

/// Closed halfspace { x : normal . x <= offset }, normal != 0.
/// Canonical form scales (normal, offset) to coprime integers, orientation kept.
struct Halfspace {
    Vector normal;
    Rational offset;

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.offset == b.offset && a.normal == b.normal;
    }
};

Halfspace canonical_halfspace(Vector normal, Rational offset);

/// n+1 affinely independent points spanning an n-simplex.
struct Simplex {
    std::vector<Vector> vertices;
};

Rational simplex_volume(const Simplex& s);

/// Full-dimensional convex polytope.
///
/// Vertices are exactly the extreme points, stored in lexicographic order, so
/// equality is a sequence comparison. The irredundant H-representation is
/// computed at construction; instances are immutable afterwards, which makes
/// every operation in this header safe to call concurrently.
class Polytope {
public:
    /// Convex hull of arbitrary points; non-extreme points are discarded.
    /// DegenerateInput unless the points affinely span R^dim.
    static Polytope from_points(int dim, const std::vector<Vector>& points);

    /// Vertex enumeration of an intersection of halfspaces. The halfspaces
    /// must describe a bounded set; EmptyOrDegenerateIntersection when the
    /// feasible region is empty or not full-dimensional.
    static Polytope from_halfspaces(int dim, const std::vector<Halfspace>& halfspaces);

    int dim() const { return dim_; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    Polytope(int dim, std::vector<Vector> vertices, std::vector<Halfspace> facets)
        : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

    // Construct directly from data that is canonical by exact duality or
    // incidence arguments.
    friend Polytope polar(const Polytope& p);
    friend Polytope apply_linear_map(const LinearMap& phi, const Polytope& p);
    friend Polytope clip(const Polytope& p, const Halfspace& h);

    int dim_;
    std::vector<Vector> vertices_;
    std::vector<Halfspace> facets_;
};

Polytope convex_hull(int dim, const std::vector<Vector>& points);
bool polytope_equal(const Polytope& a, const Polytope& b);

/// P cut by one halfspace. Kept vertices plus edge crossings form the new
/// vertex set; the new facet list is filtered from the old one plus the cut.
/// Returns P unchanged when the cut is redundant; EmptyOrDegenerateIntersection
/// when nothing full-dimensional remains.
Polytope clip(const Polytope& p, const Halfspace& h);
bool point_in_polytope(const Polytope& p, const Vector& x);
bool contains_origin_interior(const Polytope& p);

/// Polar body P* = { y : v . y <= 1 for all vertices v }; OriginNotInterior
/// when 0 is not strictly inside (the polar would be unbounded).
Polytope polar(const Polytope& p);

/// Image { phi v : v vertex }; SingularMap when det phi = 0.
Polytope apply_linear_map(const LinearMap& phi, const Polytope& p);

Polytope intersect(const Polytope& p, const Polytope& q);

/// Hull of both vertex sets, returned only when it equals the set union,
/// decided exactly through vol(hull) = vol(P) + vol(Q) - vol(P cap Q).
/// NonConvexUnion otherwise.
Polytope union_if_convex(const Polytope& p, const Polytope& q);

/// Exact Lebesgue volume.
Rational volume(const Polytope& p);

/// Deterministic simplex cover: recursive cone from the lexicographically
/// smallest vertex over non-incident facets. Interiors are pairwise disjoint
/// and volumes add up to volume(p). Works for any full-dimensional polytope.
std::vector<Simplex> triangulate(const Polytope& p);

/// Fan from the origin over each facet's triangulation (facets fanned from
/// their lexicographically smallest vertex). OriginNotInterior when invalid.
std::vector<Simplex> triangulate_fan(const Polytope& p);

/// K = P cap {d.x <= hi}, L = P cap {d.x >= lo} with lo < 0 < hi.
/// InvalidSlab unless both cut planes meet the interior and all of
/// K, L, K cup L = P, K cap L contain the origin in their interiors.
std::pair<Polytope, Polytope> split_by_slab(const Polytope& p, const Vector& direction,
                                            const Rational& lo, const Rational& hi);

/// Vertex index pairs forming edges (1-faces).
std::vector<std::pair<int, int>> edges(const Polytope& p);

/// Section P cap { x_n = 0 } as an (n-1)-dimensional polytope (last
/// coordinate dropped). DegenerateInput when the section is not
/// full-dimensional inside the hyperplane.
Polytope cross_section_last_zero(const Polytope& p);

// Structured families used throughout tests, generators and fitters.
Polytope make_cube(int dim, const Rational& scale = Rational(1));
Polytope make_cross_polytope(int dim, const Rational& scale = Rational(1));
Polytope make_segment(const Rational& lo, const Rational& hi);

} // namespace vlab

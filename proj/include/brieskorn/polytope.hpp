#ifndef BRIESKORN_POLYTOPE_HPP
#define BRIESKORN_POLYTOPE_HPP

#include "brieskorn/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace brieskorn {

/// Lattice point or exponent vector. std::vector's operator< is the
/// lexicographic order used for every deterministic listing.
using Point = std::vector<std::int64_t>;
using Covector = std::vector<Rational>;

Rational pairing(const Covector& form, const Point& m);

/// Facet of a polytope with the origin in its interior, with supporting
/// form normalized so that L == 1 on the facet and L < 1 on other vertices.
struct Facet {
    Covector supporting_form;
    std::vector<std::size_t> vertex_indices;
};

/// Affine half-space normal . x <= offset bounding a full-dimensional point
/// set; `normal` is a primitive integer vector.
struct AffineFacet {
    Point normal;
    std::int64_t offset = 0;
    std::vector<std::size_t> point_indices;
};

/// Facets of conv(points) by enumeration of affinely independent subsets.
/// Requires the points to be full dimensional in Z^dim.
std::vector<AffineFacet> affine_facets(std::span<const Point> points, std::size_t dim);

bool is_full_dimensional(std::span<const Point> points, std::size_t dim);

/// Full-dimensional lattice polytope given by its vertices. Immutable.
class LatticePolytope {
public:
    /// Every point must be a vertex of the hull; order is preserved since
    /// coefficient files address vertices by position.
    static LatticePolytope from_vertices(std::size_t dim, std::vector<Point> vertices);
    /// Convex hull of arbitrary points; vertices come out lexicographically sorted.
    static LatticePolytope hull(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    std::optional<std::size_t> vertex_index(const Point& p) const;

    bool origin_interior() const noexcept { return origin_interior_; }

    /// Normalized facets, ordered lexicographically by supporting form.
    /// Throws OriginNotInterior.
    const std::vector<Facet>& facets() const;
    const std::vector<AffineFacet>& affine_facets() const noexcept { return affine_; }

    /// max over facets of L(m), the Newton degree of x^m. Throws OriginNotInterior.
    Rational degree(const Point& m) const;

    bool operator==(const LatticePolytope& other) const;

private:
    LatticePolytope(std::size_t dim, std::vector<Point> vertices, std::vector<AffineFacet> affine);

    std::size_t dim_ = 0;
    std::vector<Point> vertices_;
    std::vector<AffineFacet> affine_;
    std::vector<Facet> facets_;
    bool origin_interior_ = false;
};

std::vector<Facet> facets(const LatticePolytope& p);

/// {y : <y, x> >= -1 on P}. Throws OriginNotInterior, NotReflexive.
LatticePolytope dual_polytope(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);
bool is_simplicial(const LatticePolytope& p);
bool is_smooth(const LatticePolytope& p);

/// Lattice points m with max_sigma L_sigma(m) <= d, in lexicographic order.
std::vector<Point> lattice_points(const LatticePolytope& p, const Rational& d);

/// n! vol(P) via a pulling triangulation.
std::int64_t normalized_volume(const LatticePolytope& p);

/// Maximal simplices of a pulling triangulation, as vertex index tuples.
std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p);

/// h-vector (h_0..h_n) of the boundary complex. Throws NotSimplicial,
/// OriginNotInterior.
std::vector<std::int64_t> h_vector(const LatticePolytope& p);

/// Face counts f_{-1}, f_0, ..., f_{n-1} of the boundary complex of a
/// simplicial polytope.
std::vector<std::int64_t> f_vector(const LatticePolytope& p);

}  // namespace brieskorn

#endif

#include "brieskorn/polytope.hpp"

#include "brieskorn/error.hpp"
#include "brieskorn/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace brieskorn {

Rational pairing(const Covector& form, const Point& m) {
    Rational acc = 0;
    for (std::size_t i = 0; i < form.size(); ++i) acc += form[i] * m[i];
    return acc;
}

namespace {

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::int64_t dot(const Point& a, const Point& b) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Scales a rational vector to the primitive integer vector on the same ray.
Point primitive(const std::vector<Rational>& v) {
    Integer den = lcm_of_denominators(v);
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Rational scaled = x * den;
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    Point out;
    out.reserve(v.size());
    for (auto& x : ints) {
        if (g != 0) x /= g;
        out.push_back(x.get_si());
    }
    return out;
}

void check_points(std::span<const Point> points, std::size_t dim) {
    if (dim == 0) fail(ErrorCode::MalformedInput, "polytope dimension must be positive");
    if (points.empty()) fail(ErrorCode::MalformedInput, "polytope has no vertices");
    for (const auto& p : points) {
        if (p.size() != dim) {
            fail(ErrorCode::MalformedInput, "point " + point_str(p) + " does not have " + std::to_string(dim) + " coordinates");
        }
    }
    if (!is_full_dimensional(points, dim)) {
        fail(ErrorCode::NotFullDimensional, "points do not span a " + std::to_string(dim) + "-dimensional polytope");
    }
}

// A point of the set is a vertex iff the facets through it have normals of full rank.
bool is_vertex(const std::vector<AffineFacet>& facets, std::size_t index, std::size_t dim) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : facets) {
        if (std::binary_search(f.point_indices.begin(), f.point_indices.end(), index)) {
            rows.emplace_back(f.normal.begin(), f.normal.end());
        }
    }
    return ReducedSpan(dim, std::move(rows)).rank() == dim;
}

}  // namespace

bool is_full_dimensional(std::span<const Point> points, std::size_t dim) {
    if (points.empty()) return false;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> r(dim);
        for (std::size_t c = 0; c < dim; ++c) r[c] = points[i][c] - points[0][c];
        rows.push_back(std::move(r));
    }
    return ReducedSpan(dim, std::move(rows)).rank() == dim;
}

std::vector<AffineFacet> affine_facets(std::span<const Point> points, std::size_t dim) {
    std::set<Point> seen;
    std::vector<AffineFacet> out;
    for_each_combination(points.size(), dim, [&](const std::vector<std::size_t>& subset) {
        const Point& base = points[subset[0]];
        Matrix diffs(dim - 1, dim);
        for (std::size_t r = 1; r < subset.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) diffs(r - 1, c) = points[subset[r]][c] - base[c];
        auto kernel = kernel_line(diffs);
        if (kernel.empty()) return;

        Point normal = primitive(kernel);
        std::int64_t offset = dot(normal, base);
        bool above = false;
        bool below = false;
        for (const auto& p : points) {
            const std::int64_t s = dot(normal, p) - offset;
            above = above || s > 0;
            below = below || s < 0;
        }
        if (above && below) return;
        if (above) {
            for (auto& x : normal) x = -x;
            offset = -offset;
        }
        if (!seen.insert(normal).second) return;

        AffineFacet facet{normal, offset, {}};
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (dot(normal, points[j]) == offset) facet.point_indices.push_back(j);
        }
        out.push_back(std::move(facet));
    });
    std::sort(out.begin(), out.end(), [](const AffineFacet& a, const AffineFacet& b) { return a.normal < b.normal; });
    return out;
}

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Point> vertices, std::vector<AffineFacet> affine)
    : dim_(dim), vertices_(std::move(vertices)), affine_(std::move(affine)) {
    origin_interior_ = std::all_of(affine_.begin(), affine_.end(), [](const AffineFacet& f) { return f.offset > 0; });
    if (!origin_interior_) return;
    facets_.reserve(affine_.size());
    for (const auto& a : affine_) {
        Facet f;
        f.supporting_form.reserve(dim_);
        for (auto c : a.normal) f.supporting_form.push_back(Rational(c, a.offset));
        for (auto& c : f.supporting_form) c.canonicalize();
        f.vertex_indices = a.point_indices;
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return a.supporting_form < b.supporting_form; });
}

LatticePolytope LatticePolytope::from_vertices(std::size_t dim, std::vector<Point> vertices) {
    check_points(vertices, dim);
    std::set<Point> unique(vertices.begin(), vertices.end());
    if (unique.size() != vertices.size()) fail(ErrorCode::MalformedInput, "duplicate vertex in vertex list");

    auto affine = brieskorn::affine_facets(vertices, dim);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!is_vertex(affine, i, dim)) {
            fail(ErrorCode::NotAVertex, "point " + point_str(vertices[i]) + " is not a vertex of the convex hull");
        }
    }
    return LatticePolytope(dim, std::move(vertices), std::move(affine));
}

LatticePolytope LatticePolytope::hull(std::size_t dim, std::vector<Point> points) {
    check_points(points, dim);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const auto affine = brieskorn::affine_facets(points, dim);
    std::vector<Point> verts;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (is_vertex(affine, i, dim)) verts.push_back(points[i]);
    }
    auto vertex_facets = brieskorn::affine_facets(verts, dim);
    return LatticePolytope(dim, std::move(verts), std::move(vertex_facets));
}

std::optional<std::size_t> LatticePolytope::vertex_index(const Point& p) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

const std::vector<Facet>& LatticePolytope::facets() const {
    if (!origin_interior_) fail(ErrorCode::OriginNotInterior, "the origin is not in the interior of the polytope");
    return facets_;
}

Rational LatticePolytope::degree(const Point& m) const {
    const auto& fs = facets();
    Rational best = pairing(fs.front().supporting_form, m);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        Rational v = pairing(fs[i].supporting_form, m);
        if (v > best) best = std::move(v);
    }
    return best;
}

bool LatticePolytope::operator==(const LatticePolytope& other) const {
    if (dim_ != other.dim_) return false;
    std::set<Point> a(vertices_.begin(), vertices_.end());
    std::set<Point> b(other.vertices_.begin(), other.vertices_.end());
    return a == b;
}

std::vector<Facet> facets(const LatticePolytope& p) { return p.facets(); }

LatticePolytope dual_polytope(const LatticePolytope& p) {
    std::vector<Point> verts;
    for (const auto& f : p.facets()) {
        Point v;
        for (const auto& c : f.supporting_form) {
            if (!is_integer(c)) fail(ErrorCode::NotReflexive, "dual vertex has non-integral coordinate " + to_string(c));
            v.push_back(-c.get_num().get_si());
        }
        verts.push_back(std::move(v));
    }
    return LatticePolytope::from_vertices(p.dim(), std::move(verts));
}

bool is_reflexive(const LatticePolytope& p) {
    if (!p.origin_interior()) return false;
    for (const auto& f : p.facets())
        for (const auto& c : f.supporting_form)
            if (!is_integer(c)) return false;
    return true;
}

bool is_simplicial(const LatticePolytope& p) {
    return std::all_of(p.affine_facets().begin(), p.affine_facets().end(),
                       [&](const AffineFacet& f) { return f.point_indices.size() == p.dim(); });
}

bool is_smooth(const LatticePolytope& p) {
    if (!p.origin_interior() || !is_simplicial(p)) return false;
    for (const auto& f : p.facets()) {
        Matrix m(p.dim(), p.dim());
        for (std::size_t r = 0; r < p.dim(); ++r)
            for (std::size_t c = 0; c < p.dim(); ++c) m(r, c) = p.vertices()[f.vertex_indices[r]][c];
        if (abs(determinant(std::move(m))) != 1) return false;
    }
    return true;
}

std::vector<Point> lattice_points(const LatticePolytope& p, const Rational& d) {
    std::vector<Point> out;
    if (d < 0) return out;
    const std::size_t n = p.dim();
    Point lo(n), hi(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::int64_t mn = p.vertices()[0][c], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = to_int64(floor(d * mn));
        hi[c] = to_int64(ceil(d * mx));
    }
    Point m = lo;
    while (true) {
        if (p.degree(m) <= d) out.push_back(m);
        std::size_t c = n;
        while (c > 0) {
            --c;
            if (m[c] < hi[c]) {
                ++m[c];
                break;
            }
            m[c] = lo[c];
            if (c == 0) return out;
        }
    }
}

namespace {

void pull(const std::vector<Point>& pts, std::size_t k, const std::vector<std::size_t>& ids,
          std::vector<std::vector<std::size_t>>& out) {
    if (pts.size() == k + 1) {
        out.push_back(ids);
        return;
    }
    for (const auto& facet : affine_facets(pts, k)) {
        if (facet.point_indices.front() == 0) continue;  // facet contains the apex

        std::size_t drop = 0;
        while (facet.normal[drop] == 0) ++drop;
        std::vector<Point> sub;
        std::vector<std::size_t> sub_ids;
        for (auto j : facet.point_indices) {
            Point q;
            for (std::size_t c = 0; c < k; ++c)
                if (c != drop) q.push_back(pts[j][c]);
            sub.push_back(std::move(q));
            sub_ids.push_back(ids[j]);
        }
        std::vector<std::vector<std::size_t>> cells;
        pull(sub, k - 1, sub_ids, cells);
        for (auto& cell : cells) {
            cell.insert(cell.begin(), ids[0]);
            out.push_back(std::move(cell));
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p) {
    std::vector<std::size_t> ids(p.vertices().size());
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    pull(p.vertices(), p.dim(), ids, out);
    return out;
}

std::int64_t normalized_volume(const LatticePolytope& p) {
    const std::size_t n = p.dim();
    Rational total = 0;
    for (const auto& cell : pulling_triangulation(p)) {
        Matrix m(n, n);
        const Point& base = p.vertices()[cell[0]];
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = p.vertices()[cell[r]][c] - base[c];
        total += abs(determinant(std::move(m)));
    }
    return to_int64(total);
}

std::vector<std::int64_t> f_vector(const LatticePolytope& p) {
    if (!is_simplicial(p)) fail(ErrorCode::NotSimplicial, "polytope has a non-simplex facet");
    const std::size_t n = p.dim();
    std::set<std::vector<std::size_t>> faces;
    for (const auto& facet : p.affine_facets()) {
        const auto& vs = facet.point_indices;
        for (std::size_t k = 1; k <= n; ++k) {
            for_each_combination(n, k, [&](const std::vector<std::size_t>& sub) {
                std::vector<std::size_t> face;
                for (auto i : sub) face.push_back(vs[i]);
                faces.insert(std::move(face));
            });
        }
    }
    std::vector<std::int64_t> f(n + 1, 0);
    f[0] = 1;
    for (const auto& face : faces) ++f[face.size()];
    return f;
}

std::vector<std::int64_t> h_vector(const LatticePolytope& p) {
    const auto f = f_vector(p);
    const auto n = static_cast<std::int64_t>(p.dim());
    auto binom = [](std::int64_t a, std::int64_t b) {
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return r.get_si();
    };
    std::vector<std::int64_t> h(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t k = 0; k <= n; ++k) {
        std::int64_t acc = 0;
        for (std::int64_t i = 0; i <= k; ++i) {
            const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
            acc += sign * binom(n - i, k - i) * f[static_cast<std::size_t>(i)];
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

}  // namespace brieskorn

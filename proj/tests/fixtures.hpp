// Shared test data and brute-force oracles. The oracles use plain integer
// or mpq arithmetic and never call into the library.
#ifndef BRIESKORN_TESTS_FIXTURES_HPP
#define BRIESKORN_TESTS_FIXTURES_HPP

#include "brieskorn/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using brieskorn::Point;

struct CorpusEntry {
    std::string name;
    std::size_t dim;
    std::vector<Point> vertices;
    std::size_t mu;
    std::vector<std::int64_t> h_vector;  // empty when not checked
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"p1", 1, {{1}, {-1}}, 2, {1, 1}},
        {"p2", 2, {{1, 0}, {0, 1}, {-1, -1}}, 3, {1, 1, 1}},
        {"p3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, 4, {1, 1, 1, 1}},
        {"p1xp1", 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 4, {1, 2, 1}},
        {"p1xp1xp1", 3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, 8, {1, 3, 3, 1}},
        {"dp6", 2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}, 6, {1, 4, 1}},
    };
    return entries;
}

inline brieskorn::LatticePolytope make(const CorpusEntry& e) {
    return brieskorn::LatticePolytope::from_vertices(e.dim, e.vertices);
}

// Cofactor expansion; fine for the small sizes used here.
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const std::int64_t term = m[0][c] * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// Facets of a simplicial polytope with 0 in its interior: n-subsets S whose
// affine hull leaves every other vertex strictly on the side of the origin.
// Sides are read off det(s_1 - s_0, ..., s_{n-1} - s_0, w - s_0).
inline std::vector<std::vector<std::size_t>> simplicial_facets(const std::vector<Point>& verts, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : subsets(verts.size(), n)) {
        auto side = [&](const Point& w) {
            std::vector<std::vector<std::int64_t>> m;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<std::int64_t> row;
                for (std::size_t k = 0; k < n; ++k) row.push_back(verts[s[i]][k] - verts[s[0]][k]);
                m.push_back(row);
            }
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k) row.push_back(w[k] - verts[s[0]][k]);
            m.push_back(row);
            return det(m);
        };
        const Point origin(n, 0);
        const std::int64_t o = side(origin);
        if (o == 0) continue;
        bool ok = true;
        for (std::size_t j = 0; j < verts.size() && ok; ++j) {
            if (std::find(s.begin(), s.end(), j) != s.end()) continue;
            const std::int64_t v = side(verts[j]);
            if (v == 0 || (v > 0) != (o > 0)) ok = false;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

// Sum of |det| over the cones from the origin on each facet.
inline std::int64_t star_volume(const std::vector<Point>& verts, std::size_t n) {
    std::int64_t vol = 0;
    for (const auto& f : simplicial_facets(verts, n)) {
        std::vector<std::vector<std::int64_t>> m;
        for (auto i : f) m.emplace_back(verts[i].begin(), verts[i].end());
        vol += std::llabs(det(m));
    }
    return vol;
}

// f_{-1}, f_0, ..., f_{n-1} by counting distinct subsets of facet vertex sets.
inline std::vector<std::int64_t> face_counts(const std::vector<Point>& verts, std::size_t n) {
    const auto fs = simplicial_facets(verts, n);
    std::vector<std::int64_t> f(n + 1, 0);
    f[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<std::vector<std::size_t>> faces;
        for (const auto& facet : fs)
            for (const auto& sub : subsets(n, k)) {
                std::vector<std::size_t> face;
                for (auto i : sub) face.push_back(facet[i]);
                faces.insert(face);
            }
        f[k] = static_cast<std::int64_t>(faces.size());
    }
    return f;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h_k = sum_i (-1)^(k-i) C(n-i, k-i) f_{i-1}.
inline std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, std::size_t n) {
    std::vector<std::int64_t> h(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            const std::int64_t term = binom(static_cast<std::int64_t>(n - i), static_cast<std::int64_t>(k - i)) * f[i];
            h[k] += ((k - i) % 2 == 0) ? term : -term;
        }
    return h;
}

// Rank by plain Gaussian elimination over mpq, for checking rank data.
inline std::size_t rank_oracle(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const mpq_class t = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= t * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace fixtures

#endif

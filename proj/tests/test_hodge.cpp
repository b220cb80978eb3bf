#include "fixtures.hpp"

#include "brieskorn/error.hpp"
#include "brieskorn/hodge.hpp"
#include "brieskorn/jacobian.hpp"
#include "brieskorn/laurent.hpp"

#include <doctest.h>

#include <numeric>

using namespace brieskorn;

namespace {

// Block-diagonal nilpotent with the given Jordan block sizes, conjugated by a
// unitriangular matrix so the blocks are not visible in the entries.
Matrix jordan_matrix(const std::vector<std::size_t>& sizes) {
    const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    Matrix j(n, n);
    std::size_t at = 0;
    for (auto s : sizes) {
        for (std::size_t i = 1; i < s; ++i) j(at + i, at + i - 1) = 1;
        at += s;
    }
    Matrix l = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) l(r, c) = static_cast<long>((r * 7 + c * 3) % 5) - 2;
    // inverse of a unit lower triangular matrix by forward substitution
    Matrix inv = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            Rational s = 0;
            for (std::size_t k = c; k < r; ++k) s += l(r, k) * inv(k, c);
            inv(r, c) = -s;
        }
    REQUIRE(l * inv == Matrix::identity(n));
    return l * j * inv;
}

std::vector<std::vector<mpq_class>> rows_of(const Matrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

// Weight dims from rank(N^l) alone: blocks of size exactly s number
// r_{s-1} - 2 r_s + r_{s+1}.
std::map<int, std::size_t> weights_from_ranks(const Matrix& n, int center) {
    const std::size_t dim = n.rows();
    std::vector<long> r(dim + 2, 0);
    Matrix pw = Matrix::identity(dim);
    for (std::size_t l = 0; l <= dim + 1; ++l) {
        r[l] = static_cast<long>(fixtures::rank_oracle(rows_of(pw)));
        pw = pw * n;
    }
    std::map<int, std::size_t> out;
    for (std::size_t s = 1; s <= dim; ++s) {
        const long count = r[s - 1] - 2 * r[s] + r[s + 1];
        for (long b = 0; b < count; ++b)
            for (std::size_t j = 0; j < s; ++j) out[center - static_cast<int>(s) + 1 + 2 * static_cast<int>(j)]++;
    }
    return out;
}

GradedJacobianRing build(const LatticePolytope& p, const LaurentPolynomial& f, bool assume = false) {
    return build_graded_jacobian(f, p, apply_nondegeneracy_policy(certify_nondegenerate(f), f, assume));
}

}  // namespace

TEST_CASE("single Jordan block") {
    for (std::size_t s = 1; s <= 5; ++s) {
        CAPTURE(s);
        const auto w = weight_filtration(jordan_matrix({s}), 4);
        CHECK(w.jordan_type == std::vector<std::size_t>{s});
        std::map<int, std::size_t> expected;
        for (std::size_t j = 0; j < s; ++j) expected[4 - static_cast<int>(s) + 1 + 2 * static_cast<int>(j)] = 1;
        CHECK(w.graded_dims == expected);
    }
}

TEST_CASE("zero operator puts everything at the center") {
    const auto w = weight_filtration(Matrix(4, 4), 3);
    CHECK(w.graded_dims == std::map<int, std::size_t>{{3, 4}});
    CHECK(w.jordan_type == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("mixed Jordan types add up") {
    const std::vector<std::vector<std::size_t>> types = {{3, 1}, {4, 2, 2}, {2, 2, 1, 1}, {5, 3, 1}, {3, 3, 3}};
    for (const auto& t : types) {
        const Matrix n = jordan_matrix(t);
        for (int center : {2, 3}) {
            const auto w = weight_filtration(n, center);
            CHECK(w.jordan_type == t);
            CHECK(w.graded_dims == weights_from_ranks(n, center));
            std::map<int, std::size_t> sum;
            for (auto s : t)
                for (const auto& [k, v] : weight_filtration(jordan_matrix({s}), center).graded_dims) sum[k] += v;
            CHECK(w.graded_dims == sum);
        }
    }
}

TEST_CASE("non-nilpotent input is rejected") {
    Matrix m = Matrix::identity(2);
    try {
        jordan_type(m);
        FAIL("identity accepted as nilpotent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNilpotent);
    }
}

TEST_CASE("corpus spectra and Lefschetz") {
    for (const auto& e : fixtures::corpus()) {
        CAPTURE(e.name);
        const auto p = fixtures::make(e);
        const auto ring = build(p, vertex_polynomial(p));
        const auto s = spectrum(ring);
        CHECK(s.integral());
        CHECK(s.total() == e.mu);
        REQUIRE(s.pairs.size() == e.dim + 1);
        for (std::size_t d = 0; d <= e.dim; ++d) {
            CHECK(s.pairs[d].degree == static_cast<long>(d));
            CHECK(static_cast<std::int64_t>(s.pairs[d].multiplicity) == e.h_vector[d]);
        }
        const auto hl = lefschetz_check(ring);
        CHECK(hl.pass);
        CHECK(hl.verdicts.size() == e.dim / 2 + 1);
        const auto ht = hodge_tate_check(ring);
        CHECK(ht.via_lefschetz);
        CHECK(ht.via_dims);
        const auto h = irregular_hodge_numbers(ring);
        CHECK(h.unipotent);
        for (std::size_t q = 0; q <= e.dim; ++q) {
            const int pp = static_cast<int>(e.dim - q);
            CHECK(static_cast<std::int64_t>(h.at(pp, static_cast<int>(q))) == e.h_vector[q]);
        }
    }
}

TEST_CASE("non-integral sector") {
    const auto p = LatticePolytope::from_vertices(1, {{2}, {-1}});
    const auto ring = build(p, vertex_polynomial(p));
    const auto s = spectrum(ring);
    CHECK(!s.integral());
    const auto h = irregular_hodge_numbers(ring);
    CHECK(!h.unipotent);
    CHECK(h.at(1, 0, Rational(1, 2)) == 1);
    const auto ht = hodge_tate_check(ring);
    REQUIRE(ht.sectors.size() == 2);
    CHECK(ht.sectors[1].alpha == Rational(1, 2));
    CHECK(ht.sectors[1].center == 0);
    CHECK(ht.via_lefschetz == ht.via_dims);

    const auto report = kkp_report(p);
    CHECK(!report.kkp_equality.has_value());
    CHECK(!report.h_vector_match.has_value());
}

TEST_CASE("failing verdict on a non-simplicial polytope") {
    const auto c = LatticePolytope::from_vertices(3, {{1, 1, 1},
                                                      {1, 1, -1},
                                                      {1, -1, 1},
                                                      {1, -1, -1},
                                                      {-1, 1, 1},
                                                      {-1, 1, -1},
                                                      {-1, -1, 1},
                                                      {-1, -1, -1}});
    const auto f = vertex_polynomial(c, std::vector<Rational>{1, 2, 3, 5, 7, 11, 13, -17});
    const auto ring = build(c, f, true);
    const auto ht = hodge_tate_check(ring);
    CHECK(!ht.via_lefschetz);
    CHECK(!ht.via_dims);
}

TEST_CASE("coefficient sampler") {
    CoefficientSampler a(42), b(42), c(43);
    const auto x = a.draw(50);
    CHECK(x == b.draw(50));
    CHECK(x != c.draw(50));
    for (const auto& v : x) {
        CHECK(v != 0);
        CHECK(v >= -9);
        CHECK(v <= 9);
        CHECK(is_integer(v));
    }
}

TEST_CASE("kkp report fields") {
    const auto p = fixtures::make(fixtures::corpus()[1]);
    KKPOptions opts;
    opts.trials = 5;
    opts.seed = 11;
    const auto r = kkp_report(p, opts, "p2");
    CHECK(r.polytope_id == "p2");
    CHECK(r.mu == 3);
    REQUIRE(r.kkp_equality.has_value());
    CHECK(*r.kkp_equality);
    REQUIRE(r.h_vector_match.has_value());
    CHECK(*r.h_vector_match);
    CHECK(r.jordan_type == std::vector<std::size_t>{3});
    REQUIRE(r.constancy.has_value());
    CHECK(r.constancy->trials.size() == 5);
    CHECK(r.constancy->constant);
    CHECK(r.warnings.empty());

    const auto p112 = LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {-1, -2}});
    const auto r2 = kkp_report(p112);
    CHECK(!r2.h_vector_match.has_value());
    CHECK(!r2.warnings.empty());

    const auto boundary = LatticePolytope::from_vertices(1, {{0}, {1}});
    try {
        kkp_report(boundary);
        FAIL("boundary origin accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OriginNotInterior);
    }
}

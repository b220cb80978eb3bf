#include "fixtures.hpp"

#include "brieskorn/error.hpp"
#include "brieskorn/jacobian.hpp"
#include "brieskorn/laurent.hpp"

#include <doctest.h>

using namespace brieskorn;

namespace {

GradedJacobianRing build(const LatticePolytope& p, const LaurentPolynomial& f, bool assume = false) {
    return build_graded_jacobian(f, p, apply_nondegeneracy_policy(certify_nondegenerate(f), f, assume));
}

GradedJacobianRing build(const LatticePolytope& p) { return build(p, vertex_polynomial(p)); }

std::vector<std::size_t> integral_dims(const GradedJacobianRing& ring) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= ring.dim(); ++d) out.push_back(ring.dim_at(Rational(static_cast<long>(d))));
    return out;
}

LatticePolytope cube() {
    return LatticePolytope::from_vertices(3, {{1, 1, 1},
                                              {1, 1, -1},
                                              {1, -1, 1},
                                              {1, -1, -1},
                                              {-1, 1, 1},
                                              {-1, 1, -1},
                                              {-1, -1, 1},
                                              {-1, -1, -1}});
}

}  // namespace

TEST_CASE("graded strata") {
    const auto p = LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {-1, -1}});
    CHECK(graded_stratum(p, 0).size() == 1);
    CHECK(graded_stratum(p, 1).size() == 3);
    CHECK(graded_stratum(p, 2).size() == 6);
    CHECK(graded_stratum(p, Rational(1, 2)).empty());
}

TEST_CASE("corpus graded dimensions") {
    for (const auto& e : fixtures::corpus()) {
        CAPTURE(e.name);
        const auto p = fixtures::make(e);
        const auto ring = build(p);
        CHECK(ring.mu() == e.mu);
        CHECK(ring.normalized_volume() == static_cast<std::int64_t>(e.mu));
        std::vector<std::size_t> hv(e.h_vector.begin(), e.h_vector.end());
        CHECK(integral_dims(ring) == hv);
        for (const auto& [d, piece] : ring.pieces()) {
            CHECK(piece.dim() + piece.relation_rank() == piece.ambient_basis().size());
        }
    }
}

TEST_CASE("P1 by hand") {
    // f = 2x + 3/x, x f' = 2x - 3/x; A_1 = <x, 1/x> / <2x - 3/x>
    const auto p = LatticePolytope::from_vertices(1, {{1}, {-1}});
    const auto f = vertex_polynomial(p, std::vector<Rational>{2, 3});
    const auto ring = build(p, f);
    const auto* a1 = ring.piece(1);
    REQUIRE(a1 != nullptr);
    CHECK(a1->dim() == 1);
    CHECK(a1->quotient_basis() == std::vector<Point>{{1}});
    // 1/x = (2/3) x in the quotient
    const auto c = a1->coordinates(LaurentPolynomial::monomial({-1}, 1));
    CHECK(c == std::vector<Rational>{Rational(2, 3)});
    CHECK(a1->coordinates(log_derivative(f, 0)) == std::vector<Rational>{0});
}

TEST_CASE("non-integral spectrum segment") {
    const auto p = LatticePolytope::from_vertices(1, {{2}, {-1}});
    const auto ring = build(p);
    const auto dims = graded_dims(ring);
    CHECK(dims.at(0) == 1);
    CHECK(dims.at(Rational(1, 2)) == 1);
    CHECK(dims.at(1) == 1);
    CHECK(ring.mu() == 3);
}

TEST_CASE("operator blocks agree with multiplication by powers of f") {
    for (const auto& e : fixtures::corpus()) {
        CAPTURE(e.name);
        const auto p = fixtures::make(e);
        const auto f = vertex_polynomial(p, std::vector<Rational>(e.vertices.size(), Rational(2, 3)));
        const auto ring = build(p, f);
        const NilpotentOperator op(ring);
        for (const auto& d : ring.attained_degrees()) {
            for (unsigned l = 0; l <= e.dim + 1; ++l) {
                CAPTURE(l);
                CHECK(op.power_block(d, l) == multiplication_matrix(ring, pow(f, l), d, Rational(l)));
            }
        }
        const Matrix& total = op.total_matrix();
        CHECK(total.rows() == ring.mu());
        CHECK(power(total, static_cast<unsigned>(e.dim) + 1).is_zero());
        CHECK(!power(total, static_cast<unsigned>(e.dim)).is_zero());
    }
}

TEST_CASE("sectors") {
    const auto p = LatticePolytope::from_vertices(1, {{2}, {-1}});
    const auto ring = build(p);
    const NilpotentOperator op(ring);
    CHECK(op.sectors() == std::vector<Rational>{0, Rational(1, 2)});
    CHECK(op.sector_matrix(Rational(1, 2)).rows() == 1);
    CHECK(op.sector_matrix(0).rows() == 2);
    CHECK(op.sector_matrix(0)(1, 0) != 0);  // [f]: A_0 -> A_1 is nonzero
}

TEST_CASE("build preconditions") {
    const auto tri = LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {-1, -1}});
    const auto f = vertex_polynomial(tri);
    NondegeneracyCertificate rejected{CertificateStatus::Rejected, "test"};
    try {
        build_graded_jacobian(f, tri, rejected);
        FAIL("rejected certificate accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NondegeneracyUnverified);
    }
    const auto other = LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    try {
        build_graded_jacobian(f, other, certify_nondegenerate(f));
        FAIL("mismatched polytope accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("degenerate cube trips the dimension gate") {
    // a = 1 factors as (x + 1/x)(y + 1/y)(z + 1/z): singular on every square face
    const auto c = cube();
    const auto f = vertex_polynomial(c);
    try {
        build(c, f, true);
        FAIL("degenerate input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegeneracyDetected);
    }
    try {
        build(c, f, false);
        FAIL("uncertified input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NondegeneracyUnverified);
    }
}

TEST_CASE("generic cube passes the gate") {
    const auto c = cube();
    const auto f = vertex_polynomial(c, std::vector<Rational>{1, 2, 3, 5, 7, 11, 13, -17});
    const auto ring = build(c, f, true);
    CHECK(ring.mu() == 48);
    CHECK(integral_dims(ring) == std::vector<std::size_t>{1, 23, 23, 1});
}

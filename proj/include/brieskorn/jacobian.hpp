#ifndef BRIESKORN_JACOBIAN_HPP
#define BRIESKORN_JACOBIAN_HPP

#include "brieskorn/laurent.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/polytope.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace brieskorn {

/// One Newton-graded piece A_d of gr^N(Q[x,x^-1]/(x_i df/dx_i)).
///
/// The relation space at degree d is spanned by the degree-d parts of
/// g_i * x^m for m of degree d - 1. Coordinates are indexed by
/// `ambient_basis`; the quotient basis is the set of ambient monomials that
/// carry no pivot after reduced row echelon form in that order.
class GradedPiece {
public:
    GradedPiece(Rational degree, std::vector<Point> ambient_basis, Matrix relation_matrix);

    const Rational& degree() const noexcept { return degree_; }
    const std::vector<Point>& ambient_basis() const noexcept { return ambient_; }
    /// Columns are relations, rows follow ambient_basis.
    const Matrix& relation_matrix() const noexcept { return relations_; }
    std::size_t relation_rank() const noexcept { return span_.rank(); }
    const std::vector<Point>& quotient_basis() const noexcept { return quotient_; }
    std::size_t dim() const noexcept { return quotient_.size(); }

    /// Coordinates in the quotient basis of the class of a polynomial whose
    /// terms all lie in this stratum. Throws InvalidArgument otherwise.
    std::vector<Rational> coordinates(const LaurentPolynomial& homogeneous) const;

private:
    Rational degree_;
    std::vector<Point> ambient_;
    std::map<Point, std::size_t> index_;
    Matrix relations_;
    ReducedSpan span_;
    std::vector<std::size_t> free_;
    std::vector<Point> quotient_;
};

/// Newton-graded Jacobian ring of a convenient Laurent polynomial, the graded
/// model of G_0 / theta G_0. Pieces are stored for every attained degree in
/// [0, n]; zeroness of the degrees in (n, n+1] is checked during the build.
class GradedJacobianRing {
public:
    const LatticePolytope& polytope() const noexcept { return polytope_; }
    const LaurentPolynomial& polynomial() const noexcept { return f_; }
    const NondegeneracyCertificate& certificate() const noexcept { return cert_; }
    std::size_t dim() const noexcept { return polytope_.dim(); }

    /// Attained Newton degrees in [0, n], ascending.
    const std::vector<Rational>& attained_degrees() const noexcept { return degrees_; }
    const std::map<Rational, GradedPiece>& pieces() const noexcept { return pieces_; }
    /// Null if d is not an attained degree in [0, n].
    const GradedPiece* piece(const Rational& d) const;
    std::size_t dim_at(const Rational& d) const;
    std::size_t mu() const noexcept { return mu_; }
    std::int64_t normalized_volume() const noexcept { return volume_; }

private:
    friend GradedJacobianRing build_graded_jacobian(const LaurentPolynomial&, const LatticePolytope&,
                                                    const NondegeneracyCertificate&);
    GradedJacobianRing(LatticePolytope p, LaurentPolynomial f, NondegeneracyCertificate cert)
        : polytope_(std::move(p)), f_(std::move(f)), cert_(std::move(cert)) {}

    LatticePolytope polytope_;
    LaurentPolynomial f_;
    NondegeneracyCertificate cert_;
    std::vector<Rational> degrees_;
    std::map<Rational, GradedPiece> pieces_;
    std::size_t mu_ = 0;
    std::int64_t volume_ = 0;
};

/// Monomials of Newton degree exactly d, lexicographically ordered.
std::vector<Point> graded_stratum(const LatticePolytope& p, const Rational& d);

/// Throws NotConvenient, NondegeneracyUnverified (rejected certificate),
/// InvalidArgument (Newton polytope of f differs from p) and
/// DegeneracyDetected when the graded dimensions fail to add up to the
/// normalized volume or a piece above degree n survives.
GradedJacobianRing build_graded_jacobian(const LaurentPolynomial& f, const LatticePolytope& p,
                                         const NondegeneracyCertificate& cert);

std::map<Rational, std::size_t> graded_dims(const GradedJacobianRing& ring);

/// Matrix of multiplication by the degree-`shift` part of g, from A_d to
/// A_{d+shift} in the graded product. Column j is the image of the j-th
/// quotient basis monomial of A_d. Degrees outside [0, n] hold the zero space.
Matrix multiplication_matrix(const GradedJacobianRing& ring, const LaurentPolynomial& g, const Rational& source_degree,
                             const Rational& shift);

/// Multiplication by the Newton-leading part of f, one block per attained
/// degree, assembled on the direct sum of the pieces in ascending degree.
/// Up to sign this is the nilpotent part of the monodromy on gr^V.
class NilpotentOperator {
public:
    explicit NilpotentOperator(const GradedJacobianRing& ring);

    /// A_d -> A_{d+1}.
    const Matrix& block(const Rational& d) const;
    const std::map<Rational, Matrix>& blocks() const noexcept { return blocks_; }
    const Matrix& total_matrix() const noexcept { return total_; }

    /// [f]^l : A_d -> A_{d+l}, as a product of blocks.
    Matrix power_block(const Rational& d, unsigned l) const;

    /// Offset of A_d inside the total matrix.
    std::size_t offset(const Rational& d) const;
    std::size_t dim_at(const Rational& d) const;

    /// Restriction of the total matrix to the pieces with frac(d) == alpha.
    Matrix sector_matrix(const Rational& alpha) const;
    /// Fractional parts of the attained degrees carrying nonzero pieces.
    std::vector<Rational> sectors() const;

private:
    std::vector<Rational> degrees_;
    std::map<Rational, std::size_t> offsets_;
    std::map<Rational, std::size_t> dims_;
    std::map<Rational, Matrix> blocks_;
    Matrix total_;
};

NilpotentOperator mult_f_operator(const GradedJacobianRing& ring);

}  // namespace brieskorn

#endif

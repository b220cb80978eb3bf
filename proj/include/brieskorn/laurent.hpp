#ifndef BRIESKORN_LAURENT_HPP
#define BRIESKORN_LAURENT_HPP

#include "brieskorn/polytope.hpp"
#include "brieskorn/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace brieskorn {

/// Laurent polynomial over Q in `dim` variables. Terms are kept in
/// lexicographic exponent order with no zero coefficients.
class LaurentPolynomial {
public:
    using Terms = std::map<Point, Rational>;

    explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {}
    static LaurentPolynomial monomial(const Point& exponent, const Rational& coefficient);
    static LaurentPolynomial constant(std::size_t dim, const Rational& c);

    std::size_t dim() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::vector<Point> support() const;
    Rational coefficient(const Point& exponent) const;

    void add_term(const Point& exponent, const Rational& coefficient);

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const Rational& scalar);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

    /// Human-readable form such as "x1 + 2*x2 - x1^-1*x2^-1".
    std::string to_string() const;

private:
    std::size_t dim_;
    Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned exponent);

/// f_a = sum_v a_v x^v over the vertices of `p`, keyed by vertex position.
/// Throws MissingCoefficient, ZeroCoefficient, InvalidArgument (unknown index).
LaurentPolynomial vertex_polynomial(const LatticePolytope& p, const std::map<std::size_t, Rational>& coefficients);
LaurentPolynomial vertex_polynomial(const LatticePolytope& p, const std::vector<Rational>& coefficients);
/// The a == 1 vertex polynomial.
LaurentPolynomial vertex_polynomial(const LatticePolytope& p);

/// x_axis * d f / d x_axis, with `axis` 0-based.
LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t axis);

/// Convex hull of the support. Throws ZeroPolynomial, NotFullDimensional.
LatticePolytope newton_polytope(const LaurentPolynomial& f);

/// Newton degree of x^m with respect to `p`. Throws OriginNotInterior.
Rational newton_degree(const Point& m, const LatticePolytope& p);
/// Maximum over the support. Throws ZeroPolynomial, OriginNotInterior.
Rational newton_degree(const LaurentPolynomial& g, const LatticePolytope& p);

/// Terms of g whose Newton degree is exactly d.
LaurentPolynomial degree_part(const LaurentPolynomial& g, const LatticePolytope& p, const Rational& d);

/// Origin strictly inside the Newton polytope. Throws ZeroPolynomial.
bool is_convenient(const LaurentPolynomial& f);

enum class CertificateStatus { CertifiedSmoothVertex, Asserted, Rejected };

std::string to_string(CertificateStatus status);

struct NondegeneracyCertificate {
    CertificateStatus status = CertificateStatus::Rejected;
    std::string detail;
};

/// Certifies nondegeneracy when the support is the vertex set of the Newton
/// polytope and every facet is a unimodular simplex; anything else comes
/// back Asserted. Throws NotConvenient.
NondegeneracyCertificate certify_nondegenerate(const LaurentPolynomial& f);

/// Pipeline gate on top of certify_nondegenerate. Asserted certificates
/// pass when the caller assumes nondegeneracy or when f is vertex supported
/// on a simplicial polytope; otherwise they are downgraded to Rejected.
NondegeneracyCertificate apply_nondegeneracy_policy(const NondegeneracyCertificate& cert,
                                                    const LaurentPolynomial& f, bool assume_nondegenerate);

}  // namespace brieskorn

#endif

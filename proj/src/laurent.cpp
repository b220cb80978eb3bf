#include "brieskorn/laurent.hpp"

#include "brieskorn/error.hpp"
#include "brieskorn/matrix.hpp"

#include <algorithm>
#include <set>

namespace brieskorn {

LaurentPolynomial LaurentPolynomial::monomial(const Point& exponent, const Rational& coefficient) {
    LaurentPolynomial f(exponent.size());
    f.add_term(exponent, coefficient);
    return f;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Rational& c) {
    return monomial(Point(dim, 0), c);
}

std::vector<Point> LaurentPolynomial::support() const {
    std::vector<Point> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

Rational LaurentPolynomial::coefficient(const Point& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Point& exponent, const Rational& coefficient) {
    if (exponent.size() != dim_) fail(ErrorCode::InvalidArgument, "exponent of wrong dimension");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    if (other.dim_ != dim_) fail(ErrorCode::InvalidArgument, "adding polynomials in different dimensions");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    if (other.dim_ != dim_) fail(ErrorCode::InvalidArgument, "subtracting polynomials in different dimensions");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.dim_ != b.dim_) fail(ErrorCode::InvalidArgument, "multiplying polynomials in different dimensions");
    LaurentPolynomial out(a.dim_);
    Point m(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            s += brieskorn::to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += brieskorn::to_string(mag) + "*" + mono;
        }
    }
    return s;
}

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned exponent) {
    LaurentPolynomial out = LaurentPolynomial::constant(f.dim(), 1);
    for (unsigned i = 0; i < exponent; ++i) out = out * f;
    return out;
}

LaurentPolynomial vertex_polynomial(const LatticePolytope& p, const std::map<std::size_t, Rational>& coefficients) {
    const auto& verts = p.vertices();
    for (const auto& [index, c] : coefficients) {
        if (index >= verts.size()) {
            fail(ErrorCode::InvalidArgument, "coefficient for vertex index " + std::to_string(index) +
                                                 " but the polytope has " + std::to_string(verts.size()) + " vertices");
        }
    }
    LaurentPolynomial f(p.dim());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto it = coefficients.find(i);
        if (it == coefficients.end()) {
            fail(ErrorCode::MissingCoefficient, "no coefficient for vertex index " + std::to_string(i));
        }
        if (it->second == 0) fail(ErrorCode::ZeroCoefficient, "coefficient of vertex " + std::to_string(i) + " is zero");
        f.add_term(verts[i], it->second);
    }
    return f;
}

LaurentPolynomial vertex_polynomial(const LatticePolytope& p, const std::vector<Rational>& coefficients) {
    std::map<std::size_t, Rational> keyed;
    for (std::size_t i = 0; i < coefficients.size(); ++i) keyed.emplace(i, coefficients[i]);
    return vertex_polynomial(p, keyed);
}

LaurentPolynomial vertex_polynomial(const LatticePolytope& p) {
    return vertex_polynomial(p, std::vector<Rational>(p.vertices().size(), Rational(1)));
}

LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t axis) {
    if (axis >= f.dim()) fail(ErrorCode::InvalidArgument, "axis index out of range");
    LaurentPolynomial out(f.dim());
    for (const auto& [m, c] : f.terms()) out.add_term(m, c * m[axis]);
    return out;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no Newton polytope");
    return LatticePolytope::hull(f.dim(), f.support());
}

Rational newton_degree(const Point& m, const LatticePolytope& p) { return p.degree(m); }

Rational newton_degree(const LaurentPolynomial& g, const LatticePolytope& p) {
    if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no Newton degree");
    Rational best = -1;
    for (const auto& [m, c] : g.terms()) best = std::max(best, p.degree(m));
    return best;
}

LaurentPolynomial degree_part(const LaurentPolynomial& g, const LatticePolytope& p, const Rational& d) {
    LaurentPolynomial out(g.dim());
    for (const auto& [m, c] : g.terms()) {
        if (p.degree(m) == d) out.add_term(m, c);
    }
    return out;
}

bool is_convenient(const LaurentPolynomial& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial is not convenient");
    const auto support = f.support();
    if (!is_full_dimensional(support, f.dim())) return false;
    return newton_polytope(f).origin_interior();
}

std::string to_string(CertificateStatus status) {
    switch (status) {
        case CertificateStatus::CertifiedSmoothVertex: return "certified-smooth-vertex";
        case CertificateStatus::Asserted: return "asserted";
        case CertificateStatus::Rejected: return "rejected";
    }
    return "rejected";
}

namespace {

bool vertex_supported(const LaurentPolynomial& f, const LatticePolytope& hull) {
    return f.terms().size() == hull.vertices().size();
}

}  // namespace

NondegeneracyCertificate certify_nondegenerate(const LaurentPolynomial& f) {
    if (!is_convenient(f)) fail(ErrorCode::NotConvenient, "f is not convenient: the origin is not interior to its Newton polytope");
    const auto hull = newton_polytope(f);
    if (!vertex_supported(f, hull)) {
        return {CertificateStatus::Asserted, "support contains non-vertex exponents; nondegeneracy not certified"};
    }
    if (!is_simplicial(hull)) {
        return {CertificateStatus::Asserted, "Newton polytope has non-simplex facets; nondegeneracy not certified"};
    }
    if (!is_smooth(hull)) {
        return {CertificateStatus::Asserted,
                "vertex supported on simplicial facets, but some facet is not a lattice basis; nondegeneracy not certified"};
    }
    return {CertificateStatus::CertifiedSmoothVertex,
            "vertex supported and every facet's vertices form a lattice basis: each facet restriction is y1+...+yn in toric coordinates"};
}

NondegeneracyCertificate apply_nondegeneracy_policy(const NondegeneracyCertificate& cert,
                                                    const LaurentPolynomial& f, bool assume_nondegenerate) {
    if (cert.status != CertificateStatus::Asserted || assume_nondegenerate) return cert;
    const auto hull = newton_polytope(f);
    if (vertex_supported(f, hull) && is_simplicial(hull)) return cert;
    return {CertificateStatus::Rejected, cert.detail + "; rerun with --assume-nondegenerate to proceed"};
}

}  // namespace brieskorn

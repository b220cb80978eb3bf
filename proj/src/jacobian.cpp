#include "brieskorn/jacobian.hpp"

#include "brieskorn/error.hpp"

#include <algorithm>
#include <set>

namespace brieskorn {

GradedPiece::GradedPiece(Rational degree, std::vector<Point> ambient_basis, Matrix relation_matrix)
    : degree_(std::move(degree)), ambient_(std::move(ambient_basis)), relations_(std::move(relation_matrix)) {
    for (std::size_t i = 0; i < ambient_.size(); ++i) index_.emplace(ambient_[i], i);

    std::vector<std::vector<Rational>> cols;
    cols.reserve(relations_.cols());
    for (std::size_t c = 0; c < relations_.cols(); ++c) {
        std::vector<Rational> v(relations_.rows());
        for (std::size_t r = 0; r < relations_.rows(); ++r) v[r] = relations_(r, c);
        cols.push_back(std::move(v));
    }
    span_ = ReducedSpan(ambient_.size(), std::move(cols));
    free_ = span_.free_columns();
    for (auto i : free_) quotient_.push_back(ambient_[i]);
}

std::vector<Rational> GradedPiece::coordinates(const LaurentPolynomial& homogeneous) const {
    std::vector<Rational> v(ambient_.size());
    for (const auto& [m, c] : homogeneous.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) {
            fail(ErrorCode::InvalidArgument, "monomial outside the degree " + to_string(degree_) + " stratum");
        }
        v[it->second] += c;
    }
    v = span_.reduce(std::move(v));
    std::vector<Rational> out;
    out.reserve(free_.size());
    for (auto i : free_) out.push_back(v[i]);
    return out;
}

const GradedPiece* GradedJacobianRing::piece(const Rational& d) const {
    auto it = pieces_.find(d);
    return it == pieces_.end() ? nullptr : &it->second;
}

std::size_t GradedJacobianRing::dim_at(const Rational& d) const {
    const auto* p = piece(d);
    return p ? p->dim() : 0;
}

std::vector<Point> graded_stratum(const LatticePolytope& p, const Rational& d) {
    std::vector<Point> out;
    for (auto& m : lattice_points(p, d)) {
        if (p.degree(m) == d) out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::map<Rational, std::vector<Point>> strata_up_to(const LatticePolytope& p, const Rational& top) {
    std::map<Rational, std::vector<Point>> strata;
    for (auto& m : lattice_points(p, top)) strata[p.degree(m)].push_back(std::move(m));
    return strata;
}

}  // namespace

GradedJacobianRing build_graded_jacobian(const LaurentPolynomial& f, const LatticePolytope& p,
                                         const NondegeneracyCertificate& cert) {
    if (cert.status == CertificateStatus::Rejected) {
        fail(ErrorCode::NondegeneracyUnverified, "nondegeneracy certificate rejected: " + cert.detail);
    }
    if (!is_convenient(f)) fail(ErrorCode::NotConvenient, "f is not convenient");
    if (!(newton_polytope(f) == p)) {
        fail(ErrorCode::InvalidArgument, "the Newton polytope of f differs from the given polytope");
    }

    const std::size_t n = p.dim();
    const Rational top = static_cast<long>(n);
    GradedJacobianRing ring(p, f, cert);

    std::vector<LaurentPolynomial> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(log_derivative(f, i));

    const auto strata = strata_up_to(p, top + 1);
    for (const auto& [d, monomials] : strata) {
        std::map<Point, std::size_t> index;
        for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

        std::vector<std::vector<Rational>> columns;
        if (auto lower = strata.find(d - 1); lower != strata.end()) {
            for (const auto& gi : g) {
                for (const auto& m : lower->second) {
                    std::vector<Rational> col(monomials.size());
                    bool nonzero = false;
                    for (const auto& [v, c] : gi.terms()) {
                        Point prod(n);
                        for (std::size_t k = 0; k < n; ++k) prod[k] = v[k] + m[k];
                        // Terms of lower degree vanish in the associated graded.
                        if (p.degree(prod) != d) continue;
                        col[index.at(prod)] += c;
                        nonzero = true;
                    }
                    if (nonzero) columns.push_back(std::move(col));
                }
            }
        }
        Matrix rel(monomials.size(), columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < monomials.size(); ++r) rel(r, c) = columns[c][r];

        GradedPiece piece(d, monomials, std::move(rel));
        if (d <= top) {
            ring.degrees_.push_back(d);
            ring.mu_ += piece.dim();
            ring.pieces_.emplace(d, std::move(piece));
        } else if (piece.dim() != 0) {
            fail(ErrorCode::DegeneracyDetected, "graded piece of degree " + to_string(d) + " above n is nonzero (dim " +
                                                    std::to_string(piece.dim()) + ")");
        }
    }

    ring.volume_ = normalized_volume(p);
    if (static_cast<std::int64_t>(ring.mu_) != ring.volume_) {
        fail(ErrorCode::DegeneracyDetected, "graded dimensions sum to " + std::to_string(ring.mu_) +
                                                " but the normalized volume is " + std::to_string(ring.volume_));
    }
    return ring;
}

std::map<Rational, std::size_t> graded_dims(const GradedJacobianRing& ring) {
    std::map<Rational, std::size_t> out;
    for (const auto& [d, piece] : ring.pieces()) out.emplace(d, piece.dim());
    return out;
}

Matrix multiplication_matrix(const GradedJacobianRing& ring, const LaurentPolynomial& g, const Rational& source_degree,
                             const Rational& shift) {
    const GradedPiece* source = ring.piece(source_degree);
    const Rational target_degree = source_degree + shift;
    const GradedPiece* target = ring.piece(target_degree);
    Matrix out(target ? target->dim() : 0, source ? source->dim() : 0);
    if (out.empty()) return out;

    const auto& p = ring.polytope();
    const LaurentPolynomial lead = degree_part(g, p, shift);
    for (std::size_t j = 0; j < source->dim(); ++j) {
        const auto product = LaurentPolynomial::monomial(source->quotient_basis()[j], 1) * lead;
        const auto coords = target->coordinates(degree_part(product, p, target_degree));
        for (std::size_t i = 0; i < coords.size(); ++i) out(i, j) = coords[i];
    }
    return out;
}

NilpotentOperator::NilpotentOperator(const GradedJacobianRing& ring) : degrees_(ring.attained_degrees()) {
    std::size_t offset = 0;
    for (const auto& d : degrees_) {
        offsets_.emplace(d, offset);
        dims_.emplace(d, ring.dim_at(d));
        offset += ring.dim_at(d);
    }
    total_ = Matrix(offset, offset);
    for (const auto& d : degrees_) {
        Matrix b = multiplication_matrix(ring, ring.polynomial(), d, 1);
        if (!b.empty()) {
            const std::size_t row0 = offsets_.at(d + 1);
            const std::size_t col0 = offsets_.at(d);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) total_(row0 + r, col0 + c) = b(r, c);
        }
        blocks_.emplace(d, std::move(b));
    }
}

const Matrix& NilpotentOperator::block(const Rational& d) const {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) fail(ErrorCode::InvalidArgument, "no graded piece at degree " + to_string(d));
    return it->second;
}

std::size_t NilpotentOperator::offset(const Rational& d) const {
    auto it = offsets_.find(d);
    if (it == offsets_.end()) fail(ErrorCode::InvalidArgument, "no graded piece at degree " + to_string(d));
    return it->second;
}

std::size_t NilpotentOperator::dim_at(const Rational& d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

Matrix NilpotentOperator::power_block(const Rational& d, unsigned l) const {
    Matrix result = Matrix::identity(dim_at(d));
    for (unsigned s = 0; s < l; ++s) {
        auto it = blocks_.find(d + s);
        // An unattained intermediate degree is the zero space.
        if (it == blocks_.end()) return Matrix(dim_at(d + l), dim_at(d));
        result = it->second * result;
    }
    return result;
}

std::vector<Rational> NilpotentOperator::sectors() const {
    std::set<Rational> out;
    for (const auto& d : degrees_)
        if (dim_at(d) > 0) out.insert(frac(d));
    return {out.begin(), out.end()};
}

Matrix NilpotentOperator::sector_matrix(const Rational& alpha) const {
    std::vector<std::size_t> idx;
    for (const auto& d : degrees_) {
        if (frac(d) != alpha) continue;
        for (std::size_t i = 0; i < dim_at(d); ++i) idx.push_back(offsets_.at(d) + i);
    }
    Matrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = total_(idx[r], idx[c]);
    return out;
}

NilpotentOperator mult_f_operator(const GradedJacobianRing& ring) { return NilpotentOperator(ring); }

}  // namespace brieskorn

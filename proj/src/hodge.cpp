#include "brieskorn/hodge.hpp"

#include "brieskorn/error.hpp"

#include <algorithm>
#include <set>

namespace brieskorn {

std::size_t Spectrum::total() const {
    std::size_t acc = 0;
    for (const auto& e : pairs) acc += e.multiplicity;
    return acc;
}

bool Spectrum::integral() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const SpectrumEntry& e) { return is_integer(e.degree); });
}

Spectrum spectrum(const GradedJacobianRing& ring) {
    const Rational n = static_cast<long>(ring.dim());
    Spectrum s;
    for (const auto& [d, piece] : ring.pieces()) {
        if (piece.dim() == 0) continue;
        if (d < 0 || d > n) {
            fail(ErrorCode::SpectrumAsymmetry, "spectral value " + to_string(d) + " outside [0, n]");
        }
        if (ring.dim_at(n - d) != piece.dim()) {
            fail(ErrorCode::SpectrumAsymmetry, "dim A_" + to_string(d) + " = " + std::to_string(piece.dim()) + " but dim A_" +
                                                   to_string(n - d) + " = " + std::to_string(ring.dim_at(n - d)));
        }
        s.pairs.push_back({d, piece.dim()});
    }
    return s;
}

namespace {

std::vector<Rational> attained_fractional_parts(const GradedJacobianRing& ring) {
    std::set<Rational> out;
    for (const auto& d : ring.attained_degrees()) out.insert(frac(d));
    return {out.begin(), out.end()};
}

int center_for(const Rational& alpha, std::size_t n) {
    return alpha == 0 ? static_cast<int>(n) : static_cast<int>(n) - 1;
}

}  // namespace

LefschetzResult lefschetz_check(const GradedJacobianRing& ring, const NilpotentOperator& op) {
    LefschetzResult result;
    for (const auto& alpha : attained_fractional_parts(ring)) {
        const int nu = center_for(alpha, ring.dim());
        for (int k = 0; 2 * k <= nu; ++k) {
            LefschetzVerdict v;
            v.alpha = alpha;
            v.center = nu;
            v.k = k;
            v.power = nu - 2 * k;
            v.source_degree = alpha + k;
            v.target_degree = alpha + (nu - k);
            v.source_dim = ring.dim_at(v.source_degree);
            v.target_dim = ring.dim_at(v.target_degree);
            if (v.source_dim != v.target_dim) {
                v.isomorphism = false;
                v.reason = "shape mismatch: dim A_" + to_string(v.source_degree) + " = " + std::to_string(v.source_dim) +
                           ", dim A_" + to_string(v.target_degree) + " = " + std::to_string(v.target_dim);
            } else if (v.source_dim == 0) {
                v.isomorphism = true;
                v.reason = "zero spaces";
            } else if (v.power == 0) {
                v.isomorphism = true;
                v.reason = "identity";
            } else {
                const Matrix m = op.power_block(v.source_degree, static_cast<unsigned>(v.power));
                const std::size_t r = rank(m);
                v.isomorphism = r == v.source_dim;
                v.reason = v.isomorphism ? "full rank" : "rank " + std::to_string(r) + " < " + std::to_string(v.source_dim);
            }
            result.pass = result.pass && v.isomorphism;
            result.verdicts.push_back(std::move(v));
        }
    }
    return result;
}

LefschetzResult lefschetz_check(const GradedJacobianRing& ring) { return lefschetz_check(ring, NilpotentOperator(ring)); }

std::vector<std::size_t> jordan_type(const Matrix& nilpotent) {
    if (nilpotent.rows() != nilpotent.cols()) fail(ErrorCode::ShapeMismatch, "nilpotent operator must be square");
    const std::size_t k = nilpotent.rows();
    // ranks[l] = rank N^l, until it reaches zero.
    std::vector<std::size_t> ranks{k};
    Matrix pw = Matrix::identity(k);
    while (ranks.back() != 0) {
        if (ranks.size() > k) fail(ErrorCode::NotNilpotent, "operator is not nilpotent");
        pw = nilpotent * pw;
        const std::size_t r = rank(pw);
        if (r == ranks.back()) fail(ErrorCode::NotNilpotent, "operator is not nilpotent");
        ranks.push_back(r);
    }
    // at_least[s] = #blocks of size >= s = rank N^{s-1} - rank N^s.
    std::vector<std::size_t> sizes;
    for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
        const std::size_t at_least = ranks[s - 1] - ranks[s];
        const std::size_t bigger = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
        for (std::size_t i = 0; i < at_least - bigger; ++i) sizes.push_back(s);
    }
    return sizes;
}

WeightFiltrationData weight_filtration(const Matrix& nilpotent, int center) {
    WeightFiltrationData w;
    w.center = center;
    w.jordan_type = jordan_type(nilpotent);
    for (auto s : w.jordan_type) {
        const int size = static_cast<int>(s);
        for (int j = 0; j < size; ++j) ++w.graded_dims[center - size + 1 + 2 * j];
    }
    return w;
}

WeightFiltrationData weight_filtration(const NilpotentOperator& op, int center) {
    return weight_filtration(op.total_matrix(), center);
}

std::size_t HodgeNumbers::at(int p, int q, const Rational& alpha) const {
    for (const auto& e : entries)
        if (e.p == p && e.q == q && e.alpha == alpha) return e.h;
    return 0;
}

HodgeNumbers irregular_hodge_numbers(const GradedJacobianRing& ring) {
    HodgeNumbers out;
    const int n = static_cast<int>(ring.dim());
    for (const auto& [d, piece] : ring.pieces())
        if (piece.dim() > 0 && !is_integer(d)) out.unipotent = false;

    for (const auto& alpha : attained_fractional_parts(ring)) {
        if (alpha != 0 && out.unipotent) continue;
        for (int p = alpha == 0 ? 0 : 1; p <= n; ++p) {
            const Rational d = Rational(n - p) + alpha;
            out.entries.push_back({alpha, p, n - p, ring.dim_at(d)});
        }
    }
    return out;
}

HodgeTateVerdict hodge_tate_check(const GradedJacobianRing& ring, const NilpotentOperator& op) {
    HodgeTateVerdict verdict;
    verdict.via_lefschetz = true;
    verdict.via_dims = true;
    const auto lefschetz = lefschetz_check(ring, op);
    const int n = static_cast<int>(ring.dim());

    for (const auto& alpha : attained_fractional_parts(ring)) {
        SectorHodgeTate sector;
        sector.alpha = alpha;
        sector.center = center_for(alpha, ring.dim());
        sector.via_lefschetz = std::all_of(lefschetz.verdicts.begin(), lefschetz.verdicts.end(),
                                           [&](const LefschetzVerdict& v) { return v.alpha != alpha || v.isomorphism; });

        // gr_F^p is A_{n-p} on the integral sector and A_{alpha+n-1-p} otherwise;
        // it vanishes for half-integral p.
        const int top = alpha == 0 ? n : n - 1;
        for (int p = 0; p <= top; ++p) {
            const std::size_t dim = ring.dim_at(alpha + (top - p));
            if (dim > 0) sector.hodge_dims[2 * p] = dim;
        }
        sector.weights = weight_filtration(op.sector_matrix(alpha), sector.center);
        sector.via_dims = sector.hodge_dims == sector.weights.graded_dims;

        verdict.via_lefschetz = verdict.via_lefschetz && sector.via_lefschetz;
        verdict.via_dims = verdict.via_dims && sector.via_dims;
        verdict.sectors.push_back(std::move(sector));
    }
    return verdict;
}

HodgeTateVerdict hodge_tate_check(const GradedJacobianRing& ring) { return hodge_tate_check(ring, NilpotentOperator(ring)); }

CoefficientSampler::CoefficientSampler(std::uint64_t seed) : engine_(seed) {}

std::vector<Rational> CoefficientSampler::draw(std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Explicit mapping keeps the draw identical across standard libraries.
        const auto r = static_cast<long>(engine_() % 18);
        out.emplace_back(r < 9 ? r - 9 : r - 8);
    }
    return out;
}

namespace {

struct PipelineState {
    LaurentPolynomial f;
    GradedJacobianRing ring;
    NilpotentOperator op;
};

PipelineState run_pipeline(const LatticePolytope& p, const std::map<std::size_t, Rational>& coefficients,
                           bool assume_nondegenerate) {
    auto f = vertex_polynomial(p, coefficients);
    const auto cert = apply_nondegeneracy_policy(certify_nondegenerate(f), f, assume_nondegenerate);
    auto ring = build_graded_jacobian(f, p, cert);
    NilpotentOperator op(ring);
    return {std::move(f), std::move(ring), std::move(op)};
}

std::map<std::size_t, Rational> keyed(const std::vector<Rational>& a) {
    std::map<std::size_t, Rational> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.emplace(i, a[i]);
    return out;
}

}  // namespace

ConstancyResult coefficient_constancy(const LatticePolytope& p, const std::map<Rational, std::size_t>& reference,
                                      std::uint64_t seed, unsigned trials, bool assume_nondegenerate) {
    ConstancyResult result;
    result.seed = seed;
    CoefficientSampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        ConstancyTrial trial;
        trial.coefficients = sampler.draw(p.vertices().size());
        const auto state = run_pipeline(p, keyed(trial.coefficients), assume_nondegenerate);
        trial.dims = graded_dims(state.ring);
        const auto ht = hodge_tate_check(state.ring, state.op);
        trial.via_lefschetz = ht.via_lefschetz;
        trial.via_dims = ht.via_dims;
        result.constant = result.constant && trial.dims == reference;
        result.criteria_agree = result.criteria_agree && trial.via_lefschetz == trial.via_dims;
        result.trials.push_back(std::move(trial));
    }
    return result;
}

KKPReport kkp_report(const LatticePolytope& p, const std::map<std::size_t, Rational>& coefficients,
                     const KKPOptions& options, std::string polytope_id) {
    KKPReport report;
    report.polytope_id = std::move(polytope_id);
    report.dim = p.dim();
    report.operator_sign_note =
        "operator is multiplication by [f]; the nilpotent [N] equals it up to sign, which affects neither ranks nor Jordan type";

    if (!p.origin_interior()) fail(ErrorCode::OriginNotInterior, "the origin is not in the interior of the polytope");
    const bool reflexive = is_reflexive(p);
    const bool smooth = is_smooth(p);
    if (!reflexive) report.warnings.push_back("polytope is not reflexive; Newton degrees may be fractional");
    if (reflexive && !smooth) {
        report.warnings.push_back(
            "polytope is reflexive but not smooth: h-vector comparison unavailable and constancy in the coefficients is "
            "not guaranteed");
    }

    const auto state = run_pipeline(p, coefficients, options.assume_nondegenerate);
    const auto& ring = state.ring;
    report.coefficients.resize(p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) report.coefficients[i] = state.f.coefficient(p.vertices()[i]);

    report.certificate = ring.certificate();
    if (report.certificate.status == CertificateStatus::Asserted) {
        report.warnings.push_back("nondegeneracy asserted, not certified: " + report.certificate.detail);
    }
    report.mu = ring.mu();
    report.normalized_volume = ring.normalized_volume();
    report.spectrum = spectrum(ring);
    report.hodge_numbers = irregular_hodge_numbers(ring);
    report.lefschetz = lefschetz_check(ring, state.op);
    report.hodge_tate = hodge_tate_check(ring, state.op);
    report.jordan_type = jordan_type(state.op.total_matrix());

    const auto n = static_cast<int>(p.dim());
    for (const auto& sector : report.hodge_tate.sectors) {
        if (sector.alpha != 0) continue;
        for (int k = 0; k <= n; ++k) {
            auto it = sector.weights.graded_dims.find(2 * k);
            report.weight_graded[k] = it == sector.weights.graded_dims.end() ? 0 : it->second;
        }
    }

    if (report.spectrum.integral()) {
        bool equal = true;
        for (int k = 0; k <= n; ++k) equal = equal && report.hodge_numbers.at(k, n - k) == report.weight_graded[k];
        // Odd weights carry no Hodge numbers.
        for (const auto& sector : report.hodge_tate.sectors)
            if (sector.alpha == 0)
                for (const auto& [w, dim] : sector.weights.graded_dims) equal = equal && (w % 2 == 0 || dim == 0);
        report.kkp_equality = equal;
    } else {
        report.warnings.push_back(
            "spectrum is not integral: monodromy at infinity is not unipotent; per-sector Hodge numbers reported, no KKP "
            "verdict");
    }

    const bool all_ones =
        std::all_of(report.coefficients.begin(), report.coefficients.end(), [](const Rational& a) { return a == 1; });
    if (smooth) {
        report.h_vector = h_vector(p);
        if (all_ones) {
            bool match = true;
            for (int d = 0; d <= n; ++d)
                match = match && static_cast<std::int64_t>(ring.dim_at(Rational(d))) == (*report.h_vector)[static_cast<std::size_t>(d)];
            report.h_vector_match = match;
        }
    }

    if (options.trials > 0) {
        report.constancy = coefficient_constancy(p, graded_dims(ring), options.seed, options.trials, options.assume_nondegenerate);
        if (!report.constancy->constant) report.warnings.push_back("graded dimensions vary with the coefficients");
    }
    return report;
}

KKPReport kkp_report(const LatticePolytope& p, const KKPOptions& options, std::string polytope_id) {
    std::map<std::size_t, Rational> ones;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) ones.emplace(i, Rational(1));
    return kkp_report(p, ones, options, std::move(polytope_id));
}

}  // namespace brieskorn

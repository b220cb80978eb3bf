#ifndef BRIESKORN_HODGE_HPP
#define BRIESKORN_HODGE_HPP

#include "brieskorn/jacobian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace brieskorn {

struct SpectrumEntry {
    Rational degree;
    std::size_t multiplicity = 0;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Spectrum at infinity: nonzero graded dimensions, ascending in degree.
struct Spectrum {
    std::vector<SpectrumEntry> pairs;

    std::size_t total() const;
    bool integral() const;
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Throws SpectrumAsymmetry if dim A_d != dim A_{n-d} for some d, or if a
/// nonzero piece sits outside [0, n].
Spectrum spectrum(const GradedJacobianRing& ring);

struct LefschetzVerdict {
    Rational alpha;
    int center = 0;  // nu: n for alpha == 0, n - 1 otherwise
    int k = 0;
    int power = 0;   // nu - 2k
    Rational source_degree;
    Rational target_degree;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    bool isomorphism = false;
    std::string reason;
};

struct LefschetzResult {
    std::vector<LefschetzVerdict> verdicts;
    bool pass = true;
};

/// For every sector alpha and 0 <= k <= floor(nu/2), whether
/// [f]^(nu-2k) : A_{alpha+k} -> A_{alpha+nu-k} is an isomorphism.
LefschetzResult lefschetz_check(const GradedJacobianRing& ring, const NilpotentOperator& op);
LefschetzResult lefschetz_check(const GradedJacobianRing& ring);

struct WeightFiltrationData {
    int center = 0;
    /// weight w -> dim gr_w^W, only nonzero entries.
    std::map<int, std::size_t> graded_dims;
    /// Jordan block sizes, descending.
    std::vector<std::size_t> jordan_type;
};

/// Jordan block sizes of a nilpotent matrix from the ranks of its powers.
/// Throws NotNilpotent.
std::vector<std::size_t> jordan_type(const Matrix& nilpotent);

/// Monodromy weight filtration of N centered at `center`: a Jordan block
/// of size s contributes one dimension to each weight center-s+1+2j,
/// j = 0..s-1. Throws NotNilpotent.
WeightFiltrationData weight_filtration(const Matrix& nilpotent, int center);
WeightFiltrationData weight_filtration(const NilpotentOperator& op, int center);

struct HodgeEntry {
    Rational alpha;
    int p = 0;
    int q = 0;
    std::size_t h = 0;
};

struct HodgeNumbers {
    /// True when every attained degree carrying a piece is an integer; then
    /// only alpha == 0 entries occur and h^{p,q} = dim A_{n-p}.
    bool unipotent = true;
    /// For alpha in (0,1), h^{p,q}_alpha = dim A_{n-p+alpha}.
    std::vector<HodgeEntry> entries;

    std::size_t at(int p, int q, const Rational& alpha = 0) const;
};

HodgeNumbers irregular_hodge_numbers(const GradedJacobianRing& ring);

struct SectorHodgeTate {
    Rational alpha;
    int center = 0;
    bool via_lefschetz = false;
    bool via_dims = false;
    /// 2p -> dim gr_F^p (p in 1/2 Z, nonzero entries only).
    std::map<int, std::size_t> hodge_dims;
    WeightFiltrationData weights;
};

struct HodgeTateVerdict {
    bool via_lefschetz = false;
    bool via_dims = false;
    std::vector<SectorHodgeTate> sectors;
};

/// Both Hodge-Tate tests: the Lefschetz-type isomorphisms, and the equality
/// dim gr_F^p = dim gr^W_{2p} for all p in 1/2 Z, sector by sector.
HodgeTateVerdict hodge_tate_check(const GradedJacobianRing& ring, const NilpotentOperator& op);
HodgeTateVerdict hodge_tate_check(const GradedJacobianRing& ring);

/// Deterministic nonzero integer coefficients in [-9, 9].
class CoefficientSampler {
public:
    explicit CoefficientSampler(std::uint64_t seed);
    std::vector<Rational> draw(std::size_t count);

private:
    std::mt19937_64 engine_;
};

struct ConstancyTrial {
    std::vector<Rational> coefficients;
    std::map<Rational, std::size_t> dims;
    bool via_lefschetz = false;
    bool via_dims = false;
};

struct ConstancyResult {
    std::uint64_t seed = 0;
    std::vector<ConstancyTrial> trials;
    bool constant = true;
    bool criteria_agree = true;
};

/// Recomputes graded dims and both criteria for `trials` sampled coefficient
/// vectors and compares against `reference` dims.
ConstancyResult coefficient_constancy(const LatticePolytope& p, const std::map<Rational, std::size_t>& reference,
                                      std::uint64_t seed, unsigned trials, bool assume_nondegenerate = false);

struct KKPOptions {
    unsigned trials = 0;
    std::uint64_t seed = 0;
    bool assume_nondegenerate = false;
};

struct KKPReport {
    std::string polytope_id;
    std::size_t dim = 0;
    std::vector<Rational> coefficients;
    NondegeneracyCertificate certificate;
    std::size_t mu = 0;
    std::int64_t normalized_volume = 0;
    Spectrum spectrum;
    HodgeNumbers hodge_numbers;
    /// p -> dim gr_{2p}^W on the alpha == 0 sector.
    std::map<int, std::size_t> weight_graded;
    std::vector<std::size_t> jordan_type;
    LefschetzResult lefschetz;
    HodgeTateVerdict hodge_tate;
    /// Emitted only for integral spectra.
    std::optional<bool> kkp_equality;
    std::optional<bool> h_vector_match;
    std::optional<std::vector<std::int64_t>> h_vector;
    std::optional<ConstancyResult> constancy;
    std::vector<std::string> warnings;
    std::string operator_sign_note;
};

/// Full pipeline for the vertex polynomial f_a on `p`. Throws the upstream
/// errors (ZeroCoefficient, DegeneracyDetected, ...).
KKPReport kkp_report(const LatticePolytope& p, const std::map<std::size_t, Rational>& coefficients,
                     const KKPOptions& options = {}, std::string polytope_id = {});
/// a == 1.
KKPReport kkp_report(const LatticePolytope& p, const KKPOptions& options = {}, std::string polytope_id = {});

}  // namespace brieskorn

#endif

#include "brieskorn/brieskorn.h"

#include "brieskorn/error.hpp"
#include "brieskorn/hodge.hpp"
#include "brieskorn/jacobian.hpp"
#include "brieskorn/laurent.hpp"
#include "brieskorn/serialize.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

using namespace brieskorn;

struct bk_polytope {
    LatticePolytope polytope;
    std::string name;
};

struct bk_polynomial {
    LatticePolytope polytope;
    LaurentPolynomial f;
};

struct bk_jacobian {
    GradedJacobianRing ring;
};

namespace {

thread_local std::string last_error;

bk_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedInput: return BK_ERR_MALFORMED_INPUT;
        case ErrorCode::NotFullDimensional: return BK_ERR_NOT_FULL_DIMENSIONAL;
        case ErrorCode::NotAVertex: return BK_ERR_NOT_A_VERTEX;
        case ErrorCode::OriginNotInterior: return BK_ERR_ORIGIN_NOT_INTERIOR;
        case ErrorCode::NotReflexive: return BK_ERR_NOT_REFLEXIVE;
        case ErrorCode::NotSimplicial: return BK_ERR_NOT_SIMPLICIAL;
        case ErrorCode::MissingCoefficient: return BK_ERR_MISSING_COEFFICIENT;
        case ErrorCode::ZeroCoefficient: return BK_ERR_ZERO_COEFFICIENT;
        case ErrorCode::ZeroPolynomial: return BK_ERR_ZERO_POLYNOMIAL;
        case ErrorCode::NotConvenient: return BK_ERR_NOT_CONVENIENT;
        case ErrorCode::NondegeneracyUnverified: return BK_ERR_NONDEGENERACY_UNVERIFIED;
        case ErrorCode::DegeneracyDetected: return BK_ERR_DEGENERACY_DETECTED;
        case ErrorCode::SpectrumAsymmetry: return BK_ERR_SPECTRUM_ASYMMETRY;
        case ErrorCode::NotNilpotent: return BK_ERR_NOT_NILPOTENT;
        case ErrorCode::ShapeMismatch: return BK_ERR_SHAPE_MISMATCH;
        case ErrorCode::InvalidArgument: return BK_ERR_INVALID_ARGUMENT;
    }
    return BK_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <class Fn>
bk_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return BK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BK_ERR_INTERNAL;
    }
}

bk_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return BK_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out) { *out = copy_string(j.dump(2) + "\n"); }

std::map<std::size_t, Rational> coefficients_or_ones(const LatticePolytope& p, const char* coefficients_json) {
    if (coefficients_json) return parse_coefficients(coefficients_json);
    std::map<std::size_t, Rational> ones;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) ones.emplace(i, Rational(1));
    return ones;
}

NondegeneracyCertificate certificate_for(const LaurentPolynomial& f, int assume_nondegenerate) {
    return apply_nondegeneracy_policy(certify_nondegenerate(f), f, assume_nondegenerate != 0);
}

}  // namespace

extern "C" {

const char* bk_version(void) { return "0.1.0"; }

const char* bk_status_name(bk_status status) {
    switch (status) {
        case BK_OK: return "OK";
        case BK_ERR_MALFORMED_INPUT: return "MalformedInput";
        case BK_ERR_NOT_FULL_DIMENSIONAL: return "NotFullDimensional";
        case BK_ERR_NOT_A_VERTEX: return "NotAVertex";
        case BK_ERR_ORIGIN_NOT_INTERIOR: return "OriginNotInterior";
        case BK_ERR_NOT_REFLEXIVE: return "NotReflexive";
        case BK_ERR_NOT_SIMPLICIAL: return "NotSimplicial";
        case BK_ERR_MISSING_COEFFICIENT: return "MissingCoefficient";
        case BK_ERR_ZERO_COEFFICIENT: return "ZeroCoefficient";
        case BK_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
        case BK_ERR_NOT_CONVENIENT: return "NotConvenient";
        case BK_ERR_NONDEGENERACY_UNVERIFIED: return "NondegeneracyUnverified";
        case BK_ERR_DEGENERACY_DETECTED: return "DegeneracyDetected";
        case BK_ERR_SPECTRUM_ASYMMETRY: return "SpectrumAsymmetry";
        case BK_ERR_NOT_NILPOTENT: return "NotNilpotent";
        case BK_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
        case BK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case BK_ERR_IO: return "IOError";
        case BK_ERR_INTERNAL: return "InternalError";
    }
    return "Unknown";
}

const char* bk_last_error_message(void) { return last_error.c_str(); }

int bk_exit_code(bk_status status) {
    switch (status) {
        case BK_OK: return 0;
        case BK_ERR_DEGENERACY_DETECTED:
        case BK_ERR_SPECTRUM_ASYMMETRY:
        case BK_ERR_NONDEGENERACY_UNVERIFIED:
        case BK_ERR_NOT_NILPOTENT: return 2;
        case BK_ERR_INTERNAL: return 1;
        default: return 3;
    }
}

void bk_string_free(char* s) { delete[] s; }

bk_status bk_polytope_from_json(const char* json_text, bk_polytope** out) {
    if (!json_text) return null_argument("json_text");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto file = parse_polytope(json_text);
        *out = new bk_polytope{std::move(file.polytope), std::move(file.name)};
    });
}

bk_status bk_polytope_load(const char* path, bk_polytope** out) {
    if (!path) return null_argument("path");
    if (!out) return null_argument("out");
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        last_error = std::string("cannot read ") + path;
        return BK_ERR_IO;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return guarded([&] {
        auto file = parse_polytope(buf.str());
        if (file.name.empty()) file.name = std::filesystem::path(path).stem().string();
        *out = new bk_polytope{std::move(file.polytope), std::move(file.name)};
    });
}

void bk_polytope_free(bk_polytope* p) { delete p; }

size_t bk_polytope_dim(const bk_polytope* p) { return p ? p->polytope.dim() : 0; }

size_t bk_polytope_vertex_count(const bk_polytope* p) { return p ? p->polytope.vertices().size() : 0; }

const char* bk_polytope_name(const bk_polytope* p) { return p ? p->name.c_str() : ""; }

bk_status bk_polytope_summary_json(const bk_polytope* p, char** out_json) {
    if (!p) return null_argument("p");
    if (!out_json) return null_argument("out_json");
    return guarded([&] {
        json j = polytope_summary(p->polytope);
        j["name"] = p->name;
        emit(j, out_json);
    });
}

bk_status bk_polynomial_vertex(const bk_polytope* p, const char* coefficients_json, bk_polynomial** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto f = vertex_polynomial(p->polytope, coefficients_or_ones(p->polytope, coefficients_json));
        *out = new bk_polynomial{p->polytope, std::move(f)};
    });
}

void bk_polynomial_free(bk_polynomial* f) { delete f; }

bk_status bk_polynomial_json(const bk_polynomial* f, char** out_json) {
    if (!f) return null_argument("f");
    if (!out_json) return null_argument("out_json");
    return guarded([&] { emit(to_json(f->f), out_json); });
}

bk_status bk_polynomial_certificate_json(const bk_polynomial* f, int assume_nondegenerate, char** out_json) {
    if (!f) return null_argument("f");
    if (!out_json) return null_argument("out_json");
    return guarded([&] { emit(to_json(certificate_for(f->f, assume_nondegenerate)), out_json); });
}

bk_status bk_check_json(const bk_polytope* p, const char* coefficients_json, int assume_nondegenerate,
                        char** out_json) {
    if (!p) return null_argument("p");
    if (!out_json) return null_argument("out_json");
    return guarded([&] {
        const auto& poly = p->polytope;
        if (!poly.origin_interior()) fail(ErrorCode::OriginNotInterior, "the origin is not in the interior of the polytope");
        json j;
        j["name"] = p->name;
        j["polytope"] = polytope_summary(poly);
        const auto f = vertex_polynomial(poly, coefficients_or_ones(poly, coefficients_json));
        j["polynomial"] = to_json(f);
        j["polynomial_text"] = f.to_string();
        j["convenient"] = is_convenient(f);
        j["newton_degree"] = to_string(newton_degree(f, poly));
        j["certificate"] = to_json(certificate_for(f, assume_nondegenerate));
        json warnings = json::array();
        if (!is_reflexive(poly)) warnings.push_back("polytope is not reflexive");
        if (is_reflexive(poly) && !is_smooth(poly)) {
            warnings.push_back("polytope is reflexive but not smooth: h-vector comparison unavailable");
        }
        j["warnings"] = std::move(warnings);
        emit(j, out_json);
    });
}

bk_status bk_jacobian_build(const bk_polynomial* f, int assume_nondegenerate, bk_jacobian** out) {
    if (!f) return null_argument("f");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto ring = build_graded_jacobian(f->f, f->polytope, certificate_for(f->f, assume_nondegenerate));
        *out = new bk_jacobian{std::move(ring)};
    });
}

void bk_jacobian_free(bk_jacobian* ring) { delete ring; }

size_t bk_jacobian_mu(const bk_jacobian* ring) { return ring ? ring->ring.mu() : 0; }

bk_status bk_jacobian_json(const bk_jacobian* ring, int full, char** out_json) {
    if (!ring) return null_argument("ring");
    if (!out_json) return null_argument("out_json");
    return guarded([&] { emit(to_json(ring->ring, full != 0), out_json); });
}

bk_status bk_spectrum_json(const bk_jacobian* ring, char** out_json) {
    if (!ring) return null_argument("ring");
    if (!out_json) return null_argument("out_json");
    return guarded([&] {
        const auto s = spectrum(ring->ring);
        emit(json{{"dim", ring->ring.dim()}, {"mu", s.total()}, {"spectrum", to_json(s)}}, out_json);
    });
}

bk_status bk_lefschetz_json(const bk_jacobian* ring, char** out_json) {
    if (!ring) return null_argument("ring");
    if (!out_json) return null_argument("out_json");
    return guarded([&] { emit(to_json(lefschetz_check(ring->ring)), out_json); });
}

bk_status bk_kkp_report_json(const bk_polytope* p, const char* coefficients_json, const bk_kkp_options* options,
                             char** out_json) {
    if (!p) return null_argument("p");
    if (!out_json) return null_argument("out_json");
    return guarded([&] {
        KKPOptions opts;
        if (options) {
            opts.trials = options->trials;
            opts.seed = options->seed;
            opts.assume_nondegenerate = options->assume_nondegenerate != 0;
        }
        const auto coeffs = coefficients_or_ones(p->polytope, coefficients_json);
        emit(to_json(kkp_report(p->polytope, coeffs, opts, p->name)), out_json);
    });
}

}  // extern "C"

#ifndef BRIESKORN_SERIALIZE_HPP
#define BRIESKORN_SERIALIZE_HPP

#include "brieskorn/error.hpp"
#include "brieskorn/hodge.hpp"
#include "brieskorn/jacobian.hpp"
#include "brieskorn/laurent.hpp"
#include "brieskorn/polytope.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace brieskorn {

using json = nlohmann::ordered_json;

struct PolytopeFile {
    LatticePolytope polytope;
    std::string name;  // "name" field when present
};

/// {"dim": n, "vertices": [[...], ...]} with integer entries, optional "name".
/// Throws MalformedInput and the LatticePolytope construction errors.
PolytopeFile parse_polytope(std::string_view text);

/// {"<vertex index>": "p/q", ...}; JSON integers are accepted as values.
/// An optional wrapping {"coefficients": {...}} object is also accepted.
std::map<std::size_t, Rational> parse_coefficients(std::string_view text);

json to_json(const LaurentPolynomial& f);
json to_json(const NondegeneracyCertificate& cert);

/// Polytope properties: facets, reflexivity, simpliciality, smoothness,
/// volume, h-vector and dual when defined.
json polytope_summary(const LatticePolytope& p);

json to_json(const GradedJacobianRing& ring, bool full);
json to_json(const Spectrum& s);
json to_json(const LefschetzResult& r);
json to_json(const WeightFiltrationData& w);
json to_json(const HodgeNumbers& h);
json to_json(const HodgeTateVerdict& v);
json to_json(const ConstancyResult& c);
json to_json(const KKPReport& report);

json error_json(ErrorCode code, std::string_view message);

}  // namespace brieskorn

#endif

#include "brieskorn/serialize.hpp"

#include "brieskorn/error.hpp"

#include <charconv>
#include <optional>

namespace brieskorn {

namespace {

json point_json(const Point& p) {
    json a = json::array();
    for (auto x : p) a.push_back(x);
    return a;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
}

json dims_json(const std::map<int, std::size_t>& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = v;
    return o;
}

}  // namespace

PolytopeFile parse_polytope(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) fail(ErrorCode::MalformedInput, "polytope file must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() <= 0) {
        fail(ErrorCode::MalformedInput, "polytope file needs a positive integer \"dim\"");
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        fail(ErrorCode::MalformedInput, "polytope file needs a \"vertices\" array");
    }
    const auto dim = doc["dim"].get<std::size_t>();
    std::vector<Point> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array()) fail(ErrorCode::MalformedInput, "each vertex must be an array of integers");
        Point p;
        for (const auto& x : v) {
            if (!x.is_number_integer()) {
                fail(ErrorCode::MalformedInput, "vertex entries must be integers, got " + x.dump());
            }
            p.push_back(x.get<std::int64_t>());
        }
        vertices.push_back(std::move(p));
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(ErrorCode::MalformedInput, "\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    return {LatticePolytope::from_vertices(dim, std::move(vertices)), std::move(name)};
}

std::map<std::size_t, Rational> parse_coefficients(std::string_view text) {
    json doc = parse_document(text);
    if (doc.is_object() && doc.contains("coefficients")) doc = doc["coefficients"];
    if (!doc.is_object()) fail(ErrorCode::MalformedInput, "coefficient file must map vertex indices to rationals");

    std::map<std::size_t, Rational> out;
    for (const auto& [key, value] : doc.items()) {
        std::size_t index = 0;
        const auto* end = key.data() + key.size();
        auto [ptr, ec] = std::from_chars(key.data(), end, index);
        if (ec != std::errc() || ptr != end || key.empty()) {
            fail(ErrorCode::MalformedInput, "coefficient key '" + key + "' is not a vertex index");
        }
        Rational q;
        if (value.is_string()) {
            q = parse_rational(value.get<std::string>());
        } else if (value.is_number_integer()) {
            q = Rational(value.get<long>());
        } else {
            fail(ErrorCode::MalformedInput, "coefficient for vertex " + key + " must be a \"p/q\" string");
        }
        out.emplace(index, q);
    }
    return out;
}

json to_json(const LaurentPolynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back(json::array({point_json(m), to_string(c)}));
    return terms;
}

json to_json(const NondegeneracyCertificate& cert) {
    return json{{"status", to_string(cert.status)}, {"detail", cert.detail}};
}

json polytope_summary(const LatticePolytope& p) {
    json out;
    out["dim"] = p.dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(point_json(v));
    out["vertices"] = std::move(verts);
    out["origin_interior"] = p.origin_interior();
    if (p.origin_interior()) {
        json fs = json::array();
        for (const auto& f : p.facets()) {
            json form = json::array();
            for (const auto& c : f.supporting_form) form.push_back(to_string(c));
            fs.push_back(json{{"supporting_form", std::move(form)}, {"vertex_indices", f.vertex_indices}});
        }
        out["facets"] = std::move(fs);
    }
    const bool simplicial = is_simplicial(p);
    out["reflexive"] = is_reflexive(p);
    out["simplicial"] = simplicial;
    out["smooth"] = is_smooth(p);
    out["normalized_volume"] = normalized_volume(p);
    out["h_vector"] = simplicial ? json(h_vector(p)) : json(nullptr);
    if (is_reflexive(p)) {
        json dv = json::array();
        const auto dual = dual_polytope(p);
        for (const auto& v : dual.vertices()) dv.push_back(point_json(v));
        out["dual_vertices"] = std::move(dv);
    } else {
        out["dual_vertices"] = nullptr;
    }
    return out;
}

json to_json(const GradedJacobianRing& ring, bool full) {
    json out;
    out["dim"] = ring.dim();
    out["mu"] = ring.mu();
    out["normalized_volume"] = ring.normalized_volume();
    out["certificate"] = to_json(ring.certificate());
    json degrees = json::array();
    for (const auto& d : ring.attained_degrees()) degrees.push_back(to_string(d));
    out["attained_degrees"] = std::move(degrees);

    std::optional<NilpotentOperator> op;
    if (full) op.emplace(ring);

    json pieces = json::array();
    for (const auto& [d, piece] : ring.pieces()) {
        json pj;
        pj["degree"] = to_string(d);
        pj["dim"] = piece.dim();
        pj["ambient_size"] = piece.ambient_basis().size();
        pj["relation_rank"] = piece.relation_rank();
        json basis = json::array();
        for (const auto& m : piece.quotient_basis()) basis.push_back(point_json(m));
        pj["quotient_basis"] = std::move(basis);
        if (full) {
            json ambient = json::array();
            for (const auto& m : piece.ambient_basis()) ambient.push_back(point_json(m));
            pj["ambient_basis"] = std::move(ambient);
            pj["relation_matrix"] = matrix_json(piece.relation_matrix());
            pj["f_block"] = matrix_json(op->block(d));
        }
        pieces.push_back(std::move(pj));
    }
    out["pieces"] = std::move(pieces);
    if (full) out["total_matrix"] = matrix_json(op->total_matrix());
    return out;
}

json to_json(const Spectrum& s) {
    json a = json::array();
    for (const auto& e : s.pairs) a.push_back(json::array({to_string(e.degree), e.multiplicity}));
    return a;
}

json to_json(const LefschetzResult& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back(json{{"alpha", to_string(v.alpha)},
                                {"center", v.center},
                                {"k", v.k},
                                {"power", v.power},
                                {"source_degree", to_string(v.source_degree)},
                                {"target_degree", to_string(v.target_degree)},
                                {"source_dim", v.source_dim},
                                {"target_dim", v.target_dim},
                                {"isomorphism", v.isomorphism},
                                {"reason", v.reason}});
    }
    return json{{"pass", r.pass}, {"verdicts", std::move(verdicts)}};
}

json to_json(const WeightFiltrationData& w) {
    return json{{"center", w.center}, {"graded_dims", dims_json(w.graded_dims)}, {"jordan_type", w.jordan_type}};
}

json to_json(const HodgeNumbers& h) {
    json entries = json::array();
    for (const auto& e : h.entries) {
        entries.push_back(json{{"alpha", to_string(e.alpha)}, {"p", e.p}, {"q", e.q}, {"h", e.h}});
    }
    return json{{"unipotent", h.unipotent}, {"entries", std::move(entries)}};
}

json to_json(const HodgeTateVerdict& v) {
    json sectors = json::array();
    for (const auto& s : v.sectors) {
        sectors.push_back(json{{"alpha", to_string(s.alpha)},
                               {"center", s.center},
                               {"via_lefschetz", s.via_lefschetz},
                               {"via_dims", s.via_dims},
                               {"hodge_dims_by_2p", dims_json(s.hodge_dims)},
                               {"weight_filtration", to_json(s.weights)}});
    }
    return json{{"via_lefschetz", v.via_lefschetz}, {"via_dims", v.via_dims}, {"sectors", std::move(sectors)}};
}

json to_json(const ConstancyResult& c) {
    json trials = json::array();
    for (const auto& t : c.trials) {
        json coeffs = json::array();
        for (const auto& a : t.coefficients) coeffs.push_back(to_string(a));
        json dims = json::array();
        for (const auto& [d, k] : t.dims) dims.push_back(json::array({to_string(d), k}));
        trials.push_back(json{{"coefficients", std::move(coeffs)},
                              {"graded_dims", std::move(dims)},
                              {"via_lefschetz", t.via_lefschetz},
                              {"via_dims", t.via_dims}});
    }
    return json{{"seed", c.seed},
                {"constant", c.constant},
                {"criteria_agree", c.criteria_agree},
                {"trials", std::move(trials)}};
}

json to_json(const KKPReport& r) {
    json out;
    out["polytope_id"] = r.polytope_id;
    out["dim"] = r.dim;
    json coeffs = json::array();
    for (const auto& a : r.coefficients) coeffs.push_back(to_string(a));
    out["coefficients"] = std::move(coeffs);
    out["certificate"] = to_json(r.certificate);
    out["mu"] = r.mu;
    out["normalized_volume"] = r.normalized_volume;
    out["spectrum"] = to_json(r.spectrum);
    out["hodge_numbers"] = to_json(r.hodge_numbers);
    out["weight_graded"] = dims_json(r.weight_graded);
    out["jordan_type"] = r.jordan_type;
    out["lefschetz"] = to_json(r.lefschetz);
    out["hodge_tate"] = to_json(r.hodge_tate);
    if (r.kkp_equality) out["kkp_equality"] = *r.kkp_equality;
    out["h_vector"] = r.h_vector ? json(*r.h_vector) : json(nullptr);
    out["h_vector_match"] = r.h_vector_match ? json(*r.h_vector_match) : json(nullptr);
    if (r.constancy) out["constancy"] = to_json(*r.constancy);
    out["warnings"] = r.warnings;
    out["metadata"] = json{{"operator_sign", r.operator_sign_note}};
    return out;
}

json error_json(ErrorCode code, std::string_view message) {
    return json{{"error", std::string(to_string(code))}, {"message", std::string(message)}};
}

}  // namespace brieskorn

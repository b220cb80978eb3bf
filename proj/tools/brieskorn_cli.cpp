// Command-line front end. Links only against the C interface.

#include "brieskorn/brieskorn.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string command;
    std::string polytope_path;
    std::optional<std::string> coeffs_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned trials = 0;
    bool full = false;
    bool assume_nondegenerate = false;
};

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct PolytopeDeleter {
    void operator()(bk_polytope* p) const { bk_polytope_free(p); }
};
struct PolynomialDeleter {
    void operator()(bk_polynomial* p) const { bk_polynomial_free(p); }
};
struct JacobianDeleter {
    void operator()(bk_jacobian* p) const { bk_jacobian_free(p); }
};
using PolytopeHandle = std::unique_ptr<bk_polytope, PolytopeDeleter>;
using PolynomialHandle = std::unique_ptr<bk_polynomial, PolynomialDeleter>;
using JacobianHandle = std::unique_ptr<bk_jacobian, JacobianDeleter>;

struct Failure {
    bk_status status;
    std::string message;
};

void check(bk_status s) {
    if (s != BK_OK) throw Failure{s, bk_last_error_message()};
}

json take_json(char* raw) {
    std::unique_ptr<char, void (*)(char*)> owned(raw, bk_string_free);
    return json::parse(owned.get());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{BK_ERR_IO, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const json& arr, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += sep;
        s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return s;
}

std::string spectrum_text(const json& spectrum) {
    std::string s;
    for (const auto& e : spectrum) {
        if (!s.empty()) s += " ";
        s += "(" + e[0].get<std::string>() + "," + e[1].dump() + ")";
    }
    return s;
}

std::string yes_no(const json& b) {
    if (b.is_null()) return "n/a";
    return b.get<bool>() ? "true" : "false";
}

void render_check(const json& j, std::ostream& os) {
    const auto& p = j["polytope"];
    os << "polytope: " << j["name"].get<std::string>() << " (dim " << p["dim"] << ", " << p["vertices"].size()
       << " vertices)\n";
    for (const auto& f : p["facets"]) {
        os << "  facet L = (" << join(f["supporting_form"]) << ") on vertices {" << join(f["vertex_indices"]) << "}\n";
    }
    os << "reflexive: " << yes_no(p["reflexive"]) << "\n"
       << "simplicial: " << yes_no(p["simplicial"]) << "\n"
       << "smooth: " << yes_no(p["smooth"]) << "\n"
       << "normalized volume: " << p["normalized_volume"] << "\n";
    if (!p["h_vector"].is_null()) os << "h-vector: (" << join(p["h_vector"]) << ")\n";
    os << "f = " << j["polynomial_text"].get<std::string>() << "\n"
       << "convenient: " << yes_no(j["convenient"]) << "\n"
       << "certificate: " << j["certificate"]["status"].get<std::string>() << " ("
       << j["certificate"]["detail"].get<std::string>() << ")\n";
    for (const auto& w : j["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
}

void render_jacobian(const json& j, std::ostream& os) {
    os << "mu = " << j["mu"] << " (normalized volume " << j["normalized_volume"] << ")\n";
    os << "certificate: " << j["certificate"]["status"].get<std::string>() << "\n";
    for (const auto& piece : j["pieces"]) {
        os << "  A_" << piece["degree"].get<std::string>() << ": dim " << piece["dim"] << " (stratum "
           << piece["ambient_size"] << ", relation rank " << piece["relation_rank"] << ")";
        if (!piece["quotient_basis"].empty()) {
            os << " basis";
            for (const auto& m : piece["quotient_basis"]) os << " x^(" << join(m) << ")";
        }
        os << "\n";
    }
}

void render_lefschetz(const json& j, std::ostream& os) {
    for (const auto& v : j["verdicts"]) {
        os << "alpha=" << v["alpha"].get<std::string>() << " k=" << v["k"] << ": [f]^" << v["power"] << ": A_"
           << v["source_degree"].get<std::string>() << " -> A_" << v["target_degree"].get<std::string>() << " "
           << (v["isomorphism"].get<bool>() ? "iso" : "not iso") << " (" << v["reason"].get<std::string>() << ")\n";
    }
    os << "hard lefschetz: " << (j["pass"].get<bool>() ? "pass" : "fail") << "\n";
}

void render_kkp(const json& r, std::ostream& os) {
    os << "polytope: " << r["polytope_id"].get<std::string>() << " (dim " << r["dim"] << ")\n"
       << "coefficients: (" << join(r["coefficients"]) << ")\n"
       << "certificate: " << r["certificate"]["status"].get<std::string>() << "\n"
       << "mu = " << r["mu"] << " (normalized volume " << r["normalized_volume"] << ")\n"
       << "spectrum: " << spectrum_text(r["spectrum"]) << "\n";
    os << "hodge numbers:";
    for (const auto& e : r["hodge_numbers"]["entries"]) {
        os << " h^{" << e["p"] << "," << e["q"] << "}";
        if (e["alpha"].get<std::string>() != "0") os << "_" << e["alpha"].get<std::string>();
        os << "=" << e["h"];
    }
    os << "\n";
    os << "weight graded (p: dim gr_2p^W):";
    for (const auto& [p, d] : r["weight_graded"].items()) os << " " << p << ":" << d;
    os << "\n"
       << "jordan type: (" << join(r["jordan_type"]) << ")\n"
       << "hard lefschetz: " << (r["lefschetz"]["pass"].get<bool>() ? "pass" : "fail") << "\n"
       << "hodge-tate: via_lefschetz=" << yes_no(r["hodge_tate"]["via_lefschetz"])
       << " via_dims=" << yes_no(r["hodge_tate"]["via_dims"]) << "\n";
    os << "kkp_equality: " << (r.contains("kkp_equality") ? yes_no(r["kkp_equality"]) : std::string("n/a")) << "\n";
    os << "h_vector_match: " << yes_no(r["h_vector_match"]) << "\n";
    if (r.contains("constancy")) {
        const auto& c = r["constancy"];
        os << "constancy over " << c["trials"].size() << " random coefficient vectors (seed " << c["seed"]
           << "): " << (c["constant"].get<bool>() ? "constant" : "VARIES")
           << ", criteria agree: " << yes_no(c["criteria_agree"]) << "\n";
    }
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
}

json run_json(const RunConfig& cfg) {
    bk_polytope* raw_poly = nullptr;
    check(bk_polytope_load(cfg.polytope_path.c_str(), &raw_poly));
    PolytopeHandle poly(raw_poly);

    std::optional<std::string> coeffs;
    if (cfg.coeffs_path) coeffs = read_file(*cfg.coeffs_path);
    const char* coeffs_c = coeffs ? coeffs->c_str() : nullptr;
    const int assume = cfg.assume_nondegenerate ? 1 : 0;
    char* out = nullptr;

    if (cfg.command == "check") {
        check(bk_check_json(poly.get(), coeffs_c, assume, &out));
        return take_json(out);
    }
    if (cfg.command == "kkp") {
        bk_kkp_options opts{cfg.trials, cfg.seed, assume};
        check(bk_kkp_report_json(poly.get(), coeffs_c, &opts, &out));
        return take_json(out);
    }

    bk_polynomial* raw_f = nullptr;
    check(bk_polynomial_vertex(poly.get(), coeffs_c, &raw_f));
    PolynomialHandle f(raw_f);
    bk_jacobian* raw_ring = nullptr;
    check(bk_jacobian_build(f.get(), assume, &raw_ring));
    JacobianHandle ring(raw_ring);

    if (cfg.command == "jacobian") {
        check(bk_jacobian_json(ring.get(), cfg.full ? 1 : 0, &out));
    } else if (cfg.command == "spectrum") {
        check(bk_spectrum_json(ring.get(), &out));
    } else {
        check(bk_lefschetz_json(ring.get(), &out));
    }
    return take_json(out);
}

Outcome run_single(const RunConfig& cfg) {
    Outcome o;
    std::ostringstream os;
    try {
        const json j = run_json(cfg);
        if (cfg.format == "json") {
            os << j.dump(2) << "\n";
        } else if (cfg.command == "check") {
            render_check(j, os);
        } else if (cfg.command == "jacobian") {
            render_jacobian(j, os);
        } else if (cfg.command == "spectrum") {
            os << "spectrum: " << spectrum_text(j["spectrum"]) << "\n";
        } else if (cfg.command == "lefschetz") {
            render_lefschetz(j, os);
        } else {
            render_kkp(j, os);
        }
        o.out = os.str();
    } catch (const Failure& f) {
        o.exit_code = bk_exit_code(f.status);
        if (cfg.format == "json") {
            o.out = json{{"error", bk_status_name(f.status)}, {"message", f.message}}.dump(2) + "\n";
        }
        o.err = std::string("error: ") + bk_status_name(f.status) + ": " + f.message + "\n";
    }
    return o;
}

unsigned thread_cap(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BRIESKORN_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = static_cast<unsigned>(v);
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct BatchEntry {
    std::string file;
    int exit_code = 0;
    std::optional<json> report;
    std::string error;
};

Outcome run_batch(const RunConfig& cfg) {
    Outcome o;
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(cfg.polytope_path, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    if (ec) {
        o.exit_code = bk_exit_code(BK_ERR_IO);
        o.err = "error: IOError: cannot list " + cfg.polytope_path + "\n";
        return o;
    }
    std::sort(files.begin(), files.end());

    std::vector<BatchEntry> entries(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            RunConfig one = cfg;
            one.command = "kkp";
            one.polytope_path = files[i].string();
            one.coeffs_path.reset();
            BatchEntry& e = entries[i];
            e.file = files[i].filename().string();
            try {
                e.report = run_json(one);
            } catch (const Failure& f) {
                e.exit_code = bk_exit_code(f.status);
                e.error = std::string(bk_status_name(f.status)) + ": " + f.message;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned threads = thread_cap(files.size());
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& e : entries) {
            json j{{"file", e.file}, {"exit_code", e.exit_code}};
            if (e.report) {
                j["report"] = *e.report;
            } else {
                j["error"] = e.error;
            }
            arr.push_back(std::move(j));
        }
        os << json{{"entries", std::move(arr)}}.dump(2) << "\n";
    } else {
        os << std::left << std::setw(28) << "polytope" << std::setw(6) << "mu" << std::setw(36) << "spectrum"
           << std::setw(6) << "HL" << "KKP\n";
        for (const auto& e : entries) {
            os << std::setw(28) << e.file;
            if (!e.report) {
                os << "error " << e.error << "\n";
                continue;
            }
            const auto& r = *e.report;
            const std::string kkp = r.contains("kkp_equality") ? yes_no(r["kkp_equality"]) : "n/a";
            os << std::setw(6) << r["mu"].dump() << std::setw(36) << spectrum_text(r["spectrum"]) << std::setw(6)
               << (r["lefschetz"]["pass"].get<bool>() ? "pass" : "fail") << kkp << "\n";
        }
    }
    for (const auto& e : entries) o.exit_code = std::max(o.exit_code, e.exit_code);
    o.out = os.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-graded Jacobian rings, spectra at infinity and Hodge-Tate checks for Laurent polynomials"};
    app.set_version_flag("--version", std::string(bk_version()));

    RunConfig cfg;
    std::string coeffs;
    std::optional<unsigned> trials;
    app.add_option("command", cfg.command, "check | jacobian | spectrum | lefschetz | kkp | batch")
        ->required()
        ->check(CLI::IsMember({"check", "jacobian", "spectrum", "lefschetz", "kkp", "batch"}));
    app.add_option("input", cfg.polytope_path, "polytope JSON file (a directory for batch)")->required();
    app.add_option("--coeffs", coeffs, "coefficient JSON file mapping vertex index to \"p/q\" (default: all 1)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--trials", trials, "random coefficient vectors for the constancy test")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for the random coefficient vectors");
    app.add_flag("--full", cfg.full, "include relation and operator matrices");
    app.add_flag("--assume-nondegenerate", cfg.assume_nondegenerate, "accept inputs whose nondegeneracy is not certified");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    if (!coeffs.empty()) cfg.coeffs_path = coeffs;
    if (trials) cfg.trials = *trials;

    const Outcome o = cfg.command == "batch" ? run_batch(cfg) : run_single(cfg);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}

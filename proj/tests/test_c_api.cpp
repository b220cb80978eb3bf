#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "brieskorn/brieskorn.h"

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>
#include <vector>

using json = nlohmann::json;

namespace {

json take(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    bk_string_free(s);
    return j;
}

const char* kTriangle = R"({"name": "p2", "dim": 2, "vertices": [[1,0],[0,1],[-1,-1]]})";

}  // namespace

TEST_CASE("polytope handle") {
    bk_polytope* p = nullptr;
    REQUIRE(bk_polytope_from_json(kTriangle, &p) == BK_OK);
    CHECK(bk_polytope_dim(p) == 2);
    CHECK(bk_polytope_vertex_count(p) == 3);
    CHECK(std::string(bk_polytope_name(p)) == "p2");
    char* out = nullptr;
    REQUIRE(bk_polytope_summary_json(p, &out) == BK_OK);
    CHECK(take(out)["normalized_volume"] == 3);
    bk_polytope_free(p);
}

TEST_CASE("errors carry a status and message") {
    bk_polytope* p = nullptr;
    CHECK(bk_polytope_from_json("{", &p) == BK_ERR_MALFORMED_INPUT);
    CHECK(p == nullptr);
    CHECK(std::string(bk_last_error_message()).size() > 0);
    CHECK(bk_polytope_from_json(nullptr, &p) == BK_ERR_INVALID_ARGUMENT);
    CHECK(bk_polytope_load("/nonexistent/file.json", &p) == BK_ERR_IO);
    CHECK(std::string(bk_status_name(BK_ERR_DEGENERACY_DETECTED)) == "DegeneracyDetected");
}

TEST_CASE("exit code mapping") {
    CHECK(bk_exit_code(BK_OK) == 0);
    CHECK(bk_exit_code(BK_ERR_DEGENERACY_DETECTED) == 2);
    CHECK(bk_exit_code(BK_ERR_NONDEGENERACY_UNVERIFIED) == 2);
    CHECK(bk_exit_code(BK_ERR_SPECTRUM_ASYMMETRY) == 2);
    CHECK(bk_exit_code(BK_ERR_ORIGIN_NOT_INTERIOR) == 3);
    CHECK(bk_exit_code(BK_ERR_ZERO_COEFFICIENT) == 3);
    CHECK(bk_exit_code(BK_ERR_MALFORMED_INPUT) == 3);
}

TEST_CASE("pipeline through handles") {
    bk_polytope* p = nullptr;
    REQUIRE(bk_polytope_from_json(kTriangle, &p) == BK_OK);
    bk_polynomial* f = nullptr;
    REQUIRE(bk_polynomial_vertex(p, R"({"0": "2", "1": "-1/3", "2": "5"})", &f) == BK_OK);
    char* out = nullptr;
    REQUIRE(bk_polynomial_certificate_json(f, 0, &out) == BK_OK);
    CHECK(take(out)["status"] == "certified-smooth-vertex");

    bk_jacobian* ring = nullptr;
    REQUIRE(bk_jacobian_build(f, 0, &ring) == BK_OK);
    CHECK(bk_jacobian_mu(ring) == 3);
    REQUIRE(bk_spectrum_json(ring, &out) == BK_OK);
    CHECK(take(out)["spectrum"] == json::parse(R"([["0",1],["1",1],["2",1]])"));
    REQUIRE(bk_lefschetz_json(ring, &out) == BK_OK);
    CHECK(take(out)["pass"] == true);
    REQUIRE(bk_jacobian_json(ring, 1, &out) == BK_OK);
    CHECK(take(out).contains("total_matrix"));

    bk_jacobian_free(ring);
    bk_polynomial_free(f);

    bk_polynomial* bad = nullptr;
    CHECK(bk_polynomial_vertex(p, R"({"0": "2", "1": "0", "2": "5"})", &bad) == BK_ERR_ZERO_COEFFICIENT);
    CHECK(bad == nullptr);
    bk_polytope_free(p);
}

TEST_CASE("kkp report and check") {
    bk_polytope* p = nullptr;
    REQUIRE(bk_polytope_from_json(kTriangle, &p) == BK_OK);
    bk_kkp_options opts{5, 3, 0};
    char* out = nullptr;
    REQUIRE(bk_kkp_report_json(p, nullptr, &opts, &out) == BK_OK);
    const json r = take(out);
    CHECK(r["kkp_equality"] == true);
    CHECK(r["constancy"]["constant"] == true);
    REQUIRE(bk_check_json(p, nullptr, 0, &out) == BK_OK);
    CHECK(take(out)["certificate"]["status"] == "certified-smooth-vertex");
    bk_polytope_free(p);

    REQUIRE(bk_polytope_from_json(R"({"dim": 1, "vertices": [[0],[1]]})", &p) == BK_OK);
    CHECK(bk_kkp_report_json(p, nullptr, nullptr, &out) == BK_ERR_ORIGIN_NOT_INTERIOR);
    CHECK(bk_check_json(p, nullptr, 0, &out) == BK_ERR_ORIGIN_NOT_INTERIOR);
    bk_polytope_free(p);
}

TEST_CASE("handles are usable from several threads") {
    bk_polytope* p = nullptr;
    REQUIRE(bk_polytope_from_json(kTriangle, &p) == BK_OK);
    std::vector<std::thread> threads;
    std::vector<int> ok(4, 0);
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            char* out = nullptr;
            if (bk_kkp_report_json(p, nullptr, nullptr, &out) == BK_OK) {
                ok[t] = json::parse(out)["mu"] == 3;
                bk_string_free(out);
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(ok == std::vector<int>{1, 1, 1, 1});
    bk_polytope_free(p);
}

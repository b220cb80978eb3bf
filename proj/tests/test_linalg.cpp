#include "brieskorn/error.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/rational.hpp"

#include <doctest.h>

using namespace brieskorn;

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
    return m;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;  // sentinel, checked against the expected code
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    for (const char* bad : {"", "1/0", "x", "1.5", "1/", "/2", "1 /2"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { parse_rational(bad); }) == ErrorCode::MalformedInput);
    }
}

TEST_CASE("floor, ceil and fractional part") {
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(frac(Rational(5)) == 0);
    CHECK(lcm_of_denominators({Rational(1, 4), Rational(5, 6), Rational(2)}) == 12);
}

TEST_CASE("rank and determinant") {
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix::identity(5)) == 5);
    CHECK(determinant(from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("matrix product and powers") {
    const Matrix shift = from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(power(shift, 2) == shift * shift);
    CHECK(!power(shift, 2).is_zero());
    CHECK(power(shift, 3).is_zero());
    CHECK(power(shift, 0) == Matrix::identity(3));
    CHECK(shift.transposed()(0, 1) == 1);
}

TEST_CASE("reduced span gives a canonical complement") {
    ReducedSpan span(3, {{Rational(1), Rational(1), Rational(0)}, {Rational(2), Rational(2), Rational(0)}});
    CHECK(span.rank() == 1);
    CHECK(span.pivots() == std::vector<std::size_t>{0});
    CHECK(span.free_columns() == std::vector<std::size_t>{1, 2});
    // (3, 1, 5) = 3*(1,1,0) + (0,-2,5)
    const auto r = span.reduce({Rational(3), Rational(1), Rational(5)});
    CHECK(r == std::vector<Rational>{Rational(0), Rational(-2), Rational(5)});
}

TEST_CASE("kernel line") {
    const auto k = kernel_line(from_rows({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(k.size() == 3);
    CHECK(k[0] != 0);  // kernel is spanned by (1,-1,1)
    CHECK(k[0] + k[1] == 0);
    CHECK(k[1] + k[2] == 0);
    CHECK(kernel_line(from_rows({{1, 0, 0}})).empty());
    CHECK(kernel_line(Matrix::identity(2)).empty());
}

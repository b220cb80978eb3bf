#include "brieskorn/rational.hpp"

#include "brieskorn/error.hpp"

#include <cctype>
#include <limits>

namespace brieskorn {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        fail(ErrorCode::MalformedInput, "not a rational number: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(parse_integer(num));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        fail(ErrorCode::MalformedInput, "not a rational number: '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) fail(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational floor(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

Rational ceil(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

std::int64_t to_int64(const Rational& value) {
    if (!is_integer(value) || !value.get_num().fits_slong_p()) {
        fail(ErrorCode::InvalidArgument, "value " + to_string(value) + " is not a machine integer");
    }
    return value.get_num().get_si();
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer acc = 1;
    for (const auto& v : values) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_den_mpz_t());
    }
    return acc;
}

}  // namespace brieskorn

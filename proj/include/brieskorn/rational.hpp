#ifndef BRIESKORN_RATIONAL_HPP
#define BRIESKORN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace brieskorn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q nonzero) into a canonical rational.
/// Throws Error(MalformedInput) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational floor(const Rational& value);
Rational ceil(const Rational& value);

/// Fractional part in [0, 1).
inline Rational frac(const Rational& value) { return value - floor(value); }

std::int64_t to_int64(const Rational& value);

Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace brieskorn

#endif

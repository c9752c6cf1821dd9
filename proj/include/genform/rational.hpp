#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace genform {

// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a", "a/b" (b != 0). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

// "3", "-1/2"; the DSL form of a rational constant.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace genform

#ifndef SINGSPEC_RATIONAL_HPP
#define SINGSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace singspec {

/// Exact arbitrary-precision fraction. Always kept canonical (lowest terms,
/// positive denominator); every helper below returns canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
bool is_integral(const Rational& r);

/// floor(r) as a machine integer; throws std::overflow_error if it does not fit.
std::int64_t floor_i64(const Rational& r);
std::int64_t ceil_i64(const Rational& r);
std::int64_t to_i64(const Integer& z);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p" (optional leading '-'). Decimal points, exponents,
/// whitespace and zero denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

std::int64_t lcm_of(const std::vector<std::int64_t>& values);

/// Sorts ascending and removes duplicates.
void sort_unique(std::vector<Rational>& values);

}  // namespace singspec

#endif  // SINGSPEC_RATIONAL_HPP

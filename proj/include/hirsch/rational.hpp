#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hirsch {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, zero as
// 0/1) after every arithmetic operation, so equality is structural. The
// two-argument mpq_class constructor does not; build fractions with ratio().
using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/// num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "[+-]digits[/digits]". Decimals and zero denominators are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Smallest positive multiple of `v` with integer entries and unit content.
/// The zero vector maps to the zero vector.
ZVector primitive_integer(std::span<const Rational> v);
ZVector primitive_integer(std::span<const Integer> v);

QVector to_rational(std::span<const Integer> v);

/// Lexicographic comparison, shorter vectors first on a common prefix.
template <class T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace hirsch

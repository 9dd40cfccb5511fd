#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vgit {

/// Exact rational number. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Raised for inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "p/q" or "-p/q" with q > 0 into a canonical rational.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" with q > 0; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& value);

/// Short form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// A point of the rational projective line: a rational or the point at infinity.
class Slope {
 public:
  Slope(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Slope infinity() { return Slope(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }

 private:
  Slope() = default;
  std::optional<Rational> value_;
};

std::string to_string(const Slope& slope);

}  // namespace vgit

#pragma once
// Exact arithmetic: rationals (GMP) and finite sums of rational multiples of
// square roots of square-free positive integers.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gtbcd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative radicand, non-dominant weight, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an argument has the wrong shape (row lengths, term counts).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check of a construction fails.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a", "-a" or "a/b" into a canonical rational; throws ShapeError.
Rational parse_rational(const std::string& text);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Decomposes n > 0 as s^2 * r with r square-free; returns {s, r}.
std::pair<Integer, Integer> square_free_decomposition(const Integer& n);

/// An exact real number sum_r c_r * sqrt(r) with square-free radicands r >= 1
/// and nonzero rational coefficients.  The term map is canonical, so equality
/// of values is equality of maps.
class AlgebraicValue {
 public:
  using TermMap = std::map<Integer, Rational>;

  AlgebraicValue() = default;
  AlgebraicValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicValue(long q);             // NOLINT(google-explicit-constructor)

  /// The nonnegative square root of q >= 0; DomainError for q < 0.
  static AlgebraicValue sqrt_of(const Rational& q);
  /// coeff * sqrt(radicand) for any positive integer radicand.
  static AlgebraicValue term(const Rational& coeff, const Integer& radicand);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// True when the value is rational (no irrational term).
  bool is_rational() const;

  AlgebraicValue operator-() const;
  AlgebraicValue& operator+=(const AlgebraicValue& other);
  AlgebraicValue& operator-=(const AlgebraicValue& other);
  AlgebraicValue& operator*=(const AlgebraicValue& other);
  AlgebraicValue& operator*=(const Rational& q);
  friend AlgebraicValue operator+(AlgebraicValue a, const AlgebraicValue& b) { return a += b; }
  friend AlgebraicValue operator-(AlgebraicValue a, const AlgebraicValue& b) { return a -= b; }
  friend AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);
  friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraicValue& a, const AlgebraicValue& b) { return !(a == b); }

  /// Reciprocal of a nonzero single-term value; DomainError for zero,
  /// ShapeError for several terms.
  AlgebraicValue inverse() const;
  /// Sign and exact square of a single-term value; ShapeError otherwise.
  std::pair<int, Rational> signum_and_square() const;
  /// Sign of the value (exact for single-term values, via a
  /// high-precision evaluation otherwise).
  int sign() const;
  double to_double() const;
  /// Human-readable form such as "-3*sqrt(2) + 1/2".
  std::string to_string() const;

  /// (numerator, denominator, radicand) triples sorted by radicand.
  std::vector<std::array<Integer, 3>> to_triples() const;
  static AlgebraicValue from_triples(const std::vector<std::array<Integer, 3>>& triples);

 private:
  void add_term(const Integer& radicand, const Rational& coeff);
  TermMap terms_;
};

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);

}  // namespace gtbcd

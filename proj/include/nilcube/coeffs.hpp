#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>
#include <vector>

namespace nilcube {

/// The coefficient field: Q when characteristic() == 0, GF(p) otherwise.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
  explicit FieldSpec(unsigned p);

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_rational() const noexcept { return p_ == 0; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  unsigned p_ = 0;
};

[[nodiscard]] bool is_prime(unsigned n) noexcept;

/// An element of a FieldSpec. Rationals are kept canonical (lowest terms,
/// positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);
  static Scalar zero(FieldSpec field) { return {field, 0L}; }
  static Scalar one(FieldSpec field) { return {field, 1L}; }
  /// Parses "a", "-a" or "a/b".
  static Scalar parse(FieldSpec field, const std::string& text);

  [[nodiscard]] FieldSpec field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  /// Residue in [0, p). Throws std::logic_error in characteristic 0.
  [[nodiscard]] std::uint32_t residue() const;
  /// Throws std::logic_error in positive characteristic.
  [[nodiscard]] const mpq_class& rational() const;
  /// "num/den", "num" for integers, or the residue.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

/// Primes dividing the reduced denominator, ascending. Throws
/// std::invalid_argument in positive characteristic.
[[nodiscard]] std::vector<unsigned long> denominator_support(const Scalar& a);

/// Prime factors of |n|, ascending and without repetition.
[[nodiscard]] std::vector<unsigned long> prime_support(const mpz_class& n);

}  // namespace nilcube

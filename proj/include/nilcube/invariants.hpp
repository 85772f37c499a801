#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nilcube/coeffs.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

/// A generator of the algebra of invariants of 3x3 matrices: σ_k(X_i) or the
/// trace of a word in the generic matrices X_1, ..., X_d.
struct TraceGenerator {
  enum class Kind { Sigma, Trace };
  Kind kind = Kind::Trace;
  unsigned k = 0;      ///< Sigma only: 1..3
  Letter letter = 0;   ///< Sigma only
  Word word;           ///< Trace only
  Multidegree mdeg;

  static TraceGenerator sigma(unsigned k, Letter i);
  static TraceGenerator trace(const Word& w);

  [[nodiscard]] std::size_t degree() const;
  /// "sigma2(X1)" or "tr(X1X1X2)".
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const TraceGenerator&, const TraceGenerator&) =
      default;
};

/// Generators for one sorted multidegree (trailing zeros are ignored).
/// Throws std::invalid_argument for unsorted Δ.
[[nodiscard]] std::vector<TraceGenerator> G_delta(unsigned p,
                                                  const Multidegree& delta);

struct GeneratingSystem {
  unsigned p = 0;
  std::size_t d = 0;
  /// Keyed by the multidegree in d letters (zeros included).
  std::map<std::vector<unsigned>, std::vector<TraceGenerator>> groups;

  [[nodiscard]] std::size_t total() const;
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::map<std::size_t, std::size_t> by_degree() const;
};

/// All generators of R_{3,d}: G_delta on each sorted profile with entries at
/// most 3, spread over every arrangement of the profile among d letters.
[[nodiscard]] GeneratingSystem full_system(unsigned p, std::size_t d);

/// A 3x3 matrix over a field.
class Matrix3 {
 public:
  explicit Matrix3(FieldSpec field);
  /// Throws std::invalid_argument unless rows is 3x3.
  Matrix3(FieldSpec field, const std::vector<std::vector<long>>& rows);

  static Matrix3 identity(FieldSpec field);
  /// Uniform entries in GF(q); integers in [-9, 9] over Q.
  static Matrix3 random(FieldSpec field, std::mt19937_64& rng);

  [[nodiscard]] FieldSpec field() const noexcept { return field_; }
  [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const {
    return a_[3 * r + c];
  }
  Scalar& at(std::size_t r, std::size_t c) { return a_[3 * r + c]; }

  [[nodiscard]] Scalar trace() const;
  /// Sum of the principal 2x2 minors.
  [[nodiscard]] Scalar sigma2() const;
  [[nodiscard]] Scalar det() const;

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);

 private:
  FieldSpec field_;
  std::array<Scalar, 9> a_;
};

/// Value of the generator at X_i = matrices[i - 1]. Throws
/// std::invalid_argument when a letter has no matrix or the fields differ.
[[nodiscard]] Scalar eval_trace(const TraceGenerator& gen,
                                const std::vector<Matrix3>& matrices);

/// True if the generator is nonzero at one of `draws` random tuples.
[[nodiscard]] bool nonvanishing(const TraceGenerator& gen, std::size_t d,
                                FieldSpec field, std::uint64_t seed,
                                std::size_t draws = 100);

}  // namespace nilcube

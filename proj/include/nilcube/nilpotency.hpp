#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "nilcube/words.hpp"

namespace nilcube {

enum class NilpotencyMethod {
  Formula,      ///< some component was decided by a closed-form table alone
  Gauss,        ///< every component was decided by elimination
  Certificate,  ///< tables, with the nonzero top component certified
};

[[nodiscard]] std::string to_string(NilpotencyMethod m);

struct NilpotencyReport {
  unsigned p = 0;
  std::size_t d = 0;
  std::size_t C = 0;
  /// A word of degree C - 1 that is nonzero in N_{3,d}.
  Word witness;
  Multidegree witness_mdeg;
  std::size_t witness_dim = 0;
  NilpotencyMethod method = NilpotencyMethod::Gauss;
  std::size_t components_checked = 0;
  std::size_t components_by_gauss = 0;
};

/// Closed form of the nilpotency degree C(3, d, K) of N_{3,d} in
/// characteristic p. Throws std::invalid_argument for d < 2.
[[nodiscard]] std::size_t C_formula(unsigned p, std::size_t d);

/// Scans the sorted multidegrees with entries at most 3 from norm 3d down and
/// stops at the first nonzero component. Components with at most
/// max_words_gauss words are eliminated; larger ones fall back to the tables.
[[nodiscard]] NilpotencyReport C_compute(unsigned p, std::size_t d,
                                         std::uint64_t max_words_gauss = 5000);

}  // namespace nilcube

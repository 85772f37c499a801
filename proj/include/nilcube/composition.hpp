#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nilcube/detail/echelon.hpp"
#include "nilcube/elements.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

/// Reduced identities over GF(p) stored on word ranks of one space. Every
/// row is monic with its highest word first.
struct ModRowSystem {
  std::shared_ptr<const WordSpace> space;
  unsigned p = 0;
  std::vector<detail::Row<std::uint32_t>> rows;

  [[nodiscard]] std::vector<Element> elements() const;
};

/// The fully reduced echelon rows of S_{1^5} over GF(p), p in {2, 3}.
[[nodiscard]] ModRowSystem build_M5_rows(unsigned p);
/// All a·φ(t') of multidegree 1^d with t' in M_5, φ monotone, a a word;
/// deduplicated. 5 <= d <= 8.
[[nodiscard]] ModRowSystem build_Md_rows(unsigned p, std::size_t d);

[[nodiscard]] std::vector<Element> build_M5(unsigned p);
[[nodiscard]] std::vector<Element> build_Md(unsigned p, std::size_t d);

/// Fully reduced echelon form over GF(p) of one row per leading word. When
/// the system is complete under composition this spans the whole system.
[[nodiscard]] EchelonSystem echelon_of(const ModRowSystem& m);

/// Words of the space that lead no row, ascending.
[[nodiscard]] std::vector<Word> B_of(const ModRowSystem& m);
/// Same for elements; Δ fixes the word space.
[[nodiscard]] std::vector<Word> B_of(const std::vector<Element>& m,
                                     const Multidegree& delta);

/// Whether the multilinear word w is the highest term of some element of
/// M_d, read off the factorisation patterns u·a_1⋯a_k (k = 3, 4, 5).
/// Throws std::invalid_argument for non-multilinear w or p not in {2, 3}.
[[nodiscard]] bool classify_highest_term(unsigned p, const Word& w);

struct CompletenessReport {
  bool complete = true;
  std::size_t rows = 0;
  std::size_t leading_words = 0;
  std::size_t collisions = 0;  ///< pairs (t_1, t_j) checked
  std::size_t failures = 0;
  std::optional<Word> first_failure;  ///< leading word of the first failure
};

/// For every pair with a common highest term, checks that the difference lies
/// in the span of the members with strictly smaller highest terms.
[[nodiscard]] CompletenessReport check_complete_under_composition(
    const ModRowSystem& m);

/// Element form. Throws std::invalid_argument for non-monic elements or
/// elements of different multidegrees.
[[nodiscard]] bool check_complete_under_composition(
    const std::vector<Element>& m);

}  // namespace nilcube

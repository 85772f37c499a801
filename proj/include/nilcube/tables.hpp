#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcube/coeffs.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

enum class TableSource { Prop1, PropP0, Theo2, Theo3, RecursiveB1d, Zero };

[[nodiscard]] std::string to_string(TableSource s);

/// A closed-form basis of one homogeneous component.
struct BasisTable {
  FieldSpec field;
  Multidegree mdeg;
  std::vector<Word> words;
  TableSource source = TableSource::Zero;
};

/// Literal small tables: d <= 3 for p != 3, plus the 1^4, 1^5, 21^3 and
/// |Δ| >= 6 cases for p = 0 or p > 3. Δ must be sorted descending with no
/// zero entries. Throws std::invalid_argument outside that range.
[[nodiscard]] BasisTable table_small(unsigned p, const Multidegree& delta);

/// The recursive multilinear tables for p = 2 and p = 3.
[[nodiscard]] BasisTable B1d(unsigned p, std::size_t d);

/// Characteristic 2, d >= 4: Δ one of 21^{d-1}, 2^2 1^{d-2}, 31^{d-1}.
[[nodiscard]] BasisTable table_p2(const Multidegree& delta);

/// Characteristic 3: the table of 3^r 2^s 1^l.
[[nodiscard]] BasisTable table_p3(unsigned r, unsigned s, unsigned l);

/// Table for any Δ in any characteristic. Unsorted Δ is handled by sorting
/// the entries (stably, descending) and relabelling the letters back.
/// Components known to vanish give an empty table with source Zero.
[[nodiscard]] BasisTable table(unsigned p, const Multidegree& delta);

/// Size of table(p, Δ) from the closed formulas, without building words.
/// nullopt when Δ is outside the families with a formula.
[[nodiscard]] std::optional<std::uint64_t> cardinality(unsigned p,
                                                       const Multidegree& delta);

struct TableCheck {
  std::size_t dim = 0;          ///< dimension from elimination
  std::size_t table_size = 0;
  bool is_basis = false;        ///< right size and independent modulo S_Δ
  bool equals_minimal = false;  ///< literally the minimal basis
  bool minimality_expected = false;
  [[nodiscard]] bool ok() const {
    return is_basis && (!minimality_expected || equals_minimal);
  }
};

/// Checks a table against an elimination of the same component. Minimality
/// is expected for multilinear tables only: the other closed-form tables are
/// bases but not the lexicographically least ones.
[[nodiscard]] TableCheck verify_table(const BasisTable& t,
                                      const EchelonSystem& es);

}  // namespace nilcube

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "nilcube/coeffs.hpp"
#include "nilcube/detail/echelon.hpp"
#include "nilcube/detail/fields.hpp"
#include "nilcube/elements.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

using PrimeEchelon = detail::SparseEchelon<detail::PrimeField>;
using RationalEchelon = detail::SparseEchelon<detail::RationalField>;

/// Fully reduced row echelon form of a homogeneous system. Row pivots sit on
/// the highest word, so the words without a pivot form the minimal basis of
/// the quotient. Immutable once built.
class EchelonSystem {
 public:
  EchelonSystem(std::shared_ptr<const WordSpace> space, FieldSpec field,
                std::shared_ptr<const PrimeEchelon> impl);
  EchelonSystem(std::shared_ptr<const WordSpace> space, FieldSpec field,
                std::shared_ptr<const RationalEchelon> impl);

  [[nodiscard]] const Multidegree& mdeg() const { return space_->mdeg(); }
  [[nodiscard]] FieldSpec field() const noexcept { return field_; }
  [[nodiscard]] const WordSpace& space() const noexcept { return *space_; }
  [[nodiscard]] std::shared_ptr<const WordSpace> space_ptr() const {
    return space_;
  }

  [[nodiscard]] std::size_t rank() const;
  /// Dimension of the quotient: word count minus rank.
  [[nodiscard]] std::size_t dim() const { return space_->size() - rank(); }
  /// Words that lead no row, ascending.
  [[nodiscard]] std::vector<Word> minimal_basis() const;
  /// Ranks of the words of minimal_basis(), ascending.
  [[nodiscard]] std::vector<std::uint32_t> free_columns() const;
  /// Words that lead a row, ascending.
  [[nodiscard]] std::vector<Word> leading_words() const;
  [[nodiscard]] bool is_leading(const Word& w) const;
  /// The rows as monic elements, ascending by highest term.
  [[nodiscard]] std::vector<Element> rows() const;

  /// Rewrites g in terms of minimal-basis words. Throws
  /// std::invalid_argument when g has a different multidegree or field.
  [[nodiscard]] Element normal_form(const Element& g) const;
  [[nodiscard]] bool membership(const Element& g) const;

  /// Characteristic 0 only: every pivot inversion stayed in Z[1/2,1/3].
  /// Always true in positive characteristic.
  [[nodiscard]] bool denominator_flag() const;

  /// Kernel access for code that works on word ranks.
  [[nodiscard]] const PrimeEchelon* prime() const {
    const auto* p = std::get_if<std::shared_ptr<const PrimeEchelon>>(&impl_);
    return p ? p->get() : nullptr;
  }
  [[nodiscard]] const RationalEchelon* rational() const {
    const auto* p =
        std::get_if<std::shared_ptr<const RationalEchelon>>(&impl_);
    return p ? p->get() : nullptr;
  }

 private:
  std::shared_ptr<const WordSpace> space_;
  FieldSpec field_;
  std::variant<std::shared_ptr<const PrimeEchelon>,
               std::shared_ptr<const RationalEchelon>>
      impl_;
};

/// Echelon form of an arbitrary homogeneous system. The result does not
/// depend on the order of the input. Throws std::invalid_argument for
/// elements of another multidegree or field.
[[nodiscard]] EchelonSystem echelonize(const std::vector<Element>& system,
                                       const Multidegree& delta,
                                       FieldSpec field);

/// Echelon form of the whole identity system of Δ, built directly on word
/// ranks without going through Element.
[[nodiscard]] EchelonSystem echelonize_S(
    const Multidegree& delta, FieldSpec field,
    IdentityShape shape = IdentityShape::Full);

/// Echelon form of integer rows over a word space.
[[nodiscard]] EchelonSystem echelonize_rows(
    std::shared_ptr<const WordSpace> space, const std::vector<IntRow>& rows,
    FieldSpec field);

/// Dimension of the Δ component of N_{3,d} over the field. Zero without any
/// elimination when some entry of Δ exceeds 3.
[[nodiscard]] std::size_t dim_component(unsigned p, const Multidegree& delta);

/// Rank over GF(p) of a set of sparse rows with arbitrary column indices.
[[nodiscard]] std::size_t rank_mod_p(
    unsigned p, std::size_t ncols,
    const std::vector<detail::Row<std::uint32_t>>& rows);

}  // namespace nilcube

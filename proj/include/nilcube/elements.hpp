#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcube/coeffs.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

/// A finite linear combination of words with coefficients in one field.
/// Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Word, Scalar>;

  Element() = default;
  explicit Element(FieldSpec field) : field_(field) {}
  Element(FieldSpec field, const Word& w) : field_(field) {
    add_term(w, Scalar::one(field));
  }
  Element(FieldSpec field, const Word& w, const Scalar& c) : field_(field) {
    add_term(w, c);
  }
  Element(FieldSpec field, std::initializer_list<std::pair<Word, long>> terms);

  [[nodiscard]] FieldSpec field() const noexcept { return field_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  /// Largest word. Throws std::logic_error on the zero element.
  [[nodiscard]] const Word& highest_term() const;
  [[nodiscard]] const Scalar& leading_coefficient() const;
  /// Scaled so that the highest term has coefficient 1.
  [[nodiscard]] Element monic() const;
  /// True when all words share one multidegree (vacuous for zero).
  [[nodiscard]] bool is_homogeneous() const;
  /// Multidegree of the words. Throws std::logic_error on zero or
  /// inhomogeneous input.
  [[nodiscard]] Multidegree mdeg() const;

  [[nodiscard]] std::string to_string() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  /// Product in the free algebra (concatenation, extended bilinearly).
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  FieldSpec field_;
  Terms terms_;
};

/// a^3.
[[nodiscard]] Element T1(const Element& a);
/// a^2 b + a b a + b a^2.
[[nodiscard]] Element T2(const Element& a, const Element& b);
/// Sum over the six orders of a, b, c.
[[nodiscard]] Element T3(const Element& a, const Element& b, const Element& c);

/// Sparse integer row over a WordSpace: (word rank, coefficient), descending
/// by rank, merged, without zeros.
using IntRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

enum class IdentityShape {
  Full,      ///< every f1 T_k(...) f2 body
  PrunedP3,  ///< only f1 T3(a1,a2,a3) f2 with deg a1 <= 3, deg a2 = deg a3 = 1
};

/// Integer coefficient rows spanning the identities of the given space.
/// Rows are merged but neither deduplicated nor normalised.
[[nodiscard]] std::vector<IntRow> identity_rows(
    const WordSpace& space, IdentityShape shape = IdentityShape::Full);

/// The identities f1·T1(a)·f2, f1·T2(a,b)·f2, f1·T3(a,b,c)·f2 of multidegree
/// Δ over the field, monic, deduplicated, zero rows dropped. Sorted by highest
/// term descending, ties broken by the full term map.
[[nodiscard]] std::vector<Element> generate_S(const Multidegree& delta,
                                              FieldSpec field);

/// The reduced generating set used in characteristic 3 for multilinear Δ.
/// Throws std::invalid_argument for other characteristics or multidegrees.
[[nodiscard]] std::vector<Element> generate_S_pruned_p3(const Multidegree& delta,
                                                        FieldSpec field);

/// Rewrites every word of g into words canonical in letter i: x u x becomes
/// -(x^2 u + u x^2), x u x^2 becomes -x^2 u x, and words with more than three
/// occurrences of x vanish.
[[nodiscard]] Element rewrite_step_eq1(const Element& g, Letter i);

/// Applies rewrite_step_eq1 for every letter in ascending order until nothing
/// changes. Throws std::runtime_error if max_rounds is exceeded.
[[nodiscard]] Element canonicalize(const Element& g,
                                   std::size_t max_rounds = 10000);

}  // namespace nilcube

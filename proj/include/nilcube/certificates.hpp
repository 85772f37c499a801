#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilcube/coeffs.hpp"
#include "nilcube/elements.hpp"
#include "nilcube/tables.hpp"
#include "nilcube/words.hpp"

namespace nilcube {

/// A linear functional on a homogeneous component that kills every identity
/// of N_{3,d} in the stated characteristic.
struct Functional {
  enum class Kind {
    PhiSum,    ///< every word maps to 1; p in {2, 3}, multilinear
    PhiAdj,    ///< 1 iff x_i x_j occurs as a factor; p = 2, multilinear
    PhiEven,   ///< 1 iff the word is an even permutation; p = 3, multilinear
    PsiCount,  ///< (#x1x2, #x2x1) factors; p = 2, multidegree 2^2 1^{d-2}
  };
  Kind kind = Kind::PhiSum;
  FieldSpec field;
  Letter i = 0;
  Letter j = 0;

  static Functional phi_sum(FieldSpec field);
  static Functional phi_adj(FieldSpec field, Letter i, Letter j);
  static Functional phi_even(FieldSpec field);
  static Functional psi_count(FieldSpec field);

  /// Number of values: 2 for PsiCount, 1 otherwise.
  [[nodiscard]] std::size_t arity() const noexcept {
    return kind == Kind::PsiCount ? 2 : 1;
  }
  [[nodiscard]] std::string to_string() const;
};

/// Value on g: one Scalar, or two for PsiCount. Throws std::invalid_argument
/// for the wrong characteristic or multidegree.
[[nodiscard]] std::vector<Scalar> apply_functional(const Functional& f,
                                                   const Element& g);

/// Degree-lowering maps of characteristic 3.
struct Reducer {
  enum class Kind {
    PhiDelete,     ///< drop every x_k; needs δ_k in {1, 2}
    PiSymmetrize,  ///< u1 x u2 x u3 x u4 -> u1(x u2 u3 + u2 x u3 + u2 u3 x)u4
  };
  Kind kind = Kind::PhiDelete;
  Letter k = 1;

  static Reducer phi_delete(Letter k);
  static Reducer pi_symmetrize(Letter k);
  [[nodiscard]] std::string to_string() const;
};

/// Image of g. With relabel set, letters above k move down by one after a
/// deletion. Throws std::invalid_argument unless g lives in characteristic 3,
/// is homogeneous and δ_k fits the reducer.
[[nodiscard]] Element apply_reducer(const Reducer& r, const Element& g,
                                    bool relabel = false);

enum class CertifyMethod {
  Auto,           ///< PhiAdj for p = 2; PhiK at even d, PrunedRewrite at odd d
  PhiAdj,         ///< rank of the φ and φ_ij values over GF(2)
  PhiK,           ///< φ_k images expanded in the basis of 1^{d-1}, plus φ_+
  PrunedRewrite,  ///< reduce the pruned identities by the normal forms of M_d
};

[[nodiscard]] std::string to_string(CertifyMethod m);

struct CertificateReport {
  bool independent = false;
  CertifyMethod method = CertifyMethod::Auto;
  std::size_t d = 0;
  std::size_t candidate_size = 0;
  /// Rank of the equation matrix, or the number of leading words of M_d for
  /// PrunedRewrite.
  std::size_t rank = 0;
  std::size_t equations = 0;
  /// Lower degrees certified on the way, innermost first.
  std::vector<CertificateReport> prerequisites;
};

/// Rank over GF(p) of the values of the functionals on the candidate words
/// equals the number of words.
[[nodiscard]] bool certify_with_functionals(
    const std::vector<Word>& candidate, const std::vector<Functional>& fs);

/// Certifies that the candidate words of multidegree 1^d are linearly
/// independent in N_{3,d} over GF(p), p in {2, 3}. A false result means the
/// chosen method could not show independence. Throws std::invalid_argument
/// for other characteristics, non-multilinear candidates or unsupported d.
[[nodiscard]] CertificateReport certify_independence(
    unsigned p, const std::vector<Word>& candidate,
    CertifyMethod method = CertifyMethod::Auto);
[[nodiscard]] CertificateReport certify_independence(
    const BasisTable& candidate, CertifyMethod method = CertifyMethod::Auto);

}  // namespace nilcube

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilcube {

/// Letter index x_i, 1-based.
using Letter = std::uint8_t;

/// A word of the free semigroup: a sequence of 1-based letters.
///
/// Ordering is lexicographic on the letter sequence. Restricted to words of
/// one multidegree this is the total order used everywhere in the library;
/// across multidegrees use compare() or prefix_compare() instead.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word from_ints(std::span<const int> letters);
  /// Parses "1,2,1" or the compact digit form "121" (letters 1..9 only).
  static Word parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] std::span<const Letter> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }
  [[nodiscard]] Letter max_letter() const noexcept;
  [[nodiscard]] std::size_t degree_in(Letter x) const noexcept;

  [[nodiscard]] Word subword(std::size_t pos, std::size_t len) const;
  void push_back(Letter x) { letters_.push_back(x); }
  void append(const Word& w);

  [[nodiscard]] std::vector<int> to_ints() const;
  /// Compact form "1121"; letters above 9 fall back to "1,12,3".
  [[nodiscard]] std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Per-letter exponent counts (δ_1, ..., δ_d). Trailing zeros are ignored by
/// equality and ordering.
class Multidegree {
 public:
  Multidegree() = default;
  Multidegree(std::initializer_list<unsigned> counts);
  explicit Multidegree(std::vector<unsigned> counts);

  /// Parses "3,2,1". Empty strings and non-numeric entries are rejected.
  static Multidegree parse(std::string_view text);
  /// 1^d.
  static Multidegree multilinear(std::size_t d);

  [[nodiscard]] std::size_t size() const noexcept { return counts_.size(); }
  [[nodiscard]] unsigned operator[](std::size_t i) const {
    return i < counts_.size() ? counts_[i] : 0U;
  }
  /// Count of letter x (1-based).
  [[nodiscard]] unsigned of(Letter x) const { return (*this)[x - 1U]; }
  [[nodiscard]] const std::vector<unsigned>& counts() const noexcept {
    return counts_;
  }
  [[nodiscard]] unsigned norm() const noexcept;
  [[nodiscard]] unsigned max_entry() const noexcept;
  /// Number of letters that actually occur.
  [[nodiscard]] std::size_t support_size() const noexcept;
  [[nodiscard]] bool is_multilinear() const noexcept;
  [[nodiscard]] bool is_sorted_descending() const noexcept;
  /// Counts with trailing zeros removed.
  [[nodiscard]] Multidegree trimmed() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Multidegree& a, const Multidegree& b);
  friend std::strong_ordering operator<=>(const Multidegree& a,
                                          const Multidegree& b);

 private:
  std::vector<unsigned> counts_;
};

/// Multidegree of w over an alphabet of size d. Throws std::out_of_range if a
/// letter is outside 1..d.
[[nodiscard]] Multidegree mdeg(const Word& w, std::size_t d);
/// Multidegree over the alphabet 1..max_letter(w).
[[nodiscard]] Multidegree mdeg(const Word& w);

/// Total order on words of equal multidegree. Throws std::invalid_argument
/// for words of different multidegree.
[[nodiscard]] std::strong_ordering compare(const Word& u, const Word& v);

/// The partial order on arbitrary words: comparison at the first differing
/// letter; nullopt when one word is a proper prefix of the other.
[[nodiscard]] std::optional<std::strong_ordering> prefix_compare(
    std::span<const Letter> u, std::span<const Letter> v);

/// |Δ|! / Π δ_i!. Throws std::overflow_error if it does not fit in 64 bits.
[[nodiscard]] std::uint64_t word_count(const Multidegree& delta);

/// All words of multidegree Δ in ascending order.
[[nodiscard]] std::vector<Word> enumerate_words(const Multidegree& delta);

[[nodiscard]] bool is_canonical(const Word& w, Letter i);
/// Canonical with respect to every letter.
[[nodiscard]] bool is_canonical(const Word& w);

/// Parity of the permutation spelled by a multilinear word. Throws
/// std::invalid_argument for non-multilinear input.
[[nodiscard]] bool is_even_permutation_word(const Word& w);

/// Words of a single multidegree with O(|w|·d) ranking.
///
/// Index i is the position of the word in enumerate_words(Δ), so comparing
/// indices is the same as comparing words.
class WordSpace {
 public:
  explicit WordSpace(Multidegree delta);

  [[nodiscard]] const Multidegree& mdeg() const noexcept { return delta_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] const Word& operator[](std::size_t i) const {
    return words_[i];
  }
  [[nodiscard]] const std::vector<Word>& words() const noexcept {
    return words_;
  }
  [[nodiscard]] std::size_t length() const noexcept { return length_; }

  /// Rank of a word of this multidegree. Throws std::invalid_argument if the
  /// word has a different multidegree.
  [[nodiscard]] std::size_t index_of(std::span<const Letter> w) const;
  [[nodiscard]] std::size_t index_of(const Word& w) const {
    return index_of(w.letters());
  }
  [[nodiscard]] bool contains(std::span<const Letter> w) const;

 private:
  Multidegree delta_;
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

}  // namespace nilcube

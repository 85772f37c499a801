#include "nilcube/words.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace nilcube {

namespace {

constexpr std::size_t kMaxAlphabet = 64;

std::vector<Letter> checked_letters(std::span<const int> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (int x : in) {
    if (x < 1 || x > std::numeric_limits<Letter>::max()) {
      throw std::out_of_range("letter index " + std::to_string(x) +
                              " is not a valid 1-based letter");
    }
    out.push_back(static_cast<Letter>(x));
  }
  return out;
}

}  // namespace

Word::Word(std::initializer_list<int> letters)
    : letters_(checked_letters(std::span<const int>(letters.begin(),
                                                    letters.size()))) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x == 0) throw std::out_of_range("letter index 0 is not 1-based");
  }
}

Word::Word(std::span<const Letter> letters)
    : Word(std::vector<Letter>(letters.begin(), letters.end())) {}

Word Word::from_ints(std::span<const int> letters) {
  return Word(checked_letters(letters));
}

Word Word::parse(std::string_view text) {
  std::vector<int> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad letter in word '" +
                                    std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto tok = text.substr(pos, next - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(),
                                       value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad letter in word '" +
                                    std::string(text) + "'");
      }
      out.push_back(value);
      pos = next + 1;
    }
  }
  return from_ints(out);
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? Letter{0}
                          : *std::max_element(letters_.begin(), letters_.end());
}

std::size_t Word::degree_in(Letter x) const noexcept {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), x));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("subword");
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

std::vector<int> Word::to_ints() const {
  return {letters_.begin(), letters_.end()};
}

std::string Word::to_string() const {
  const bool compact = std::all_of(letters_.begin(), letters_.end(),
                                   [](Letter x) { return x <= 9; });
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(letters_[i]);
  }
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

// ---------------------------------------------------------------------------

Multidegree::Multidegree(std::initializer_list<unsigned> counts)
    : counts_(counts) {}

Multidegree::Multidegree(std::vector<unsigned> counts)
    : counts_(std::move(counts)) {}

Multidegree Multidegree::parse(std::string_view text) {
  std::vector<unsigned> counts;
  if (text.empty()) throw std::invalid_argument("empty multidegree");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad multidegree '" + std::string(text) +
                                  "'");
    }
    counts.push_back(value);
    pos = next + 1;
  }
  return Multidegree(std::move(counts));
}

Multidegree Multidegree::multilinear(std::size_t d) {
  return Multidegree(std::vector<unsigned>(d, 1U));
}

unsigned Multidegree::norm() const noexcept {
  unsigned n = 0;
  for (unsigned c : counts_) n += c;
  return n;
}

unsigned Multidegree::max_entry() const noexcept {
  return counts_.empty() ? 0U
                         : *std::max_element(counts_.begin(), counts_.end());
}

std::size_t Multidegree::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      counts_.begin(), counts_.end(), [](unsigned c) { return c > 0; }));
}

bool Multidegree::is_multilinear() const noexcept {
  return !counts_.empty() &&
         std::all_of(counts_.begin(), counts_.end(),
                     [](unsigned c) { return c == 1; });
}

bool Multidegree::is_sorted_descending() const noexcept {
  return std::is_sorted(counts_.begin(), counts_.end(), std::greater<>{});
}

Multidegree Multidegree::trimmed() const {
  auto c = counts_;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Multidegree(std::move(c));
}

std::string Multidegree::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(counts_[i]);
  }
  return s;
}

bool operator==(const Multidegree& a, const Multidegree& b) {
  return a.trimmed().counts_ == b.trimmed().counts_;
}

std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
  return a.trimmed().counts_ <=> b.trimmed().counts_;
}

// ---------------------------------------------------------------------------

Multidegree mdeg(const Word& w, std::size_t d) {
  std::vector<unsigned> counts(d, 0U);
  for (Letter x : w) {
    if (x < 1 || x > d) {
      throw std::out_of_range("letter " + std::to_string(x) +
                              " outside alphabet 1.." + std::to_string(d));
    }
    ++counts[x - 1U];
  }
  return Multidegree(std::move(counts));
}

Multidegree mdeg(const Word& w) { return mdeg(w, w.max_letter()); }

std::strong_ordering compare(const Word& u, const Word& v) {
  if (mdeg(u) != mdeg(v)) {
    throw std::invalid_argument("compare: words " + u.to_string() + " and " +
                                v.to_string() +
                                " have different multidegrees");
  }
  return u <=> v;
}

std::optional<std::strong_ordering> prefix_compare(std::span<const Letter> u,
                                                   std::span<const Letter> v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  if (u.size() == v.size()) return std::strong_ordering::equal;
  return std::nullopt;
}

std::uint64_t word_count(const Multidegree& delta) {
  // Product of binomials C(n_1+...+n_k, n_k), each exact.
  unsigned __int128 total = 1;
  unsigned running = 0;
  for (unsigned c : delta.counts()) {
    for (unsigned j = 1; j <= c; ++j) {
      ++running;
      total = total * running / j;
      if (total > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("word count overflows 64 bits");
      }
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<Word> enumerate_words(const Multidegree& delta) {
  if (delta.norm() == 0) {
    throw std::invalid_argument("enumerate_words: empty word requested");
  }
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    letters.insert(letters.end(), delta[i], static_cast<Letter>(i + 1));
  }
  std::vector<Word> out;
  out.reserve(word_count(delta));
  do {
    out.emplace_back(std::vector<Letter>(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

bool is_canonical(const Word& w, Letter i) {
  std::array<std::size_t, 4> pos{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i) {
      if (n == 3) return false;
      pos[n++] = k;
    }
  }
  switch (n) {
    case 0:
    case 1:
      return true;
    case 2:
      return pos[1] == pos[0] + 1;
    default:
      return pos[1] == pos[0] + 1 && pos[2] > pos[1] + 1;
  }
}

bool is_canonical(const Word& w) {
  const Letter top = w.max_letter();
  for (Letter i = 1; i <= top && i != 0; ++i) {
    if (!is_canonical(w, i)) return false;
  }
  return true;
}

bool is_even_permutation_word(const Word& w) {
  if (!mdeg(w).is_multilinear() || w.empty()) {
    throw std::invalid_argument("is_even_permutation_word: " + w.to_string() +
                                " is not multilinear");
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[a] > w[b]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

// ---------------------------------------------------------------------------

WordSpace::WordSpace(Multidegree delta)
    : delta_(delta.trimmed()), length_(delta_.norm()) {
  if (delta_.size() > kMaxAlphabet) {
    throw std::invalid_argument("WordSpace: alphabet larger than 64 letters");
  }
  words_ = enumerate_words(delta_);
}

std::size_t WordSpace::index_of(std::span<const Letter> w) const {
  if (w.size() != length_) {
    throw std::invalid_argument("index_of: word length does not match");
  }
  const std::size_t d = delta_.size();
  std::array<unsigned, kMaxAlphabet + 1> count{};
  for (std::size_t i = 0; i < d; ++i) count[i + 1] = delta_[i];
  std::uint64_t perms = words_.size();
  std::uint64_t rank = 0;
  std::uint64_t remaining = length_;
  for (Letter c : w) {
    if (c < 1 || c > d || count[c] == 0) {
      throw std::invalid_argument("index_of: word has wrong multidegree");
    }
    for (Letter l = 1; l < c; ++l) {
      if (count[l] != 0) rank += perms * count[l] / remaining;
    }
    perms = perms * count[c] / remaining;
    --count[c];
    --remaining;
  }
  return static_cast<std::size_t>(rank);
}

bool WordSpace::contains(std::span<const Letter> w) const {
  if (w.size() != length_) return false;
  std::array<unsigned, kMaxAlphabet + 1> count{};
  for (Letter c : w) {
    if (c < 1 || c > delta_.size()) return false;
    ++count[c];
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (count[i + 1] != delta_[i]) return false;
  }
  return true;
}

}  // namespace nilcube

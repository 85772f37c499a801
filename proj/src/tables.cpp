#include "nilcube/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nilcube {

std::string to_string(TableSource s) {
  switch (s) {
    case TableSource::Prop1:
      return "Prop1";
    case TableSource::PropP0:
      return "PropP0";
    case TableSource::Theo2:
      return "Theo2";
    case TableSource::Theo3:
      return "Theo3";
    case TableSource::RecursiveB1d:
      return "recursive-B1d";
    case TableSource::Zero:
      return "zero";
  }
  return "?";
}

namespace {

using Letters = std::vector<Letter>;

std::vector<Word> parse_all(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(Word::parse(s));
  return out;
}

// x_from x_{from+1} ... x_to, empty when from > to.
Letters run(unsigned from, unsigned to) {
  Letters v;
  for (unsigned i = from; i <= to; ++i) v.push_back(static_cast<Letter>(i));
  return v;
}

Letters cat(std::initializer_list<Letters> parts) {
  Letters v;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

Letters sq(unsigned i) { return {static_cast<Letter>(i), static_cast<Letter>(i)}; }
Letters one(unsigned i) { return {static_cast<Letter>(i)}; }

// Letters 1..d ascending without the listed ones, starting at `from`.
Letters run_without(unsigned from, unsigned to, std::initializer_list<unsigned> skip) {
  Letters v;
  for (unsigned i = from; i <= to; ++i) {
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) {
      v.push_back(static_cast<Letter>(i));
    }
  }
  return v;
}

std::vector<Word> sorted_unique(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const std::map<std::vector<unsigned>, std::vector<Word>>& prop1_tables() {
  static const std::map<std::vector<unsigned>, std::vector<Word>> t = {
      {{1}, parse_all({"1"})},
      {{1, 1}, parse_all({"12", "21"})},
      {{2}, parse_all({"11"})},
      {{1, 1, 1}, parse_all({"123", "132", "213", "231", "312"})},
      {{2, 1}, parse_all({"112", "211"})},
      {{2, 1, 1}, parse_all({"1123", "1132", "2113", "2311", "3211"})},
      {{2, 2}, parse_all({"1122", "2211"})},
      {{3, 1}, parse_all({"1121"})},
      {{2, 2, 1}, parse_all({"11223", "22113", "31122"})},
      {{3, 1, 1}, parse_all({"11231", "11321"})},
      {{3, 2}, parse_all({"11221"})},
  };
  return t;
}

const std::map<std::vector<unsigned>, std::vector<Word>>& prop_p0_tables() {
  static const std::map<std::vector<unsigned>, std::vector<Word>> t = {
      {{1, 1, 1, 1},
       parse_all({"1234", "1243", "1324", "1342", "1423", "2134", "2143",
                  "2314", "2341", "2413", "3124", "3412"})},
      {{1, 1, 1, 1, 1},
       parse_all({"12345", "12354", "12435", "12453", "12534", "13245",
                  "13254", "13425", "13452", "13524", "14235", "14523",
                  "23145", "23415", "23514"})},
      {{2, 1, 1, 1},
       parse_all({"11234", "11324", "11423", "21134", "21143", "23114",
                  "24113"})},
  };
  return t;
}

void require_sorted_profile(const Multidegree& delta) {
  const auto& c = delta.counts();
  if (c.empty() || !delta.is_sorted_descending() || c.back() == 0) {
    throw std::invalid_argument("expected a descending multidegree without "
                                "zero entries, got (" +
                                delta.to_string() + ")");
  }
}

bool all_ones(const std::vector<unsigned>& c, std::size_t from) {
  return std::all_of(c.begin() + static_cast<std::ptrdiff_t>(from), c.end(),
                     [](unsigned x) { return x == 1; });
}

// Shape of a sorted profile 3^r 2^s 1^l, or nullopt if an entry exceeds 3.
struct Shape {
  unsigned r = 0, s = 0, l = 0;
};
std::optional<Shape> shape_of(const std::vector<unsigned>& c) {
  Shape sh;
  for (unsigned x : c) {
    if (x == 3) ++sh.r;
    else if (x == 2) ++sh.s;
    else if (x == 1) ++sh.l;
    else return std::nullopt;
  }
  return sh;
}

// B_{1^d} for p = 3 as letter vectors, with B_{1^0} = {empty}.
std::vector<Letters> b1d_p3_letters(unsigned d) {
  if (d == 0) return {Letters{}};
  std::vector<Word> words = B1d(3, d).words;
  std::vector<Letters> out;
  for (const auto& w : words) out.emplace_back(w.begin(), w.end());
  return out;
}

Letters u_word(unsigned two_k) {
  Letters v;
  for (unsigned i = 1; i + 1 <= two_k; i += 2) {
    // w_{i,i+1} = x_i^2 x_{i+1}^2 x_i x_{i+1}
    v.insert(v.end(), {static_cast<Letter>(i), static_cast<Letter>(i),
                       static_cast<Letter>(i + 1), static_cast<Letter>(i + 1),
                       static_cast<Letter>(i), static_cast<Letter>(i + 1)});
  }
  return v;
}

// B_{3^r 1^n} as letter vectors.
std::vector<Letters> b3r1n(unsigned r3, unsigned n) {
  std::vector<Letters> out;
  if (r3 % 2 == 0) {
    const unsigned r = r3 / 2;
    const Letters u = u_word(2 * r);
    for (const auto& b : b1d_p3_letters(n)) {
      Letters v = u;
      for (Letter x : b) v.push_back(static_cast<Letter>(x + 2 * r));
      if (!v.empty()) out.push_back(v);
    }
    if (r >= 1) {
      for (unsigned k = 1; k <= n; ++k) {
        out.push_back(cat({u_word(2 * r - 2), sq(2 * r - 1), sq(2 * r),
                           run(2 * r + 1, 2 * r + k), one(2 * r - 1),
                           one(2 * r), run(2 * r + k + 1, 2 * r + n)}));
      }
    }
    return out;
  }
  const unsigned r = (r3 - 1) / 2;
  const Letters u = u_word(2 * r);
  if (n >= 1) {
    for (const auto& b : b1d_p3_letters(n)) {
      Letters v = cat({u, sq(2 * r + 1), one(2 * r + 2)});
      for (Letter x : b) {
        v.push_back(static_cast<Letter>(x == 1 ? 2 * r + 1 : x + 2 * r + 1));
      }
      out.push_back(v);
    }
  }
  for (unsigned k = 3; k <= n + 1; ++k) {
    out.push_back(cat({u, sq(2 * r + 1), run(2 * r + 3, 2 * r + k),
                       one(2 * r + 1), one(2 * r + 2),
                       run(2 * r + k + 1, 2 * r + n + 1)}));
  }
  if (r >= 1) {
    out.push_back(cat({u_word(2 * r - 2), sq(2 * r - 1), sq(2 * r),
                       sq(2 * r + 1), one(2 * r - 1), one(2 * r),
                       one(2 * r + 1), run(2 * r + 2, 2 * r + n + 1)}));
  }
  return out;
}

BasisTable make(unsigned p, const Multidegree& delta, std::vector<Word> words,
                TableSource src) {
  return BasisTable{FieldSpec(p), delta, sorted_unique(std::move(words)), src};
}

}  // namespace

BasisTable table_small(unsigned p, const Multidegree& delta) {
  require_sorted_profile(delta);
  const FieldSpec field(p);
  const auto& c = delta.counts();
  if (c.size() <= 3 && p != 3) {
    const auto& t = prop1_tables();
    auto it = t.find(c);
    return make(p, delta, it == t.end() ? std::vector<Word>{} : it->second,
                TableSource::Prop1);
  }
  if (p == 0 || p > 3) {
    const auto& t = prop_p0_tables();
    auto it = t.find(c);
    if (it != t.end()) return make(p, delta, it->second, TableSource::PropP0);
    if (delta.norm() >= 6 || delta.max_entry() > 3) {
      return make(p, delta, {}, TableSource::PropP0);
    }
  }
  throw std::invalid_argument("no literal table for p=" + std::to_string(p) +
                              ", (" + delta.to_string() + ")");
}

BasisTable B1d(unsigned p, std::size_t d) {
  if (p != 2 && p != 3) throw std::invalid_argument("B1d needs p = 2 or 3");
  if (d == 0) throw std::invalid_argument("B1d needs d >= 1");
  std::vector<Word> cur = {Word{1}};
  for (unsigned n = 2; n <= d; ++n) {
    std::vector<Word> next;
    for (const auto& w : cur) {
      Letters v = {1};
      for (Letter x : w) v.push_back(static_cast<Letter>(x + 1));
      next.emplace_back(std::move(v));
    }
    if (p == 2) {
      for (unsigned k = 2; k <= n; ++k) {
        next.emplace_back(cat({run(2, k), one(1), run(k + 1, n)}));  // e_{n,k}
      }
      if (n >= 3) {
        next.emplace_back(cat({run(2, n - 2), one(n), one(1), one(n - 1)}));  // f_n
        for (unsigned k = 3; k <= n; ++k) {
          next.emplace_back(cat({one(k), run_without(1, n, {k})}));  // h_{n,k}
        }
      }
      if (n == 4) next.push_back(Word{2, 1, 4, 3});
    } else {
      for (const auto& w : cur) {
        Letters v = {2};
        for (Letter x : w) v.push_back(static_cast<Letter>(x == 1 ? 1 : x + 1));
        next.emplace_back(std::move(v));
      }
      for (unsigned k = 3; k <= n; ++k) {
        next.emplace_back(cat({run(3, k), one(1), one(2), run(k + 1, n)}));  // e_{n,k}
      }
    }
    cur = sorted_unique(std::move(next));
  }
  return make(p, Multidegree::multilinear(d), std::move(cur),
              TableSource::RecursiveB1d);
}

BasisTable table_p2(const Multidegree& delta) {
  require_sorted_profile(delta);
  const auto& c = delta.counts();
  const auto d = static_cast<unsigned>(c.size());
  if (d < 4) throw std::invalid_argument("table_p2 needs d >= 4");
  std::vector<Word> w;
  if (c[0] == 2 && all_ones(c, 1)) {
    for (unsigned i = 2; i <= d; ++i) {
      w.emplace_back(cat({sq(1), one(i), run_without(2, d, {i})}));  // a_i
      w.emplace_back(cat({run_without(2, d, {i}), one(i), sq(1)}));  // b_i
    }
    auto c_word = [&](unsigned i, unsigned j) {
      return Word(cat({one(i), sq(1), one(j), run_without(2, d, {i, j})}));
    };
    w.push_back(c_word(2, 3));
    if (d == 4) w.push_back(c_word(3, 2));
  } else if (c[0] == 2 && c[1] == 2 && all_ones(c, 2)) {
    w.emplace_back(cat({sq(1), sq(2), run(3, d)}));
    w.emplace_back(cat({sq(2), sq(1), run(3, d)}));
  } else if (c[0] == 3 && all_ones(c, 1)) {
    w.emplace_back(cat({sq(1), run(2, d), one(1)}));
  } else {
    throw std::invalid_argument("table_p2 covers 21^{d-1}, 2^21^{d-2}, "
                                "31^{d-1}; got (" +
                                delta.to_string() + ")");
  }
  return make(2, delta, std::move(w), TableSource::Theo2);
}

BasisTable table_p3(unsigned r, unsigned s, unsigned l) {
  if (r + s + l == 0) throw std::invalid_argument("empty multidegree");
  std::vector<unsigned> counts;
  counts.insert(counts.end(), r, 3U);
  counts.insert(counts.end(), s, 2U);
  counts.insert(counts.end(), l, 1U);
  std::vector<Word> out;
  for (auto v : b3r1n(r, s + l)) {
    Letters sub;
    for (Letter x : v) {
      sub.push_back(x);
      if (x > r && x <= r + s) sub.push_back(x);
    }
    out.emplace_back(std::move(sub));
  }
  return make(3, Multidegree(std::move(counts)), std::move(out),
              TableSource::Theo3);
}

BasisTable table(unsigned p, const Multidegree& delta) {
  const FieldSpec field(p);
  const auto& c = delta.counts();
  // order[j] = 0-based original letter of sorted letter j+1
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) order.push_back(i);
  }
  if (order.empty()) throw std::invalid_argument("empty multidegree");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a] > c[b]; });
  std::vector<unsigned> sorted;
  for (std::size_t i : order) sorted.push_back(c[i]);
  const Multidegree prof(sorted);
  const auto d = sorted.size();

  BasisTable base;
  if (prof.max_entry() > 3) {
    base = BasisTable{field, prof, {}, TableSource::Zero};
  } else if (p == 3) {
    const auto sh = shape_of(sorted);
    base = d == sh->l && sh->r == 0 && sh->s == 0 ? B1d(3, d)
                                                   : table_p3(sh->r, sh->s, sh->l);
  } else if (d <= 3 || p != 2) {
    base = table_small(p, prof);
  } else if (prof.is_multilinear()) {
    base = B1d(2, d);
  } else {
    try {
      base = table_p2(prof);
    } catch (const std::invalid_argument&) {
      base = BasisTable{field, prof, {}, TableSource::Theo2};
    }
  }
  base.field = field;

  std::vector<Word> words;
  for (const auto& w : base.words) {
    Letters v;
    for (Letter x : w) v.push_back(static_cast<Letter>(order[x - 1U] + 1));
    words.emplace_back(std::move(v));
  }
  return BasisTable{field, delta, sorted_unique(std::move(words)), base.source};
}

std::optional<std::uint64_t> cardinality(unsigned p, const Multidegree& delta) {
  std::vector<unsigned> c;
  for (unsigned x : delta.counts()) {
    if (x > 0) c.push_back(x);
  }
  if (c.empty()) return std::nullopt;
  std::sort(c.begin(), c.end(), std::greater<>{});
  if (c.front() > 3) return 0;
  const auto d = static_cast<std::uint64_t>(c.size());
  const unsigned norm = std::accumulate(c.begin(), c.end(), 0U);
  if (p == 3) {
    const auto sh = shape_of(c);
    const std::uint64_t n = sh->s + sh->l;
    if (n >= 63) return std::nullopt;
    const std::uint64_t pw = std::uint64_t{1} << n;
    if (sh->r == 0) return pw - n;
    if (sh->r == 1) return pw - 1;
    return pw;
  }
  if (d <= 3) {
    const auto& t = prop1_tables();
    auto it = t.find(c);
    return it == t.end() ? 0 : it->second.size();
  }
  if (p == 2) {
    if (c.front() == 1) return d * (d - 1);
    if (c[0] == 2 && all_ones(c, 1)) return d == 4 ? 8 : 2 * d - 1;
    if (c[0] == 2 && c[1] == 2 && all_ones(c, 2)) return 2;
    if (c[0] == 3 && all_ones(c, 1)) return 1;
    return 0;
  }
  if (norm >= 6) return 0;
  const auto& t = prop_p0_tables();
  auto it = t.find(c);
  return it == t.end() ? 0 : it->second.size();
}

namespace {

template <class E>
std::size_t table_rank(const E& ech, const WordSpace& space,
                       const std::vector<Word>& words) {
  using F = std::decay_t<decltype(ech.field())>;
  detail::SparseEchelon<F> e(ech.field(), space.size());
  for (const auto& w : words) {
    typename detail::SparseEchelon<F>::row_type row;
    row.emplace_back(static_cast<std::uint32_t>(space.index_of(w)),
                     ech.field().one());
    e.insert(ech.reduce(row));
  }
  return e.rank();
}

}  // namespace

TableCheck verify_table(const BasisTable& t, const EchelonSystem& es) {
  if (t.mdeg != es.mdeg()) {
    throw std::invalid_argument("table and system have different multidegrees");
  }
  TableCheck r;
  r.dim = es.dim();
  r.table_size = t.words.size();
  r.minimality_expected = t.mdeg.trimmed().is_multilinear();
  auto basis = es.minimal_basis();
  r.equals_minimal = basis == t.words;
  if (r.table_size != r.dim) return r;
  const std::size_t rank = es.prime() != nullptr
                               ? table_rank(*es.prime(), es.space(), t.words)
                               : table_rank(*es.rational(), es.space(), t.words);
  r.is_basis = rank == r.table_size;
  return r;
}

}  // namespace nilcube

#include "nilcube/elements.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "nilcube/detail/fields.hpp"

namespace nilcube {

Element::Element(FieldSpec field,
                 std::initializer_list<std::pair<Word, long>> terms)
    : field_(field) {
  for (const auto& [w, c] : terms) add_term(w, Scalar(field, c));
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.field() != field_) throw std::invalid_argument("mixed fields");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Word& Element::highest_term() const {
  if (terms_.empty()) throw std::logic_error("zero element has no highest term");
  return terms_.rbegin()->first;
}

const Scalar& Element::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero element has no highest term");
  return terms_.rbegin()->second;
}

Element Element::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Multidegree first = nilcube::mdeg(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return nilcube::mdeg(t.first) == first;
  });
}

Multidegree Element::mdeg() const {
  if (terms_.empty()) throw std::logic_error("zero element has no multidegree");
  if (!is_homogeneous()) throw std::logic_error("element is not homogeneous");
  return nilcube::mdeg(terms_.begin()->first);
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    if (!it->second.is_one()) s += it->second.to_string() + "*";
    s += it->first.to_string();
  }
  return s;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mixed fields");
  Element r(a.field());
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) r.add_term(u + v, x * y);
  }
  return r;
}

namespace {

void reject_empty(const Element& a) {
  for (const auto& [w, c] : a.terms()) {
    if (w.empty()) throw std::invalid_argument("empty word argument");
  }
  if (a.is_zero()) throw std::invalid_argument("zero argument");
}

}  // namespace

Element T1(const Element& a) {
  reject_empty(a);
  return a * a * a;
}

Element T2(const Element& a, const Element& b) {
  reject_empty(a);
  reject_empty(b);
  return a * a * b + a * b * a + b * a * a;
}

Element T3(const Element& a, const Element& b, const Element& c) {
  reject_empty(a);
  reject_empty(b);
  reject_empty(c);
  return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b +
         c * b * a;
}

// ---------------------------------------------------------------------------

namespace {

IntRow merge(std::vector<std::pair<std::uint32_t, std::int64_t>> t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  IntRow out;
  for (const auto& [c, v] : t) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
    } else {
      out.emplace_back(c, v);
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

bool block_le(std::span<const Letter> a, std::span<const Letter> b) {
  return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<IntRow> identity_rows(const WordSpace& space, IdentityShape shape) {
  const std::size_t n = space.length();
  std::vector<IntRow> rows;
  std::vector<Letter> buf(n);
  const bool pruned = shape == IdentityShape::PrunedP3;

  auto rank_of = [&](std::span<const Letter> f1,
                     std::initializer_list<std::span<const Letter>> body,
                     std::span<const Letter> f2) -> std::uint32_t {
    auto out = std::copy(f1.begin(), f1.end(), buf.begin());
    for (auto part : body) out = std::copy(part.begin(), part.end(), out);
    std::copy(f2.begin(), f2.end(), out);
    return static_cast<std::uint32_t>(space.index_of(buf));
  };

  for (std::size_t wi = 0; wi < space.size(); ++wi) {
    const auto w = space[wi].letters();
    // T3 bodies: w = f1 a b c f2 with a <= b <= c, so that each instance is
    // produced by exactly one of its words.
    for (std::size_t i = 0; i + 3 <= n; ++i) {
      for (std::size_t j = i + 1; j + 2 <= n; ++j) {
        for (std::size_t k = j + 1; k + 1 <= n; ++k) {
          for (std::size_t l = k + 1; l <= n; ++l) {
            const auto f1 = w.subspan(0, i);
            const auto a = w.subspan(i, j - i);
            const auto b = w.subspan(j, k - j);
            const auto c = w.subspan(k, l - k);
            const auto f2 = w.subspan(l);
            if (!block_le(a, b) || !block_le(b, c)) continue;
            if (pruned) {
              std::array<std::size_t, 3> len{a.size(), b.size(), c.size()};
              std::sort(len.begin(), len.end());
              if (len[0] != 1 || len[1] != 1 || len[2] > 3) continue;
            }
            rows.push_back(merge({{rank_of(f1, {a, b, c}, f2), 1},
                                  {rank_of(f1, {a, c, b}, f2), 1},
                                  {rank_of(f1, {b, a, c}, f2), 1},
                                  {rank_of(f1, {b, c, a}, f2), 1},
                                  {rank_of(f1, {c, a, b}, f2), 1},
                                  {rank_of(f1, {c, b, a}, f2), 1}}));
            if (rows.back().empty()) rows.pop_back();
          }
        }
      }
    }
    if (pruned) continue;
    // T2 and T1 bodies: w = f1 a a b f2 and w = f1 a a a f2.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 1; i + 2 * m <= n; ++m) {
        const auto f1 = w.subspan(0, i);
        const auto a = w.subspan(i, m);
        const auto a2 = w.subspan(i + m, m);
        if (!std::equal(a.begin(), a.end(), a2.begin())) continue;
        if (i + 3 * m <= n) {
          const auto a3 = w.subspan(i + 2 * m, m);
          if (std::equal(a.begin(), a.end(), a3.begin())) {
            rows.push_back({{static_cast<std::uint32_t>(wi), 1}});
          }
        }
        for (std::size_t e = i + 2 * m + 1; e <= n; ++e) {
          const auto b = w.subspan(i + 2 * m, e - i - 2 * m);
          const auto f2 = w.subspan(e);
          rows.push_back(merge({{rank_of(f1, {a, a, b}, f2), 1},
                                {rank_of(f1, {a, b, a}, f2), 1},
                                {rank_of(f1, {b, a, a}, f2), 1}}));
        }
      }
    }
  }
  return rows;
}

namespace {

std::vector<Element> rows_to_elements(const WordSpace& space,
                                      const std::vector<IntRow>& rows,
                                      FieldSpec field) {
  std::vector<Element> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Element e(field);
    for (const auto& [c, v] : r) e.add_term(space[c], Scalar(field, v));
    if (!e.is_zero()) out.push_back(e.monic());
  }
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) {
    if (a.highest_term() != b.highest_term()) {
      return a.highest_term() > b.highest_term();
    }
    // Tie-break on the term map, compared from the top word down.
    return std::lexicographical_compare(
        a.terms().rbegin(), a.terms().rend(), b.terms().rbegin(),
        b.terms().rend(), [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first > y.first;
          return x.second.to_string() < y.second.to_string();
        });
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Element> generate_S(const Multidegree& delta, FieldSpec field) {
  const WordSpace space(delta);
  return rows_to_elements(space, identity_rows(space), field);
}

std::vector<Element> generate_S_pruned_p3(const Multidegree& delta,
                                          FieldSpec field) {
  if (field.characteristic() != 3) {
    throw std::invalid_argument("pruned generation needs characteristic 3");
  }
  if (!delta.trimmed().is_multilinear()) {
    throw std::invalid_argument("pruned generation needs a multilinear Δ");
  }
  const WordSpace space(delta);
  return rows_to_elements(space,
                          identity_rows(space, IdentityShape::PrunedP3), field);
}

// ---------------------------------------------------------------------------

namespace {

// One rewriting step of a single word in letter x. Returns false when the
// word is already canonical in x.
bool rewrite_word(const Word& w, const Scalar& c, Letter x, Element& out) {
  std::array<std::size_t, 3> pos{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != x) continue;
    if (n == 3) return true;  // degree above three: the word vanishes
    pos[n++] = k;
  }
  const auto letters = w.letters();
  auto cat = [&](std::initializer_list<std::span<const Letter>> parts) {
    std::vector<Letter> v;
    for (auto p : parts) v.insert(v.end(), p.begin(), p.end());
    return Word(std::move(v));
  };
  const Letter xx[2] = {x, x};
  const std::span<const Letter> one(xx, 1);
  const std::span<const Letter> two(xx, 2);
  if (n < 2) return false;
  if (n == 2 && pos[1] == pos[0] + 1) return false;
  if (n == 3 && pos[1] == pos[0] + 1 && pos[2] == pos[1] + 1) return true;
  if (n == 3 && pos[1] == pos[0] + 1) return false;
  const auto A = letters.subspan(0, pos[0]);
  const auto u = letters.subspan(pos[0] + 1, pos[1] - pos[0] - 1);
  if (n == 3 && pos[2] == pos[1] + 1) {
    // x u x^2 = -x^2 u x
    const auto B = letters.subspan(pos[2] + 1);
    out.add_term(cat({A, two, u, one, B}), -c);
    return true;
  }
  // x u x = -(x^2 u + u x^2), applied to the leftmost pair
  const auto B = letters.subspan(pos[1] + 1);
  out.add_term(cat({A, two, u, B}), -c);
  out.add_term(cat({A, u, two, B}), -c);
  return true;
}

}  // namespace

Element rewrite_step_eq1(const Element& g, Letter i) {
  Element cur = g;
  for (;;) {
    Element next(g.field());
    bool changed = false;
    for (const auto& [w, c] : cur.terms()) {
      if (rewrite_word(w, c, i, next)) {
        changed = true;
      } else {
        next.add_term(w, c);
      }
    }
    if (!changed) return cur;
    cur = std::move(next);
  }
}

Element canonicalize(const Element& g, std::size_t max_rounds) {
  Element cur = g;
  Letter top = 0;
  for (const auto& [w, c] : g.terms()) top = std::max(top, w.max_letter());
  for (std::size_t round = 0; round < max_rounds; ++round) {
    Element before = cur;
    for (Letter i = 1; i <= top && i != 0; ++i) cur = rewrite_step_eq1(cur, i);
    if (cur == before) return cur;
  }
  throw std::runtime_error("canonicalize did not reach a fixpoint");
}

}  // namespace nilcube

#include "nilcube/composition.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcube/detail/fields.hpp"
#include "nilcube/linalg.hpp"

namespace nilcube {

using detail::PrimeField;
using detail::RationalField;
using detail::Row;

std::vector<Element> ModRowSystem::elements() const {
  const FieldSpec field(p);
  std::vector<Element> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Element e(field);
    for (const auto& [c, v] : r) e.add_term((*space)[c], Scalar(field, v));
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

void require_p23(unsigned p) {
  if (p != 2 && p != 3) {
    throw std::invalid_argument("the composition method is set up for p = 2 "
                                "and p = 3 only");
  }
}

}  // namespace

ModRowSystem build_M5_rows(unsigned p) {
  require_p23(p);
  const auto es = echelonize_S(Multidegree::multilinear(5), FieldSpec(p));
  ModRowSystem m{es.space_ptr(), p, {}};
  const auto* e = es.prime();
  for (std::uint32_t c : e->pivots()) m.rows.push_back(e->row_for(c));
  return m;
}

ModRowSystem build_Md_rows(unsigned p, std::size_t d) {
  require_p23(p);
  if (d < 5 || d > 8) throw std::invalid_argument("build_Md needs 5 <= d <= 8");
  const ModRowSystem m5 = build_M5_rows(p);
  if (d == 5) return m5;
  // Row of M_5 led by each of the 120 patterns, if any.
  std::vector<const Row<std::uint32_t>*> by_lead(m5.space->size(), nullptr);
  for (const auto& r : m5.rows) by_lead[r.front().first] = &r;

  auto space = std::make_shared<const WordSpace>(Multidegree::multilinear(d));
  ModRowSystem out{space, p, {}};
  std::vector<Letter> buf(d);
  std::array<std::size_t, 6> cut{};  // block k is w[cut[k], cut[k+1])
  for (std::size_t wi = 0; wi < space->size(); ++wi) {
    const auto w = (*space)[wi].letters();
    for (std::size_t pre = 0; pre + 5 <= d; ++pre) {
      // compositions of d - pre into five positive parts
      cut[0] = pre;
      cut[5] = d;
      for (cut[1] = pre + 1; cut[1] + 4 <= d; ++cut[1]) {
        for (cut[2] = cut[1] + 1; cut[2] + 3 <= d; ++cut[2]) {
          for (cut[3] = cut[2] + 1; cut[3] + 2 <= d; ++cut[3]) {
            for (cut[4] = cut[3] + 1; cut[4] + 1 <= d; ++cut[4]) {
              // Pattern: rank of each block's first letter among the five.
              std::array<Letter, 5> pat{};
              for (int k = 0; k < 5; ++k) {
                Letter r = 1;
                for (int j = 0; j < 5; ++j) {
                  if (w[cut[j]] < w[cut[k]]) ++r;
                }
                pat[k] = r;
              }
              const auto lead = m5.space->index_of(std::span<const Letter>(pat));
              const auto* t = by_lead[lead];
              if (t == nullptr) continue;
              // block of rank r, by its position
              std::array<int, 6> pos{};
              for (int k = 0; k < 5; ++k) pos[pat[k]] = k;
              Row<std::uint32_t> row;
              row.reserve(t->size());
              for (const auto& [c, v] : *t) {
                const auto& src = (*m5.space)[c];
                auto it = std::copy(w.begin(), w.begin() + pre, buf.begin());
                for (Letter x : src) {
                  const int k = pos[x];
                  it = std::copy(w.begin() + cut[k], w.begin() + cut[k + 1], it);
                }
                row.emplace_back(static_cast<std::uint32_t>(space->index_of(buf)), v);
              }
              out.rows.push_back(std::move(row));
            }
          }
        }
      }
    }
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

std::vector<Element> build_M5(unsigned p) { return build_M5_rows(p).elements(); }

std::vector<Element> build_Md(unsigned p, std::size_t d) {
  return build_Md_rows(p, d).elements();
}

EchelonSystem echelon_of(const ModRowSystem& m) {
  std::vector<const Row<std::uint32_t>*> first(m.space->size(), nullptr);
  for (const auto& r : m.rows) {
    auto& slot = first[r.front().first];
    if (slot == nullptr || r < *slot) slot = &r;
  }
  auto e = std::make_shared<detail::SparseEchelon<PrimeField>>(PrimeField(m.p),
                                                              m.space->size());
  for (const auto* r : first) {
    if (r != nullptr) e->insert(*r);
  }
  e->finalize();
  return EchelonSystem(m.space, FieldSpec(m.p), std::move(e));
}

std::vector<Word> B_of(const ModRowSystem& m) {
  std::vector<char> lead(m.space->size(), 0);
  for (const auto& r : m.rows) lead[r.front().first] = 1;
  std::vector<Word> out;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (!lead[i]) out.push_back((*m.space)[i]);
  }
  return out;
}

std::vector<Word> B_of(const std::vector<Element>& m, const Multidegree& delta) {
  std::vector<Word> leads;
  for (const auto& e : m) {
    if (!e.is_zero()) leads.push_back(e.highest_term());
  }
  std::sort(leads.begin(), leads.end());
  std::vector<Word> out;
  for (const auto& w : enumerate_words(delta)) {
    if (!std::binary_search(leads.begin(), leads.end(), w)) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Block = std::span<const Letter>;

bool gt(Block a, Block b) {
  const auto c = prefix_compare(a, b);
  return c.has_value() && *c == std::strong_ordering::greater;
}

bool pattern_p2(const std::vector<Block>& a) {
  auto g = [&](int i, int j) { return gt(a[i - 1], a[j - 1]); };
  switch (a.size()) {
    case 3:
      return g(1, 2) && g(2, 3);
    case 4:
      return (g(1, 2) && g(1, 4) && g(3, 4)) || (g(1, 4) && g(2, 3));
    case 5:
      return (g(1, 2) && (g(3, 4) || g(3, 5) || g(4, 5))) ||
             (g(1, 3) && (g(2, 4) || g(2, 5) || g(4, 5))) ||
             (g(1, 4) && g(2, 5));
    default:
      return false;
  }
}

bool pattern_p3(const std::vector<Block>& a) {
  auto g = [&](int i, int j) { return gt(a[i - 1], a[j - 1]); };
  switch (a.size()) {
    case 3:
      return g(1, 2) && g(2, 3);
    case 4:
      return g(1, 2) && g(1, 4);
    case 5:
      return (g(1, 2) && g(1, 3) && g(4, 5)) ||
             (g(1, 3) && g(1, 4) && g(2, 5)) ||
             (g(1, 4) && g(1, 5) && g(2, 3));
    default:
      return false;
  }
}

// Tries every split of `rest` into `k` non-empty blocks.
bool any_split(Block rest, std::size_t k, std::vector<Block>& blocks,
               bool (*pattern)(const std::vector<Block>&)) {
  if (k == 1) {
    blocks.push_back(rest);
    const bool hit = pattern(blocks);
    blocks.pop_back();
    return hit;
  }
  for (std::size_t len = 1; len + (k - 1) <= rest.size(); ++len) {
    blocks.push_back(rest.subspan(0, len));
    const bool hit = any_split(rest.subspan(len), k - 1, blocks, pattern);
    blocks.pop_back();
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool classify_highest_term(unsigned p, const Word& w) {
  require_p23(p);
  if (w.empty() || !mdeg(w).is_multilinear()) {
    throw std::invalid_argument("classify_highest_term needs a multilinear "
                                "word");
  }
  const auto pattern = p == 2 ? &pattern_p2 : &pattern_p3;
  const Block all = w.letters();
  std::vector<Block> blocks;
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t u = 0; u + k <= all.size(); ++u) {
      if (any_split(all.subspan(u), k, blocks, pattern)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
CompletenessReport check_complete(const F& f, const WordSpace& space,
                                  std::vector<Row<typename F::value_type>> rows) {
  using V = typename F::value_type;
  CompletenessReport rep;
  rep.rows = rows.size();
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.front().first < b.front().first;
  });
  detail::SparseEchelon<F> span(f, space.size());
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i + 1;
    const auto lead = rows[i].front().first;
    while (j < rows.size() && rows[j].front().first == lead) ++j;
    ++rep.leading_words;
    for (std::size_t k = i + 1; k < j; ++k) {
      ++rep.collisions;
      // t_k - t_1
      std::vector<std::pair<std::uint32_t, V>> diff;
      for (const auto& e : rows[k]) diff.push_back(e);
      for (const auto& [c, v] : rows[i]) diff.emplace_back(c, f.neg(v));
      std::sort(diff.begin(), diff.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      Row<V> merged;
      for (auto& [c, v] : diff) {
        if (!merged.empty() && merged.back().first == c) {
          merged.back().second = f.add(merged.back().second, v);
        } else {
          merged.emplace_back(c, std::move(v));
        }
      }
      std::erase_if(merged, [&](const auto& e) { return f.is_zero(e.second); });
      if (!span.reduce_scratch(merged).empty()) {
        ++rep.failures;
        if (rep.complete) rep.first_failure = space[lead];
        rep.complete = false;
      }
    }
    span.insert(rows[i]);
    i = j;
  }
  return rep;
}

}  // namespace

CompletenessReport check_complete_under_composition(const ModRowSystem& m) {
  return check_complete(PrimeField(m.p), *m.space, m.rows);
}

bool check_complete_under_composition(const std::vector<Element>& m) {
  if (m.empty()) return true;
  const Multidegree delta = m.front().mdeg();
  const WordSpace space(delta);
  const FieldSpec field = m.front().field();
  for (const auto& e : m) {
    if (e.is_zero() || !e.leading_coefficient().is_one()) {
      throw std::invalid_argument("composition check needs reduced (monic) "
                                  "identities");
    }
    if (e.field() != field || e.mdeg() != delta) {
      throw std::invalid_argument("composition check needs one field and one "
                                  "multidegree");
    }
  }
  auto convert = [&](const auto& f) {
    using V = typename std::decay_t<decltype(f)>::value_type;
    std::vector<Row<V>> rows;
    for (const auto& e : m) {
      Row<V> r;
      for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        r.emplace_back(static_cast<std::uint32_t>(space.index_of(it->first)),
                       f.from_scalar(it->second));
      }
      rows.push_back(std::move(r));
    }
    return check_complete(f, space, std::move(rows)).complete;
  };
  if (field.is_rational()) return convert(RationalField{});
  return convert(PrimeField(field.characteristic()));
}

}  // namespace nilcube

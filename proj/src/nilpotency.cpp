#include "nilcube/nilpotency.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "nilcube/certificates.hpp"
#include "nilcube/coeffs.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/tables.hpp"

namespace nilcube {

std::string to_string(NilpotencyMethod m) {
  switch (m) {
    case NilpotencyMethod::Formula:
      return "formula";
    case NilpotencyMethod::Gauss:
      return "gauss";
    case NilpotencyMethod::Certificate:
      return "certificate";
  }
  return "?";
}

std::size_t C_formula(unsigned p, std::size_t d) {
  if (d < 2) throw std::invalid_argument("C_formula needs d >= 2");
  (void)FieldSpec(p);
  if (p == 3) return 3 * d + 1;
  if (p == 2) return d == 2 ? 6 : d + 3;
  return 6;
}

namespace {

// Sorted profiles of length at most d, entries 1..3, with the given norm.
std::vector<Multidegree> profiles(std::size_t d, unsigned norm) {
  std::vector<Multidegree> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left,
                                                    unsigned cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == d) return;
    for (unsigned v = std::min(cap, left); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(norm, 3);
  return out;
}

}  // namespace

NilpotencyReport C_compute(unsigned p, std::size_t d,
                           std::uint64_t max_words_gauss) {
  const FieldSpec field(p);
  if (d == 0) throw std::invalid_argument("C_compute needs d >= 1");
  NilpotencyReport rep;
  rep.p = p;
  rep.d = d;
  bool used_table = false;
  for (auto norm = static_cast<unsigned>(3 * d); norm >= 1; --norm) {
    for (const auto& m : profiles(d, norm)) {
      ++rep.components_checked;
      if (word_count(m) <= max_words_gauss) {
        ++rep.components_by_gauss;
        const auto es = echelonize_S(m, field);
        if (es.dim() == 0) continue;
        // Prefer the closed-form word as witness when it is nonzero.
        Word w = es.minimal_basis().front();
        const auto t = table(p, m);
        if (!t.words.empty() &&
            !es.membership(Element(field, t.words.front()))) {
          w = t.words.front();
        }
        rep.C = norm + 1;
        rep.witness = w;
        rep.witness_mdeg = m;
        rep.witness_dim = es.dim();
        rep.method =
            used_table ? NilpotencyMethod::Formula : NilpotencyMethod::Gauss;
        return rep;
      }
      used_table = true;
      const auto t = table(p, m);
      if (t.words.empty()) continue;
      rep.C = norm + 1;
      rep.witness = t.words.front();
      rep.witness_mdeg = m;
      rep.witness_dim = t.words.size();
      rep.method = NilpotencyMethod::Formula;
      if (m.is_multilinear() && (p == 2 || p == 3) && d >= 4 && d <= 9) {
        if (certify_independence(p, t.words).independent) {
          rep.method = NilpotencyMethod::Certificate;
        }
      }
      return rep;
    }
  }
  throw std::logic_error("N_{3,d} has no nonzero component");
}

}  // namespace nilcube

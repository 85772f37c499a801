#include "nilcube/certificates.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "nilcube/composition.hpp"
#include "nilcube/detail/echelon.hpp"
#include "nilcube/linalg.hpp"

namespace nilcube {

using detail::Row;

namespace {

void require_char(const FieldSpec& f, std::initializer_list<unsigned> ps,
                  const char* what) {
  if (std::find(ps.begin(), ps.end(), f.characteristic()) == ps.end()) {
    throw std::invalid_argument(std::string(what) +
                                " is not defined in characteristic " +
                                std::to_string(f.characteristic()));
  }
}

bool has_factor(const Word& w, Letter a, Letter b) {
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    if (w[t] == a && w[t + 1] == b) return true;
  }
  return false;
}

std::size_t count_factor(const Word& w, Letter a, Letter b) {
  std::size_t n = 0;
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    if (w[t] == a && w[t + 1] == b) ++n;
  }
  return n;
}

// Value of a single-valued functional on a word, as an integer.
long word_value(const Functional& f, const Word& w) {
  switch (f.kind) {
    case Functional::Kind::PhiSum:
      return 1;
    case Functional::Kind::PhiAdj:
      return has_factor(w, f.i, f.j) ? 1 : 0;
    case Functional::Kind::PhiEven:
      return is_even_permutation_word(w) ? 1 : 0;
    case Functional::Kind::PsiCount:
      break;
  }
  throw std::logic_error("psi_count has two values");
}

}  // namespace

Functional Functional::phi_sum(FieldSpec field) {
  require_char(field, {2, 3}, "phi_sum");
  return Functional{Kind::PhiSum, field, 0, 0};
}

Functional Functional::phi_adj(FieldSpec field, Letter i, Letter j) {
  require_char(field, {2}, "phi_adj");
  if (i == 0 || j == 0 || i == j) {
    throw std::invalid_argument("phi_adj needs two distinct letters");
  }
  return Functional{Kind::PhiAdj, field, i, j};
}

Functional Functional::phi_even(FieldSpec field) {
  require_char(field, {3}, "phi_even");
  return Functional{Kind::PhiEven, field, 0, 0};
}

Functional Functional::psi_count(FieldSpec field) {
  require_char(field, {2}, "psi_count");
  return Functional{Kind::PsiCount, field, 1, 2};
}

std::string Functional::to_string() const {
  switch (kind) {
    case Kind::PhiSum:
      return "phi_sum";
    case Kind::PhiAdj:
      return "phi_adj(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::PhiEven:
      return "phi_even";
    case Kind::PsiCount:
      return "psi_count";
  }
  return "?";
}

std::vector<Scalar> apply_functional(const Functional& f, const Element& g) {
  if (g.field() != f.field) {
    throw std::invalid_argument("functional and element live over different "
                                "fields");
  }
  std::vector<Scalar> out(f.arity(), Scalar::zero(f.field));
  if (g.is_zero()) return out;
  const Multidegree m = g.mdeg();
  if (f.kind == Functional::Kind::PsiCount) {
    bool ok = m.size() >= 2 && m[0] == 2 && m[1] == 2;
    for (std::size_t t = 2; t < m.size(); ++t) ok = ok && m[t] == 1;
    if (!ok) {
      throw std::invalid_argument("psi_count needs multidegree 2^2 1^(d-2)");
    }
    for (const auto& [w, c] : g.terms()) {
      out[0] += c * Scalar(f.field, static_cast<long>(count_factor(w, 1, 2)));
      out[1] += c * Scalar(f.field, static_cast<long>(count_factor(w, 2, 1)));
    }
    return out;
  }
  if (!m.is_multilinear()) {
    throw std::invalid_argument(f.to_string() + " needs a multilinear element");
  }
  for (const auto& [w, c] : g.terms()) {
    out[0] += c * Scalar(f.field, word_value(f, w));
  }
  return out;
}

// ---------------------------------------------------------------------------

Reducer Reducer::phi_delete(Letter k) {
  if (k == 0) throw std::invalid_argument("letters are 1-based");
  return Reducer{Kind::PhiDelete, k};
}

Reducer Reducer::pi_symmetrize(Letter k) {
  if (k == 0) throw std::invalid_argument("letters are 1-based");
  return Reducer{Kind::PiSymmetrize, k};
}

std::string Reducer::to_string() const {
  return (kind == Kind::PhiDelete ? "phi_delete(" : "pi_symmetrize(") +
         std::to_string(k) + ")";
}

namespace {

Word delete_letter(const Word& w, Letter k, bool relabel) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == k) continue;
    out.push_back(relabel && x > k ? static_cast<Letter>(x - 1) : x);
  }
  return Word(std::move(out));
}

}  // namespace

Element apply_reducer(const Reducer& r, const Element& g, bool relabel) {
  require_char(g.field(), {3}, r.to_string().c_str());
  Element out(g.field());
  if (g.is_zero()) return out;
  const unsigned dk = g.mdeg().of(r.k);
  if (r.kind == Reducer::Kind::PhiDelete) {
    if (dk != 1 && dk != 2) {
      throw std::invalid_argument("phi_delete needs the letter to occur once "
                                  "or twice");
    }
    for (const auto& [w, c] : g.terms()) {
      out.add_term(delete_letter(w, r.k, relabel), c);
    }
    return out;
  }
  if (dk != 3) {
    throw std::invalid_argument("pi_symmetrize needs the letter to occur three "
                                "times");
  }
  for (const auto& [w, c] : g.terms()) {
    std::array<std::size_t, 3> at{};
    std::size_t n = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t] == r.k) at[n++] = t;
    }
    const Word u1 = w.subword(0, at[0]);
    const Word u2 = w.subword(at[0] + 1, at[1] - at[0] - 1);
    const Word u3 = w.subword(at[1] + 1, at[2] - at[1] - 1);
    const Word u4 = w.subword(at[2] + 1, w.size() - at[2] - 1);
    const Word x{static_cast<int>(r.k)};
    out.add_term(u1 + x + u2 + u3 + u4, c);
    out.add_term(u1 + u2 + x + u3 + u4, c);
    out.add_term(u1 + u2 + u3 + x + u4, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CertifyMethod m) {
  switch (m) {
    case CertifyMethod::Auto:
      return "auto";
    case CertifyMethod::PhiAdj:
      return "phi_adj";
    case CertifyMethod::PhiK:
      return "phi_k-recursive";
    case CertifyMethod::PrunedRewrite:
      return "pruned-rewrite";
  }
  return "?";
}

bool certify_with_functionals(const std::vector<Word>& candidate,
                              const std::vector<Functional>& fs) {
  if (candidate.empty()) return true;
  if (fs.empty()) return false;
  const FieldSpec field = fs.front().field;
  std::vector<Row<std::uint32_t>> rows;
  std::size_t ncols = 0;
  for (const auto& f : fs) ncols += f.arity();
  for (const auto& w : candidate) {
    Row<std::uint32_t> r;
    std::uint32_t col = 0;
    for (const auto& f : fs) {
      if (f.field != field) {
        throw std::invalid_argument("functionals over different fields");
      }
      const auto vals = apply_functional(f, Element(field, w));
      for (const auto& v : vals) {
        if (!v.is_zero()) r.emplace_back(col, v.residue());
        ++col;
      }
    }
    std::reverse(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  return rank_mod_p(field.characteristic(), ncols, rows) == candidate.size();
}

namespace {

struct Candidate {
  unsigned p;
  std::size_t d;
  std::vector<Word> words;
};

Candidate check_candidate(unsigned p, const std::vector<Word>& words) {
  if (p != 2 && p != 3) {
    throw std::invalid_argument("certificates exist for p = 2 and p = 3 only");
  }
  if (words.empty()) throw std::invalid_argument("empty candidate");
  const std::size_t d = words.front().size();
  for (const auto& w : words) {
    if (w.size() != d || !mdeg(w).is_multilinear() || w.max_letter() != d) {
      throw std::invalid_argument("certificates need multilinear words of one "
                                  "multidegree");
    }
  }
  Candidate c{p, d, words};
  std::sort(c.words.begin(), c.words.end());
  c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
  return c;
}

CertificateReport run(const Candidate& c, CertifyMethod method);

CertificateReport phi_adj(const Candidate& c) {
  if (c.p != 2) throw std::invalid_argument("phi_adj needs p = 2");
  const FieldSpec field(2);
  std::vector<Functional> fs{Functional::phi_sum(field)};
  for (std::size_t i = 1; i <= c.d; ++i) {
    for (std::size_t j = 1; j <= c.d; ++j) {
      if (i != j) {
        fs.push_back(Functional::phi_adj(field, static_cast<Letter>(i),
                                         static_cast<Letter>(j)));
      }
    }
  }
  CertificateReport rep;
  rep.method = CertifyMethod::PhiAdj;
  rep.d = c.d;
  rep.candidate_size = c.words.size();
  rep.equations = fs.size();
  std::vector<Row<std::uint32_t>> rows;
  for (const auto& w : c.words) {
    Row<std::uint32_t> r;
    for (std::uint32_t col = 0; col < fs.size(); ++col) {
      if (word_value(fs[col], w) != 0) r.emplace_back(col, 1);
    }
    std::reverse(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  rep.rank = rank_mod_p(2, fs.size(), rows);
  rep.independent = rep.rank == c.words.size();
  return rep;
}

// Normal forms on 1^n over GF(3) with a certified basis; nullopt when the
// basis of 1^n could not be certified.
std::optional<EchelonSystem> lower_system(std::size_t n,
                                          CertificateReport& rep) {
  if (n <= 5) return echelonize_S(Multidegree::multilinear(n), FieldSpec(3));
  const auto basis = B1d(3, n).words;
  auto sub = run(check_candidate(3, basis), CertifyMethod::Auto);
  const bool ok = sub.independent;
  rep.prerequisites.push_back(std::move(sub));
  if (!ok) return std::nullopt;
  auto es = echelon_of(build_Md_rows(3, n));
  if (es.minimal_basis() != basis) {
    throw std::runtime_error("leading words of M_d do not match B_{1^d}");
  }
  return es;
}

CertificateReport phi_k(const Candidate& c) {
  if (c.p != 3) throw std::invalid_argument("phi_k needs p = 3");
  if (c.d < 2 || c.d > 9) {
    throw std::invalid_argument("phi_k certificate supports 2 <= d <= 9");
  }
  CertificateReport rep;
  rep.method = CertifyMethod::PhiK;
  rep.d = c.d;
  rep.candidate_size = c.words.size();
  const auto lower_opt = lower_system(c.d - 1, rep);
  if (!lower_opt) return rep;
  const EchelonSystem& lower = *lower_opt;
  const auto* e = lower.prime();
  const auto free = lower.free_columns();
  std::vector<std::uint32_t> pos(lower.space().size(), 0);
  for (std::uint32_t t = 0; t < free.size(); ++t) pos[free[t]] = t;
  const std::size_t nb = free.size();
  const std::size_t ncols = c.d * nb + 1;
  rep.equations = ncols;

  std::vector<Row<std::uint32_t>> rows;
  for (const auto& w : c.words) {
    Row<std::uint32_t> r;
    for (std::size_t k = 1; k <= c.d; ++k) {
      const Word img = delete_letter(w, static_cast<Letter>(k), true);
      const auto col = static_cast<std::uint32_t>(lower.space().index_of(img));
      const auto off = static_cast<std::uint32_t>((k - 1) * nb);
      if (!e->is_pivot(col)) {
        r.emplace_back(off + pos[col], 1);
        continue;
      }
      const auto& row = e->row_for(col);
      for (std::size_t t = 1; t < row.size(); ++t) {
        r.emplace_back(off + pos[row[t].first], 3 - row[t].second);
      }
    }
    if (is_even_permutation_word(w)) {
      r.emplace_back(static_cast<std::uint32_t>(ncols - 1), 1);
    }
    rows.push_back(std::move(r));
  }
  rep.rank = rank_mod_p(3, ncols, rows);
  rep.independent = rep.rank == c.words.size();
  return rep;
}

CertificateReport pruned_rewrite(const Candidate& c) {
  if (c.p != 3) throw std::invalid_argument("pruned-rewrite needs p = 3");
  if (c.d < 5 || c.d > 8) {
    throw std::invalid_argument("pruned-rewrite supports 5 <= d <= 8");
  }
  CertificateReport rep;
  rep.method = CertifyMethod::PrunedRewrite;
  rep.d = c.d;
  rep.candidate_size = c.words.size();
  const auto es = echelon_of(build_Md_rows(3, c.d));
  rep.rank = es.rank();
  if (es.minimal_basis() != c.words) return rep;
  const auto* e = es.prime();
  const auto rows = identity_rows(es.space(), IdentityShape::PrunedP3);
  rep.equations = rows.size();
  for (const auto& r : rows) {
    Row<std::uint32_t> m;
    for (const auto& [col, v] : r) {
      const auto red = static_cast<std::uint32_t>(((v % 3) + 3) % 3);
      if (red != 0) m.emplace_back(col, red);
    }
    if (m.empty()) continue;
    if (!e->reduce(m).empty()) return rep;
  }
  rep.independent = true;
  return rep;
}

CertificateReport run(const Candidate& c, CertifyMethod method) {
  if (method == CertifyMethod::Auto) {
    if (c.p == 2) {
      method = CertifyMethod::PhiAdj;
    } else if (c.d % 2 == 1 && c.d >= 5) {
      method = CertifyMethod::PrunedRewrite;
    } else {
      method = CertifyMethod::PhiK;
    }
  }
  switch (method) {
    case CertifyMethod::PhiAdj:
      return phi_adj(c);
    case CertifyMethod::PhiK:
      return phi_k(c);
    case CertifyMethod::PrunedRewrite:
      return pruned_rewrite(c);
    case CertifyMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CertificateReport certify_independence(unsigned p,
                                       const std::vector<Word>& candidate,
                                       CertifyMethod method) {
  return run(check_candidate(p, candidate), method);
}

CertificateReport certify_independence(const BasisTable& candidate,
                                       CertifyMethod method) {
  return certify_independence(candidate.field.characteristic(),
                              candidate.words, method);
}

}  // namespace nilcube

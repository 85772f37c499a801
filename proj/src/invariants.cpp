#include "nilcube/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nilcube/tables.hpp"

namespace nilcube {

TraceGenerator TraceGenerator::sigma(unsigned k, Letter i) {
  if (k < 1 || k > 3 || i == 0) {
    throw std::invalid_argument("sigma_k needs k in 1..3 and a letter");
  }
  std::vector<unsigned> c(i, 0);
  c[i - 1] = k;
  TraceGenerator g;
  g.kind = Kind::Sigma;
  g.k = k;
  g.letter = i;
  g.mdeg = Multidegree(std::move(c));
  return g;
}

TraceGenerator TraceGenerator::trace(const Word& w) {
  if (w.empty()) throw std::invalid_argument("trace of the empty word");
  TraceGenerator g;
  g.kind = Kind::Trace;
  g.word = w;
  g.mdeg = nilcube::mdeg(w);
  return g;
}

std::size_t TraceGenerator::degree() const {
  return kind == Kind::Sigma ? k : word.size();
}

std::string TraceGenerator::to_string() const {
  if (kind == Kind::Sigma) {
    return "sigma" + std::to_string(k) + "(X" + std::to_string(letter) + ")";
  }
  std::string s = "tr(";
  for (Letter x : word) s += "X" + std::to_string(x);
  return s + ")";
}

namespace {

Word power(Letter x, unsigned e) {
  return Word(std::vector<Letter>(e, x));
}

std::vector<TraceGenerator> traces_of(const std::vector<Word>& us,
                                      const Word& tail) {
  std::vector<TraceGenerator> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back(TraceGenerator::trace(u + tail));
  return out;
}

}  // namespace

std::vector<TraceGenerator> G_delta(unsigned p, const Multidegree& delta) {
  (void)FieldSpec(p);
  if (!delta.is_sorted_descending()) {
    throw std::invalid_argument("G_delta needs a descending multidegree");
  }
  const Multidegree m = delta.trimmed();
  const std::size_t n = m.size();
  if (n == 0 || m.max_entry() > 3) return {};
  if (n == 1) return {TraceGenerator::sigma(m[0], 1)};
  const auto last = m[n - 1];
  const auto x = static_cast<Letter>(n);
  const Multidegree head(std::vector<unsigned>(m.counts().begin(),
                                               m.counts().end() - 1));
  if (p != 3) {
    if (last == 1) return traces_of(table(p, head).words, Word{int(n)});
    if (m == Multidegree{2, 2, 2}) {
      return {TraceGenerator::trace(Word{1, 1, 2, 2, 3, 3})};
    }
    if (m == Multidegree{2, 2}) return {TraceGenerator::trace(Word{1, 1, 2, 2})};
    if (m == Multidegree{3, 3}) {
      return {TraceGenerator::trace(Word{1, 1, 2, 2, 1, 2})};
    }
    return {};
  }
  if (last == 1 || last == 2) {
    return traces_of(table(p, head).words, power(x, last));
  }
  // last == 3, so every entry is 3
  if (n % 2 == 0 || (n % 6 == 1 && n > 1)) {
    return traces_of(table(p, m).words, Word{});
  }
  return {};
}

std::size_t GeneratingSystem::total() const {
  std::size_t n = 0;
  for (const auto& [m, gs] : groups) n += gs.size();
  return n;
}

std::size_t GeneratingSystem::max_degree() const {
  std::size_t best = 0;
  for (const auto& [m, gs] : groups) {
    for (const auto& g : gs) best = std::max(best, g.degree());
  }
  return best;
}

std::map<std::size_t, std::size_t> GeneratingSystem::by_degree() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [m, gs] : groups) {
    for (const auto& g : gs) ++out[g.degree()];
  }
  return out;
}

namespace {

TraceGenerator relabel(const TraceGenerator& g,
                       const std::vector<Letter>& to) {
  if (g.kind == TraceGenerator::Kind::Sigma) {
    return TraceGenerator::sigma(g.k, to[g.letter - 1]);
  }
  std::vector<Letter> w;
  w.reserve(g.word.size());
  for (Letter x : g.word) w.push_back(to[x - 1]);
  return TraceGenerator::trace(Word(std::move(w)));
}

}  // namespace

GeneratingSystem full_system(unsigned p, std::size_t d) {
  (void)FieldSpec(p);
  if (d == 0) throw std::invalid_argument("full_system needs d >= 1");
  GeneratingSystem sys;
  sys.p = p;
  sys.d = d;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned cap) {
    if (!cur.empty()) {
      const auto gens = G_delta(p, Multidegree(cur));
      if (!gens.empty()) {
        std::vector<unsigned> a(cur);
        a.resize(d, 0);
        std::sort(a.begin(), a.end());
        do {
          // letter r of the profile goes to the r-th position of a, ordered by
          // descending entry and then by position
          std::vector<Letter> order;
          for (std::size_t i = 0; i < d; ++i) {
            if (a[i] != 0) order.push_back(static_cast<Letter>(i));
          }
          std::stable_sort(order.begin(), order.end(),
                           [&](Letter u, Letter v) { return a[u] > a[v]; });
          for (auto& x : order) ++x;
          auto& group = sys.groups[a];
          for (const auto& g : gens) group.push_back(relabel(g, order));
        } while (std::next_permutation(a.begin(), a.end()));
      }
    }
    if (cur.size() == d) return;
    for (unsigned v = cap; v >= 1; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(3);
  return sys;
}

// ---------------------------------------------------------------------------

Matrix3::Matrix3(FieldSpec field) : field_(field) {
  a_.fill(Scalar::zero(field));
}

Matrix3::Matrix3(FieldSpec field, const std::vector<std::vector<long>>& rows)
    : Matrix3(field) {
  if (rows.size() != 3) throw std::invalid_argument("matrix must be 3x3");
  for (std::size_t r = 0; r < 3; ++r) {
    if (rows[r].size() != 3) throw std::invalid_argument("matrix must be 3x3");
    for (std::size_t c = 0; c < 3; ++c) at(r, c) = Scalar(field, rows[r][c]);
  }
}

Matrix3 Matrix3::identity(FieldSpec field) {
  Matrix3 m(field);
  for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix3 Matrix3::random(FieldSpec field, std::mt19937_64& rng) {
  Matrix3 m(field);
  const long lo = field.is_rational() ? -9 : 0;
  const long hi =
      field.is_rational() ? 9 : static_cast<long>(field.characteristic()) - 1;
  std::uniform_int_distribution<long> dist(lo, hi);
  for (auto& x : m.a_) x = Scalar(field, dist(rng));
  return m;
}

Scalar Matrix3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Scalar Matrix3::sigma2() const {
  auto minor = [&](std::size_t i, std::size_t j) {
    return at(i, i) * at(j, j) - at(i, j) * at(j, i);
  };
  return minor(0, 1) + minor(0, 2) + minor(1, 2);
}

Scalar Matrix3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  if (a.field_ != b.field_) {
    throw std::invalid_argument("matrices over different fields");
  }
  Matrix3 m(a.field_);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Scalar s = Scalar::zero(a.field_);
      for (std::size_t t = 0; t < 3; ++t) s += a.at(r, t) * b.at(t, c);
      m.at(r, c) = s;
    }
  }
  return m;
}

Scalar eval_trace(const TraceGenerator& gen,
                  const std::vector<Matrix3>& matrices) {
  if (matrices.empty()) throw std::invalid_argument("no matrices given");
  const FieldSpec field = matrices.front().field();
  for (const auto& m : matrices) {
    if (m.field() != field) {
      throw std::invalid_argument("matrices over different fields");
    }
  }
  auto get = [&](Letter x) -> const Matrix3& {
    if (x == 0 || x > matrices.size()) {
      throw std::invalid_argument("no matrix for letter " + std::to_string(x));
    }
    return matrices[x - 1];
  };
  if (gen.kind == TraceGenerator::Kind::Sigma) {
    const auto& m = get(gen.letter);
    switch (gen.k) {
      case 1:
        return m.trace();
      case 2:
        return m.sigma2();
      default:
        return m.det();
    }
  }
  Matrix3 prod = get(gen.word[0]);
  for (std::size_t t = 1; t < gen.word.size(); ++t) prod = prod * get(gen.word[t]);
  return prod.trace();
}

bool nonvanishing(const TraceGenerator& gen, std::size_t d, FieldSpec field,
                  std::uint64_t seed, std::size_t draws) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < draws; ++t) {
    std::vector<Matrix3> ms;
    ms.reserve(d);
    for (std::size_t i = 0; i < d; ++i) ms.push_back(Matrix3::random(field, rng));
    if (!eval_trace(gen, ms).is_zero()) return true;
  }
  return false;
}

}  // namespace nilcube

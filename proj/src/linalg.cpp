#include "nilcube/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace nilcube {

using detail::PrimeField;
using detail::RationalField;
using detail::Row;

EchelonSystem::EchelonSystem(std::shared_ptr<const WordSpace> space,
                             FieldSpec field,
                             std::shared_ptr<const PrimeEchelon> impl)
    : space_(std::move(space)), field_(field), impl_(std::move(impl)) {}

EchelonSystem::EchelonSystem(std::shared_ptr<const WordSpace> space,
                             FieldSpec field,
                             std::shared_ptr<const RationalEchelon> impl)
    : space_(std::move(space)), field_(field), impl_(std::move(impl)) {}

std::size_t EchelonSystem::rank() const {
  return std::visit([](const auto& e) { return e->rank(); }, impl_);
}

std::vector<std::uint32_t> EchelonSystem::free_columns() const {
  return std::visit([](const auto& e) { return e->free_columns(); }, impl_);
}

std::vector<Word> EchelonSystem::minimal_basis() const {
  std::vector<Word> out;
  for (std::uint32_t c : free_columns()) out.push_back((*space_)[c]);
  return out;
}

std::vector<Word> EchelonSystem::leading_words() const {
  std::vector<Word> out;
  const auto piv = std::visit([](const auto& e) { return e->pivots(); }, impl_);
  for (std::uint32_t c : piv) out.push_back((*space_)[c]);
  return out;
}

bool EchelonSystem::is_leading(const Word& w) const {
  if (!space_->contains(w.letters())) return false;
  const auto c = static_cast<std::uint32_t>(space_->index_of(w));
  return std::visit([c](const auto& e) { return e->is_pivot(c); }, impl_);
}

std::vector<Element> EchelonSystem::rows() const {
  std::vector<Element> out;
  std::visit(
      [&](const auto& e) {
        for (std::uint32_t c : e->pivots()) {
          Element el(field_);
          for (const auto& [col, v] : e->row_for(c)) {
            el.add_term((*space_)[col], e->field().to_scalar(v));
          }
          out.push_back(std::move(el));
        }
      },
      impl_);
  return out;
}

namespace {

template <class F>
Row<typename F::value_type> to_row(const WordSpace& space, const F& f,
                                   const Element& g) {
  Row<typename F::value_type> r;
  r.reserve(g.size());
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    if (!space.contains(it->first.letters())) {
      throw std::invalid_argument("word " + it->first.to_string() +
                                  " does not have multidegree " +
                                  space.mdeg().to_string());
    }
    r.emplace_back(static_cast<std::uint32_t>(space.index_of(it->first)),
                   f.from_scalar(it->second));
  }
  return r;
}

void check_field(FieldSpec expected, const Element& g) {
  if (g.field() != expected) {
    throw std::invalid_argument("element over " + g.field().to_string() +
                                " used with a system over " +
                                expected.to_string());
  }
}

template <class F>
std::shared_ptr<const detail::SparseEchelon<F>> build(
    const F& f, std::size_t ncols,
    std::vector<Row<typename F::value_type>> rows) {
  // Monic rows sorted ascending by leading column: small leads first keeps
  // the fill-in of later reductions low.
  for (auto& r : rows) {
    const auto s = f.inv(r.front().second);
    for (auto& e : r) e.second = f.mul(e.second, s);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.front().first != b.front().first) {
      return a.front().first < b.front().first;
    }
    return a < b;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  auto e = std::make_shared<detail::SparseEchelon<F>>(f, ncols);
  for (const auto& r : rows) e->insert(r);
  e->finalize();
  return e;
}

// Rational elimination is dominated by rows that reduce to zero. A pass over
// GF(q) picks rows that are independent there (hence over Q); only those are
// eliminated over Q, and the rest are checked against the finished form.
std::shared_ptr<const RationalEchelon> build_rational(
    std::size_t ncols, std::vector<Row<mpq_class>> rows) {
  RationalField f;
  PrimeField fq(2147483647U);
  for (auto& r : rows) {
    const auto s = f.inv(r.front().second);
    for (auto& e : r) e.second *= s;
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.front().first != b.front().first) {
      return a.front().first < b.front().first;
    }
    return a < b;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto residue = [&](const mpq_class& x) {
    mpz_class q = fq.p;
    mpz_class n = x.get_num() % q;
    mpz_class d = x.get_den() % q;
    if (n < 0) n += q;
    if (d == 0) return std::optional<std::uint32_t>{};
    return std::optional<std::uint32_t>{
        fq.mul(static_cast<std::uint32_t>(n.get_ui()),
               fq.inv(static_cast<std::uint32_t>(d.get_ui())))};
  };
  detail::SparseEchelon<PrimeField> modq(fq, ncols);
  std::vector<char> chosen(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Row<std::uint32_t> r;
    bool ok = true;
    for (const auto& [c, v] : rows[i]) {
      auto x = residue(v);
      if (!x) {
        ok = false;
        break;
      }
      if (*x != 0) r.emplace_back(c, *x);
    }
    // A row that cannot be reduced mod q is simply kept.
    chosen[i] = !ok || modq.insert(r);
  }

  auto e = std::make_shared<RationalEchelon>(f, ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (chosen[i]) e->insert(rows[i]);
  }
  e->finalize();
  if (e->rank() < ncols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (chosen[i] || e->reduce(rows[i]).empty()) continue;
      e->insert(rows[i]);
      e->finalize();
    }
  }
  return e;
}

}  // namespace

Element EchelonSystem::normal_form(const Element& g) const {
  check_field(field_, g);
  Element out(field_);
  std::visit(
      [&](const auto& e) {
        const auto r = e->reduce(to_row(*space_, e->field(), g));
        for (const auto& [c, v] : r) {
          out.add_term((*space_)[c], e->field().to_scalar(v));
        }
      },
      impl_);
  return out;
}

bool EchelonSystem::membership(const Element& g) const {
  return normal_form(g).is_zero();
}

bool EchelonSystem::denominator_flag() const {
  return std::visit([](const auto& e) { return e->ring_ok(); }, impl_);
}

EchelonSystem echelonize(const std::vector<Element>& system,
                         const Multidegree& delta, FieldSpec field) {
  auto space = std::make_shared<const WordSpace>(delta);
  if (field.is_rational()) {
    RationalField f;
    std::vector<Row<mpq_class>> rows;
    for (const auto& g : system) {
      check_field(field, g);
      if (!g.is_zero()) rows.push_back(to_row(*space, f, g));
    }
    return {space, field, build_rational(space->size(), std::move(rows))};
  }
  PrimeField f(field.characteristic());
  std::vector<Row<std::uint32_t>> rows;
  for (const auto& g : system) {
    check_field(field, g);
    if (!g.is_zero()) rows.push_back(to_row(*space, f, g));
  }
  return {space, field, build(f, space->size(), std::move(rows))};
}

EchelonSystem echelonize_rows(std::shared_ptr<const WordSpace> space,
                              const std::vector<IntRow>& rows,
                              FieldSpec field) {
  if (field.is_rational()) {
    std::vector<Row<mpq_class>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.empty()) continue;
      // Primitive integer rows keep the rational kernel on small numbers.
      std::int64_t g = 0;
      for (const auto& [c, v] : r) g = std::gcd(g, v);
      Row<mpq_class> q;
      q.reserve(r.size());
      for (const auto& [c, v] : r) q.emplace_back(c, mpq_class(v / g));
      out.push_back(std::move(q));
    }
    auto e = build_rational(space->size(), std::move(out));
    return {std::move(space), field, e};
  }
  PrimeField f(field.characteristic());
  std::vector<Row<std::uint32_t>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Row<std::uint32_t> q;
    for (const auto& [c, v] : r) {
      const auto x = f.from_int(v);
      if (x != 0) q.emplace_back(c, x);
    }
    if (!q.empty()) out.push_back(std::move(q));
  }
  auto e = build(f, space->size(), std::move(out));
  return {std::move(space), field, e};
}

EchelonSystem echelonize_S(const Multidegree& delta, FieldSpec field,
                           IdentityShape shape) {
  auto space = std::make_shared<const WordSpace>(delta);
  const auto rows = identity_rows(*space, shape);
  return echelonize_rows(std::move(space), rows, field);
}

std::size_t dim_component(unsigned p, const Multidegree& delta) {
  const FieldSpec field(p);
  if (delta.norm() == 0) return 0;
  if (delta.max_entry() > 3) return 0;
  return echelonize_S(delta, field).dim();
}

std::size_t rank_mod_p(unsigned p, std::size_t ncols,
                       const std::vector<Row<std::uint32_t>>& rows) {
  PrimeField f(p);
  detail::SparseEchelon<PrimeField> e(f, ncols);
  for (const auto& r0 : rows) {
    Row<std::uint32_t> r;
    for (const auto& [c, v] : r0) {
      if (c >= ncols) throw std::out_of_range("column out of range");
      if (v % p != 0) r.emplace_back(c, v % p);
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    // merge duplicate columns
    Row<std::uint32_t> m;
    for (const auto& [c, v] : r) {
      if (!m.empty() && m.back().first == c) {
        m.back().second = f.add(m.back().second, v);
        if (m.back().second == 0) m.pop_back();
      } else {
        m.emplace_back(c, v);
      }
    }
    e.insert(m);
  }
  return e.rank();
}

}  // namespace nilcube

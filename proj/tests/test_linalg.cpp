#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilcube/linalg.hpp"
#include "oracle.hpp"
#include "reference_lists.hpp"

using namespace nilcube;

namespace {

std::vector<Word> to_words(const std::vector<oracle::W>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) out.push_back(Word::from_ints(w));
  return out;
}

}  // namespace

TEST_CASE("echelonize examples") {
  const FieldSpec f2(2);
  const Element t2(f2, {{Word{1, 1, 2}, 1}, {Word{1, 2, 1}, 1}, {Word{2, 1, 1}, 1}});
  const auto es = echelonize({t2}, Multidegree{2, 1}, f2);
  CHECK(es.rank() == 1);
  CHECK(es.leading_words() == std::vector<Word>{Word{2, 1, 1}});
  CHECK(es.minimal_basis() == (std::vector<Word>{Word{1, 1, 2}, Word{1, 2, 1}}));

  const auto empty = echelonize({}, Multidegree{2, 1}, f2);
  CHECK(empty.rank() == 0);
  CHECK(empty.minimal_basis() == enumerate_words(Multidegree{2, 1}));

  const auto s111 = echelonize_S(Multidegree{1, 1, 1}, FieldSpec(0));
  CHECK(s111.rank() == 1);
  CHECK(s111.dim() == 5);

  CHECK_THROWS_AS((void)echelonize({t2}, Multidegree{1, 2}, f2),
                  std::invalid_argument);
}

TEST_CASE("minimal bases of the multilinear components") {
  const auto m4 = Multidegree::multilinear(4);
  const auto m5 = Multidegree::multilinear(5);
  CHECK(echelonize_S(m4, FieldSpec(2)).minimal_basis() == reference::p2_1111());
  CHECK(echelonize_S(m5, FieldSpec(2)).minimal_basis() == reference::p2_11111());
  CHECK(echelonize_S(m4, FieldSpec(3)).minimal_basis() == reference::p3_1111());
  CHECK(echelonize_S(m5, FieldSpec(3)).minimal_basis() == reference::p3_11111());
  CHECK(echelonize_S(m4, FieldSpec(0)).minimal_basis() == reference::p0_1111());
  CHECK(echelonize_S(m5, FieldSpec(0)).minimal_basis() == reference::p0_11111());
}

TEST_CASE("the lex-least basis of (2,1)") {
  // The unique row is led by 211, so the least basis is {112, 121}.
  for (unsigned p : {0u, 2u, 5u}) {
    CHECK(echelonize_S(Multidegree{2, 1}, FieldSpec(p)).minimal_basis() ==
          (std::vector<Word>{Word{1, 1, 2}, Word{1, 2, 1}}));
  }
}

TEST_CASE("membership") {
  const FieldSpec f2(2);
  const auto es = echelonize_S(Multidegree{2, 1, 2}, f2);
  for (const auto& r : es.rows()) CHECK(es.membership(r));
  for (const auto& w : es.minimal_basis()) {
    CHECK_FALSE(es.membership(Element(f2, w)));
  }
  CHECK(es.membership(Element(f2, Word{1, 1, 2, 3, 3})));
  CHECK_THROWS_AS((void)es.membership(Element(f2, Word{1, 2})),
                  std::invalid_argument);
}

TEST_CASE("dim_component") {
  CHECK(dim_component(3, Multidegree{3, 3}) == 1);
  CHECK(dim_component(2, Multidegree{2, 2, 1}) == 3);
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    CHECK(dim_component(p, Multidegree{4}) == 0);
    CHECK(dim_component(p, Multidegree{4, 1}) == 0);
  }
}

TEST_CASE("minimal bases agree with dense oracles") {
  const std::vector<std::vector<int>> cases{
      {2, 1}, {1, 1, 1}, {2, 2}, {3, 2}, {2, 1, 1}, {1, 1, 1, 1},
      {3, 3}, {2, 2, 1}, {3, 1, 1}, {1, 1, 1, 1, 1}};
  for (const auto& c : cases) {
    std::vector<unsigned> u(c.begin(), c.end());
    const Multidegree m(u);
    const auto ws = oracle::words(c);
    const auto rows = oracle::S_rows(c);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      const auto ref = oracle::reduce_mod_p(rows, ws, p);
      const auto es = echelonize_S(m, FieldSpec(p));
      CHECK(es.rank() == ref.rank);
      CHECK(es.minimal_basis() == to_words(ref.free_words));
    }
    if (ws.size() <= 120) {
      const auto ref = oracle::reduce_rational(rows, ws);
      const auto es = echelonize_S(m, FieldSpec(0));
      CHECK(es.rank() == ref.rank);
      CHECK(es.minimal_basis() == to_words(ref.free_words));
    }
  }
}

TEST_CASE("echelon form properties") {
  for (unsigned p : {0u, 3u}) {
    const FieldSpec f(p);
    const Multidegree m{2, 1, 1, 1};
    const auto s = generate_S(m, f);
    const auto es = echelonize(s, m, f);
    CHECK(es.rank() + es.minimal_basis().size() == word_count(m));
    // fully reduced: no row touches another row's leading word
    const auto leads = es.leading_words();
    for (const auto& r : es.rows()) {
      CHECK(r.leading_coefficient().is_one());
      for (const auto& [w, c] : r.terms()) {
        if (w == r.highest_term()) continue;
        CHECK_FALSE(std::binary_search(leads.begin(), leads.end(), w));
      }
    }
    // independent of input order
    auto shuffled = s;
    std::mt19937 rng(3);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto es2 = echelonize(shuffled, m, f);
    CHECK(es2.rows() == es.rows());
    // same as the direct construction on ranks
    CHECK(echelonize_S(m, f).rows() == es.rows());
  }
}

TEST_CASE("normal forms") {
  const FieldSpec f(5);
  const Multidegree m{2, 2, 1};
  const auto es = echelonize_S(m, f);
  const auto basis = es.minimal_basis();
  for (const auto& w : enumerate_words(m)) {
    const Element nf = es.normal_form(Element(f, w));
    for (const auto& [u, c] : nf.terms()) {
      CHECK(std::binary_search(basis.begin(), basis.end(), u));
      CHECK(u <= w);
    }
    CHECK(es.membership(nf - Element(f, w)));
  }
}

TEST_CASE("characteristic 0 agrees with GF(5) and GF(7) and stays in Z[1/2,1/3]") {
  for (const Multidegree m :
       {Multidegree::multilinear(4), Multidegree::multilinear(5),
        Multidegree{2, 1, 1, 1}, Multidegree{2, 2, 1}, Multidegree{3, 2}}) {
    const auto q = echelonize_S(m, FieldSpec(0));
    CHECK(q.denominator_flag());
    CHECK(q.minimal_basis() == echelonize_S(m, FieldSpec(5)).minimal_basis());
    CHECK(q.minimal_basis() == echelonize_S(m, FieldSpec(7)).minimal_basis());
  }
}

TEST_CASE("pruned and full systems agree in characteristic 3") {
  for (std::size_t d : {4u, 5u, 6u}) {
    const auto m = Multidegree::multilinear(d);
    CHECK(echelonize_S(m, FieldSpec(3), IdentityShape::PrunedP3).minimal_basis() ==
          echelonize_S(m, FieldSpec(3)).minimal_basis());
  }
}

TEST_CASE("rank_mod_p") {
  using R = detail::Row<std::uint32_t>;
  const std::vector<R> rows{{{2, 1}, {0, 1}}, {{1, 1}, {0, 1}}, {{2, 1}, {1, 1}}};
  CHECK(rank_mod_p(2, 3, rows) == 2);
  CHECK(rank_mod_p(3, 3, rows) == 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nilcube/elements.hpp"
#include "nilcube/linalg.hpp"
#include "oracle.hpp"

using namespace nilcube;

namespace {

Element word(unsigned p, std::initializer_list<int> w) {
  return Element(FieldSpec(p), Word(w));
}

std::vector<oracle::Row> to_rows(const std::vector<Element>& es) {
  std::vector<oracle::Row> out;
  for (const auto& e : es) {
    oracle::Row r;
    for (const auto& [w, c] : e.terms()) {
      r[w.to_ints()] = c.field().is_rational()
                           ? c.rational().get_num().get_si()
                           : static_cast<long>(c.residue());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("linearisations") {
  const FieldSpec f(0);
  const Element x1 = word(0, {1}), x2 = word(0, {2}), x3 = word(0, {3});
  CHECK(T2(x1, x2) ==
        Element(f, {{Word{1, 1, 2}, 1}, {Word{1, 2, 1}, 1}, {Word{2, 1, 1}, 1}}));
  const Element t3 = T3(x1, x2, x3);
  CHECK(t3.size() == 6);
  for (const auto& [w, c] : t3.terms()) CHECK(c.is_one());
  CHECK(T1(x1) == Element(f, Word{1, 1, 1}));
  CHECK_THROWS_AS((void)T1(Element(f, Word{})), std::invalid_argument);
  CHECK_THROWS_AS((void)T2(x1, Element(f)), std::invalid_argument);
  // T3(x1,x1,x2) = 2·T2(x1,x2), which vanishes in characteristic 2
  CHECK(T3(x1, x1, x2) == T2(x1, x2) * Scalar(f, 2));
  CHECK(T3(word(2, {1}), word(2, {1}), word(2, {2})).is_zero());
}

TEST_CASE("generate_S small cases") {
  const auto s3 = generate_S(Multidegree{3}, FieldSpec(5));
  REQUIRE(s3.size() == 1);
  CHECK(s3.front() == word(5, {1, 1, 1}));

  const auto s21 = generate_S(Multidegree{2, 1}, FieldSpec(2));
  REQUIRE(s21.size() == 1);
  CHECK(s21.front() == T2(word(2, {1}), word(2, {2})));
  const auto s21q = generate_S(Multidegree{2, 1}, FieldSpec(0));
  CHECK(s21q.size() == 1);  // T3(x1,x1,x2) is a multiple of T2(x1,x2)

  const auto s111 = generate_S(Multidegree{1, 1, 1}, FieldSpec(0));
  CHECK(echelonize(s111, Multidegree{1, 1, 1}, FieldSpec(0)).dim() == 5);
}

TEST_CASE("generate_S output is monic, homogeneous and duplicate free") {
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    for (const Multidegree m :
         {Multidegree{2, 2}, Multidegree{3, 1, 1}, Multidegree::multilinear(4),
          Multidegree{2, 1, 1}}) {
      const auto s = generate_S(m, FieldSpec(p));
      std::set<std::string> seen;
      for (const auto& e : s) {
        CHECK_FALSE(e.is_zero());
        CHECK(e.leading_coefficient().is_one());
        CHECK(e.mdeg() == m);
        CHECK(seen.insert(e.to_string()).second);
      }
      for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i - 1].highest_term() >= s[i].highest_term());
      }
    }
  }
}

TEST_CASE("generate_S spans the same space as the split oracle") {
  const std::vector<std::vector<int>> cases{
      {3}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 1, 1},
      {1, 1, 1, 1}, {3, 3}, {2, 2, 1}, {1, 1, 1, 1, 1}, {3, 1, 1}};
  for (const auto& c : cases) {
    std::vector<unsigned> u(c.begin(), c.end());
    const Multidegree m(u);
    const auto ws = oracle::words(c);
    const auto ref_rows = oracle::S_rows(c);
    for (unsigned p : {2u, 3u, 5u}) {
      const auto mine = generate_S(m, FieldSpec(p));
      const auto ref = oracle::reduce_mod_p(ref_rows, ws, p);
      // equal spans: equal ranks, and the union has the same rank
      auto both = ref_rows;
      for (const auto& r : to_rows(mine)) both.push_back(r);
      const auto mine_red = oracle::reduce_mod_p(to_rows(mine), ws, p);
      CHECK(mine_red.rank == ref.rank);
      CHECK(oracle::reduce_mod_p(both, ws, p).rank == ref.rank);
      CHECK(mine_red.free_words == ref.free_words);
    }
  }
}

TEST_CASE("pruned system in characteristic 3") {
  const FieldSpec f(3);
  for (std::size_t d : {3u, 4u, 5u}) {
    const auto m = Multidegree::multilinear(d);
    const auto full = echelonize(generate_S(m, f), m, f);
    const auto pruned = echelonize(generate_S_pruned_p3(m, f), m, f);
    CHECK(full.rank() == pruned.rank());
    CHECK(full.minimal_basis() == pruned.minimal_basis());
  }
  CHECK(echelonize(generate_S_pruned_p3(Multidegree::multilinear(4), f),
                   Multidegree::multilinear(4), f)
            .dim() == 12);
  CHECK(echelonize(generate_S_pruned_p3(Multidegree::multilinear(3), f),
                   Multidegree::multilinear(3), f)
            .dim() == 5);
  CHECK_THROWS_AS((void)generate_S_pruned_p3(Multidegree::multilinear(4),
                                             FieldSpec(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)generate_S_pruned_p3(Multidegree{2, 1}, f),
                  std::invalid_argument);
}

TEST_CASE("rewriting with identity (1)") {
  const FieldSpec f(0);
  CHECK(rewrite_step_eq1(Element(f, Word{1, 2, 1}), 1) ==
        Element(f, {{Word{1, 1, 2}, -1}, {Word{2, 1, 1}, -1}}));
  CHECK(rewrite_step_eq1(Element(f, Word{1, 2, 1, 1}), 1) ==
        Element(f, {{Word{1, 1, 2, 1}, -1}}));
  CHECK(rewrite_step_eq1(Element(f, Word{1, 2, 1, 1, 1}), 1).is_zero());
  const Element canon(f, Word{1, 1, 2, 1});
  CHECK(canonicalize(canon) == canon);
  CHECK(canonicalize(Element(f, Word{1, 1, 1, 2})).is_zero());
}

TEST_CASE("canonicalize stays in the coset of the identities") {
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    const FieldSpec f(p);
    for (const Multidegree m :
         {Multidegree{2, 2}, Multidegree{3, 2}, Multidegree{2, 2, 1},
          Multidegree{3, 1, 1}, Multidegree{4, 1}}) {
      const auto es = echelonize_S(m, f);
      for (const auto& w : enumerate_words(m)) {
        const Element g(f, w);
        const Element c = canonicalize(g);
        for (const auto& [u, coef] : c.terms()) CHECK(is_canonical(u));
        CHECK(es.membership(c - g));
      }
    }
  }
}

TEST_CASE("known identities hold in every characteristic") {
  for (unsigned p : {0u, 2u, 5u}) {
    const FieldSpec f(p);
    // x^2 a y^2 = 0 for p != 3
    for (const Word& w : {Word{1, 1, 2, 3, 3}, Word{1, 1, 3, 2, 2},
                          Word{1, 1, 2, 3, 2, 2}}) {
      const auto es = echelonize_S(mdeg(w), f);
      CHECK(es.membership(Element(f, w)));
    }
    // I_1(x,a,b,c) = x^2abc + x^2acb
    const Element i1(f, {{Word{1, 1, 2, 3, 4}, 1}, {Word{1, 1, 2, 4, 3}, 1}});
    CHECK(echelonize_S(Multidegree{2, 1, 1, 1}, f).membership(i1));
  }
  // p = 3: x^2 y^2 x a y = x^2 y^2 x y a
  const FieldSpec f3(3);
  const Element g(f3, {{Word{1, 1, 2, 2, 1, 3, 2}, 1},
                       {Word{1, 1, 2, 2, 1, 2, 3}, -1}});
  CHECK(echelonize_S(Multidegree{3, 3, 1}, f3).membership(g));
  // and x^2 a y^2 is not an identity there
  CHECK_FALSE(echelonize_S(Multidegree{2, 1, 2}, f3)
                  .membership(Element(f3, Word{1, 1, 2, 3, 3})));
}

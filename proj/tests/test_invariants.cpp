#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nilcube/invariants.hpp"
#include "nilcube/tables.hpp"

using namespace nilcube;

namespace {

std::set<std::string> names(const std::vector<TraceGenerator>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(g.to_string());
  return out;
}

}  // namespace

TEST_CASE("G_delta cases") {
  CHECK(names(G_delta(0, Multidegree{2, 2})) ==
        std::set<std::string>{"tr(X1X1X2X2)"});
  CHECK(names(G_delta(0, Multidegree{3, 3})) ==
        std::set<std::string>{"tr(X1X1X2X2X1X2)"});
  CHECK(names(G_delta(5, Multidegree{2, 2, 2})) ==
        std::set<std::string>{"tr(X1X1X2X2X3X3)"});
  CHECK(G_delta(3, Multidegree{3, 3, 3}).empty());
  CHECK(G_delta(3, Multidegree{3, 3}).size() == 1);
  CHECK(names(G_delta(0, Multidegree{2, 1})) ==
        std::set<std::string>{"tr(X1X1X2)"});
  CHECK(names(G_delta(2, Multidegree{3})) ==
        std::set<std::string>{"sigma3(X1)"});
  CHECK(names(G_delta(3, Multidegree{2, 2})) ==
        std::set<std::string>{"tr(X1X1X2X2)"});
  CHECK(G_delta(0, Multidegree{3, 1}).empty());
  CHECK(G_delta(0, Multidegree{4}).empty());
  CHECK(names(G_delta(0, Multidegree{2, 1, 0})) ==
        std::set<std::string>{"tr(X1X1X2)"});
  CHECK_THROWS_AS((void)G_delta(0, Multidegree{1, 2}), std::invalid_argument);
}

TEST_CASE("p = 3 uses x_d^2 for delta_d = 2 and tables for 3^(2k)") {
  const auto g = G_delta(3, Multidegree{3, 3, 2});
  REQUIRE(g.size() == table(3, Multidegree{3, 3}).words.size());
  for (const auto& t : g) {
    CHECK(t.mdeg == Multidegree{3, 3, 2});
    CHECK(t.word.size() == 8);
    CHECK(t.word[6] == 3);
    CHECK(t.word[7] == 3);
  }
  for (unsigned k = 1; k <= 3; ++k) {
    const Multidegree m(std::vector<unsigned>(2 * k, 3));
    CHECK(G_delta(3, m).size() == 1);
    CHECK(*cardinality(3, m) == 1);
  }
  CHECK(G_delta(3, Multidegree(std::vector<unsigned>(7, 3))).size() ==
        table(3, Multidegree(std::vector<unsigned>(7, 3))).words.size());
  CHECK(G_delta(3, Multidegree(std::vector<unsigned>(5, 3))).empty());
}

TEST_CASE("full system in two letters, characteristic 0") {
  const auto s = full_system(0, 2);
  CHECK(s.total() == 11);
  CHECK(s.max_degree() == 6);
  std::set<std::string> all;
  for (const auto& [m, gs] : s.groups) {
    for (const auto& g : gs) all.insert(g.to_string());
  }
  const std::set<std::string> expected{
      "sigma1(X1)", "sigma2(X1)",   "sigma3(X1)",       "sigma1(X2)",
      "sigma2(X2)", "sigma3(X2)",   "tr(X1X2)",         "tr(X1X1X2)",
      "tr(X2X2X1)", "tr(X1X1X2X2)", "tr(X1X1X2X2X1X2)"};
  CHECK(all == expected);
  const auto one = full_system(0, 1);
  CHECK(one.total() == 3);
}

TEST_CASE("degree bounds") {
  for (std::size_t d = 2; d <= 5; ++d) CHECK(full_system(0, d).max_degree() == 6);
  CHECK(full_system(2, 2).max_degree() == 6);
  CHECK(full_system(2, 3).max_degree() == 6);
  for (std::size_t d = 4; d <= 6; ++d) {
    CHECK(full_system(2, d).max_degree() == d + 2);
  }
  CHECK(full_system(3, 3).max_degree() == 8);
  CHECK(full_system(3, 5).max_degree() == 14);
}

TEST_CASE("groups follow the letter permutations") {
  for (unsigned p : {0u, 2u, 3u}) {
    const auto s = full_system(p, 3);
    for (const auto& [m, gs] : s.groups) {
      auto sorted = m;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      const auto base = s.groups.find(sorted);
      REQUIRE(base != s.groups.end());
      CHECK(gs.size() == base->second.size());
      for (const auto& g : gs) {
        std::vector<unsigned> c(g.mdeg.counts());
        c.resize(m.size(), 0);
        CHECK(c == m);
      }
    }
  }
}

TEST_CASE("matrix evaluation") {
  const FieldSpec q(0);
  CHECK(eval_trace(TraceGenerator::sigma(1, 1), {Matrix3::identity(q)}) ==
        Scalar(q, 3));
  const Matrix3 d3(q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(eval_trace(TraceGenerator::sigma(3, 1), {d3}) == Scalar(q, 6));
  CHECK(eval_trace(TraceGenerator::sigma(2, 1), {d3}) == Scalar(q, 11));
  CHECK(eval_trace(TraceGenerator::trace(Word{1, 1}), {d3}) == Scalar(q, 14));
  CHECK_THROWS_AS(Matrix3(q, {{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_trace(TraceGenerator::trace(Word{1, 2}), {d3}),
                  std::invalid_argument);
  CHECK(nonvanishing(TraceGenerator::trace(Word{1, 1, 2, 2, 1, 2}), 2,
                     FieldSpec(5), 11));
  for (const auto& [m, gs] : full_system(0, 3).groups) {
    for (const auto& g : gs) CHECK(nonvanishing(g, 3, FieldSpec(5), 1));
  }
}

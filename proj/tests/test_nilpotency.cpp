#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcube/linalg.hpp"
#include "nilcube/nilpotency.hpp"
#include "oracle.hpp"

using namespace nilcube;

TEST_CASE("closed form") {
  CHECK(C_formula(3, 4) == 13);
  CHECK(C_formula(2, 5) == 8);
  CHECK(C_formula(7, 9) == 6);
  CHECK(C_formula(2, 2) == 6);
  CHECK(C_formula(0, 3) == 6);
  CHECK_THROWS_AS((void)C_formula(2, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)C_formula(4, 3), std::invalid_argument);
}

TEST_CASE("one letter by brute force") {
  // highest k with a nonzero component x^k, from the dense oracle
  for (long p : {2L, 3L, 5L}) {
    std::size_t top = 0;
    for (int k = 1; k <= 5; ++k) {
      const auto ws = oracle::words({k});
      const auto red = oracle::reduce_mod_p(oracle::S_rows({k}), ws, p);
      if (ws.size() > red.rank) top = static_cast<std::size_t>(k);
    }
    const auto rep = C_compute(static_cast<unsigned>(p), 1);
    CHECK(rep.C == top + 1);
    CHECK(rep.C == 3);
    CHECK(rep.witness == Word{1, 1});
  }
  CHECK(C_compute(0, 1).C == 3);
}

TEST_CASE("two letters") {
  const auto r5 = C_compute(5, 2);
  CHECK(r5.C == 6);
  CHECK(r5.witness == Word{1, 1, 2, 2, 1});
  CHECK(r5.method == NilpotencyMethod::Gauss);
  const auto r3 = C_compute(3, 2);
  CHECK(r3.C == 7);
  CHECK(r3.witness == Word{1, 1, 2, 2, 1, 2});
  CHECK(r3.witness_mdeg == Multidegree{3, 3});
  CHECK(r3.witness_dim == 1);
}

TEST_CASE("computed degree matches the closed form by elimination only") {
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    for (std::size_t d : {2u, 3u}) {
      const auto rep = C_compute(p, d);
      INFO("p=" << p << " d=" << d);
      CHECK(rep.C == C_formula(p, d));
      CHECK(rep.method == NilpotencyMethod::Gauss);
      CHECK(rep.witness.size() + 1 == rep.C);
      // the witness really is nonzero
      const auto es = echelonize_S(mdeg(rep.witness), FieldSpec(p));
      CHECK_FALSE(es.membership(Element(FieldSpec(p), rep.witness)));
    }
  }
}

TEST_CASE("the characteristic 2 witness x1^2 x2 ... xd x1") {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<Letter> w{1, 1};
    for (std::size_t i = 2; i <= d; ++i) w.push_back(static_cast<Letter>(i));
    w.push_back(1);
    const Word word(w);
    const auto es = echelonize_S(mdeg(word), FieldSpec(2));
    CHECK_FALSE(es.membership(Element(FieldSpec(2), word)));
  }
  const auto rep = C_compute(2, 4);
  CHECK(rep.C == 7);
  CHECK(rep.witness == Word{1, 1, 2, 3, 4, 1});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcube/certificates.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/tables.hpp"
#include "oracle.hpp"

using namespace nilcube;

TEST_CASE("functional values on words") {
  const FieldSpec f2(2), f3(3);
  CHECK(apply_functional(Functional::phi_adj(f2, 1, 2),
                         Element(f2, Word{3, 1, 2, 4}))[0]
            .is_one());
  CHECK(apply_functional(Functional::phi_adj(f2, 2, 1),
                         Element(f2, Word{3, 1, 2, 4}))[0]
            .is_zero());
  CHECK(apply_functional(Functional::phi_even(f3), Element(f3, Word{2, 3, 1}))[0]
            .is_one());
  CHECK(apply_functional(Functional::phi_even(f3), Element(f3, Word{2, 1, 3}))[0]
            .is_zero());
  const auto psi = apply_functional(Functional::psi_count(f2),
                                    Element(f2, Word{1, 2, 1, 2, 3}));
  REQUIRE(psi.size() == 2);
  CHECK(psi[0] == Scalar(f2, 2));
  CHECK(psi[1] == Scalar(f2, 1));
}

TEST_CASE("functional preconditions") {
  CHECK_THROWS_AS((void)Functional::phi_adj(FieldSpec(3), 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Functional::phi_even(FieldSpec(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Functional::phi_sum(FieldSpec(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Functional::phi_adj(FieldSpec(2), 1, 1),
                  std::invalid_argument);
  const FieldSpec f2(2);
  CHECK_THROWS_AS((void)apply_functional(Functional::phi_sum(f2),
                                         Element(f2, Word{1, 1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)apply_functional(Functional::psi_count(f2),
                                         Element(f2, Word{1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("functionals annihilate the identities") {
  for (std::size_t d = 3; d <= 6; ++d) {
    const auto m = Multidegree::multilinear(d);
    {
      const FieldSpec f(2);
      std::vector<Functional> fs{Functional::phi_sum(f)};
      for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t j = 1; j <= d; ++j) {
          if (i != j) {
            fs.push_back(Functional::phi_adj(f, static_cast<Letter>(i),
                                             static_cast<Letter>(j)));
          }
        }
      }
      for (const auto& g : generate_S(m, f)) {
        for (const auto& fn : fs) CHECK(apply_functional(fn, g)[0].is_zero());
      }
    }
    {
      const FieldSpec f(3);
      for (const auto& g : generate_S(m, f)) {
        CHECK(apply_functional(Functional::phi_sum(f), g)[0].is_zero());
        CHECK(apply_functional(Functional::phi_even(f), g)[0].is_zero());
      }
    }
  }
  const FieldSpec f2(2);
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<unsigned> c{2, 2};
    c.resize(d, 1);
    for (const auto& g : generate_S(Multidegree(c), f2)) {
      for (const auto& v : apply_functional(Functional::psi_count(f2), g)) {
        CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("reducers") {
  const FieldSpec f(3);
  const Element start(f, Word{1, 1, 2, 2, 1, 2});
  const Element once = apply_reducer(Reducer::pi_symmetrize(2), start);
  const Element twice = apply_reducer(Reducer::pi_symmetrize(1), once);
  CHECK(twice == Element(f, {{Word{1, 2}, 1}, {Word{2, 1}, -1}}));

  const Element no_k(f, Word{1, 3, 2});
  CHECK(apply_reducer(Reducer::phi_delete(4), Element(f, Word{1, 4, 3, 2})) ==
        no_k);
  CHECK(apply_reducer(Reducer::phi_delete(4), Element(f, Word{1, 4, 3, 2}),
                      true) == Element(f, Word{1, 3, 2}));
  CHECK(apply_reducer(Reducer::phi_delete(2), Element(f, Word{1, 2, 3}), true) ==
        Element(f, Word{1, 2}));

  const Element pk = apply_reducer(Reducer::pi_symmetrize(1),
                                   Element(f, Word{1, 2, 1, 3, 1}));
  CHECK(pk == Element(f, {{Word{1, 2, 3}, 1}, {Word{2, 1, 3}, 1},
                          {Word{2, 3, 1}, 1}}));

  CHECK_THROWS_AS((void)apply_reducer(Reducer::phi_delete(1),
                                      Element(f, Word{1, 1, 1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)apply_reducer(Reducer::pi_symmetrize(1),
                                      Element(f, Word{1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)apply_reducer(Reducer::phi_delete(1),
                                      Element(FieldSpec(2), Word{1, 2})),
                  std::invalid_argument);
}

TEST_CASE("reducers map identities to identities") {
  const FieldSpec f(3);
  for (const Multidegree m :
       {Multidegree{2, 1, 1}, Multidegree{1, 1, 1, 1}, Multidegree{3, 1, 1},
        Multidegree{2, 2, 1}, Multidegree{3, 2}, Multidegree{1, 1, 1, 1, 1},
        Multidegree{3, 3}, Multidegree{3, 1, 1, 1}}) {
    const auto s = generate_S(m, f);
    for (std::size_t k = 1; k <= m.size(); ++k) {
      const unsigned dk = m[k - 1];
      std::vector<unsigned> c(m.counts());
      Reducer r = dk == 3 ? Reducer::pi_symmetrize(static_cast<Letter>(k))
                          : Reducer::phi_delete(static_cast<Letter>(k));
      c[k - 1] = dk == 3 ? 1 : 0;
      const Multidegree target(c);
      if (target.norm() == 0) continue;
      const auto es = echelonize_S(target, f);
      for (const auto& g : s) {
        const Element img = apply_reducer(r, g);
        if (img.is_zero()) continue;
        INFO(r.to_string() << " on " << g.to_string());
        CHECK(es.membership(img));
      }
    }
  }
}

TEST_CASE("independence certificates") {
  for (std::size_t d = 4; d <= 7; ++d) {
    const auto r2 = certify_independence(B1d(2, d));
    CHECK(r2.independent);
    CHECK(r2.method == CertifyMethod::PhiAdj);
    const auto r3 = certify_independence(B1d(3, d));
    CHECK(r3.independent);
    CHECK(r3.method == (d % 2 == 0 || d < 5 ? CertifyMethod::PhiK
                                            : CertifyMethod::PrunedRewrite));
  }
  const auto all = enumerate_words(Multidegree::multilinear(6));
  CHECK_FALSE(certify_independence(2, all).independent);
  CHECK_FALSE(certify_independence(3, all).independent);
  // φ_k alone falls one short at odd d
  const auto odd = certify_independence(B1d(3, 5), CertifyMethod::PhiK);
  CHECK_FALSE(odd.independent);
  CHECK(odd.rank + 1 == odd.candidate_size);
  CHECK(certify_independence(B1d(3, 6), CertifyMethod::PrunedRewrite).independent);
  CHECK_THROWS_AS((void)certify_independence(5, B1d(2, 4).words),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)certify_independence(3, std::vector<Word>{Word{1, 1, 2}}),
      std::invalid_argument);
}

TEST_CASE("certificates agree with elimination") {
  for (unsigned p : {2u, 3u}) {
    for (std::size_t d = 4; d <= 6; ++d) {
      const auto m = Multidegree::multilinear(d);
      const auto es = echelonize_S(m, FieldSpec(p));
      const auto basis = es.minimal_basis();
      CHECK(certify_independence(p, basis).independent);
      // dropping the basis property: swap in a leading word
      auto bad = basis;
      bad.back() = es.leading_words().front();
      const bool cert = certify_independence(p, bad).independent;
      // a certificate is sound: it never claims more than elimination shows
      if (cert) {
        std::vector<detail::Row<std::uint32_t>> rows;
        for (const auto& w : bad) {
          const auto nf = es.normal_form(Element(FieldSpec(p), w));
          detail::Row<std::uint32_t> r;
          for (const auto& [u, c] : nf.terms()) {
            r.emplace_back(static_cast<std::uint32_t>(es.space().index_of(u)),
                           c.residue());
          }
          std::reverse(r.begin(), r.end());
          rows.push_back(r);
        }
        CHECK(rank_mod_p(p, es.space().size(), rows) == bad.size());
      }
    }
  }
}

TEST_CASE("certify with an explicit functional list") {
  const FieldSpec f(2);
  std::vector<Functional> fs{Functional::phi_sum(f)};
  for (Letter i = 1; i <= 6; ++i) {
    for (Letter j = 1; j <= 6; ++j) {
      if (i != j) fs.push_back(Functional::phi_adj(f, i, j));
    }
  }
  CHECK(certify_with_functionals(B1d(2, 6).words, fs));
  CHECK_FALSE(certify_with_functionals(
      enumerate_words(Multidegree::multilinear(6)), fs));
}

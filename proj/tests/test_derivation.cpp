#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "unitri/error.hpp"
#include "unitri/sampling.hpp"

using namespace unitri;
using namespace unitri::testing;

TEST_SUITE("derivations") {
  TEST_CASE("constructor enforces triangularity") {
    CHECK_THROWS_AS(UniDerivation({P("x1", 2), P("0", 2)}), Error);
    CHECK_THROWS_AS(UniDerivation({P("0", 2), P("x2", 2)}), Error);
    CHECK_NOTHROW(UniDerivation({P("3", 2), P("x1^4", 2)}));
    try {
      (void)UniDerivation({P("0", 3), P("0", 3), P("x3", 3)});
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_derivation);
    }
  }

  TEST_CASE("bracket") {
    CHECK(bracket(D("d1", 2), D("x1 d2", 2)) == D("d2", 2));
    CHECK(bracket(D("x1 d2", 2), D("x1 d2", 2)).is_zero());
    // [x1 d2, d1] = -d2, checked against the coordinate-function oracle.
    const UniDerivation expected = oracle::bracket(D("x1 d2", 2), D("d1", 2));
    CHECK(expected == D("-d2", 2));
    CHECK(bracket(D("x1 d2", 2), D("d1", 2)) == expected);
    CHECK_THROWS_AS((void)bracket(D("d1", 2), D("d1", 3)), Error);
  }

  TEST_CASE("apply") {
    CHECK(apply(D("d2", 2), P("x2^2", 2)) == P("2 x2", 2));
    CHECK(apply(D("x1 d2", 2), P("x2", 2)) == P("x1", 2));
    CHECK(apply(D("d1 + x1 d2", 2), P("1", 2)).is_zero());
  }

  TEST_CASE("ideal_index") {
    CHECK(ideal_index(D("d2", 3)).value == 2);
    CHECK(ideal_index(UniDerivation(3)).value == 4);
    CHECK(ideal_index(D("d1 + x1 d2", 3)).value == 1);
  }

  TEST_CASE("ad_power") {
    const UniDerivation twice = oracle::bracket(D("d1", 2), oracle::bracket(D("d1", 2), D("x1^2 d2", 2)));
    CHECK(twice == D("2 d2", 2));
    CHECK(ad_power(D("d1", 2), D("x1^2 d2", 2), 2) == twice);
    CHECK(ad_power(D("x1 d2", 2), D("d1 + d2", 2), 0) == D("d1 + d2", 2));
    CHECK(ad_power(D("d1", 2), D("d2", 2), 1).is_zero());
  }

  TEST_CASE("exp_ad") {
    // ad(x1 d2)(d1) = -d2 and ad^2 = 0.
    CHECK(oracle::bracket(D("x1 d2", 2), D("d1", 2)) == D("-d2", 2));
    CHECK(oracle::bracket(D("x1 d2", 2), D("-d2", 2)).is_zero());
    CHECK(exp_ad(D("x1 d2", 2), D("d1", 2)) == D("d1 - d2", 2));
    CHECK(exp_ad(D("d1", 3), D("d2 + x2 d3", 3)) == D("d2 + x2 d3", 3));
    CHECK(exp_ad(UniDerivation(2), D("d1 + x1 d2", 2)) == D("d1 + x1 d2", 2));
    // e^{ad(d1)}(x1^2 d2) = x1^2 d2 + 2 x1 d2 + d2.
    CHECK(exp_ad(D("d1", 2), D("x1^2 d2", 2)) == D("x1^2 d2 + 2 x1 d2 + d2", 2));
  }

  TEST_CASE("exp_ad reports a cap overflow") {
    try {
      (void)exp_ad(D("d1", 2), D("x1^3 d2", 2), 3);
      FAIL("expected cap overflow");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::nilpotency_cap_exceeded);
    }
    CHECK_NOTHROW((void)exp_ad(D("d1", 2), D("x1^3 d2", 2), 4));
    CHECK_THROWS_AS((void)exp_ad(D("d1", 2), D("d2", 2), 0), Error);
  }

  TEST_CASE("Lie algebra identities on random samples") {
    Sampler rng(99);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 2 + rng.below(3);
      const UniDerivation a = rng.derivation(n, 3), b = rng.derivation(n, 3), c = rng.derivation(n, 3);
      CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
      CHECK((bracket(a, b) + bracket(b, a)).is_zero());
      CHECK(bracket(a, b) == oracle::bracket(a, b));
      const Scalar s = rng.small_scalar();
      CHECK(bracket(a * s + b, c) == bracket(a, c) * s + bracket(b, c));
      const Polynomial p = rng.polynomial(n, n, 3, 4);
      CHECK(apply(bracket(a, b), p) == apply(a, apply(b, p)) - apply(b, apply(a, p)));
      CHECK(apply(a, p) == oracle::act(a, p));
    }
  }

  TEST_CASE("bracket containments along the ideal chain") {
    Sampler rng(5);
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
          for (int trial = 0; trial < 20; ++trial) {
            const UniDerivation d = rng.derivation(n, 3, i), e = rng.derivation(n, 3, j);
            const std::size_t k = ideal_index(bracket(d, e)).value;
            CHECK(k >= (i == j ? i + 1 : j));
          }
  }

  TEST_CASE("exp_ad(-g) undoes exp_ad(g)") {
    Sampler rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const UniDerivation g = rng.derivation(3, 2, 2);
      const UniDerivation d = rng.derivation(3, 2);
      CHECK(exp_ad(-g, exp_ad(g, d)) == d);
    }
  }
}

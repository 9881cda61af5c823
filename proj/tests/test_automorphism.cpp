#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "unitri/error.hpp"
#include "unitri/sampling.hpp"

using namespace unitri;
using namespace unitri::testing;

TEST_SUITE("automorphisms") {
  TEST_CASE("construction validates the triangular shape") {
    CHECK_THROWS_AS(TriangularAutomorphism({Q(1), Q(0)}, {P("0", 2), P("0", 2)}), Error);
    CHECK_THROWS_AS(TriangularAutomorphism({Q(1), Q(1)}, {P("x1", 2), P("0", 2)}), Error);
    CHECK_THROWS_AS(TriangularAutomorphism({Q(1), Q(1)}, {P("0", 2), P("x1 + 1", 2)}), Error);
    CHECK_THROWS_AS(TriangularAutomorphism({Q(1), Q(1)}, {P("0", 2), P("x2^2", 2)}), Error);
    CHECK_THROWS_AS((void)A("x2 -> x2 + 1", 2), Error);
    CHECK_THROWS_AS((void)A("x1 -> x1 + x2", 2), Error);
    CHECK_THROWS_AS((void)A("x2 -> x1", 2), Error);
  }

  TEST_CASE("automorphism text format") {
    const TriangularAutomorphism s = A("x2 -> x2 + x1^2", 2);
    CHECK(s.scale(2) == 1);
    CHECK(s.tail(2) == P("x1^2", 2));
    CHECK(to_string(s) == "x2 -> x2 + x1^2\n");
    CHECK(to_string(A("x1 -> 1/2 x1\nx3 -> -x3 - x1 x2", 3)) == "x1 -> 1/2 x1\nx3 -> -x3 - x1 x2\n");
    CHECK(to_string(TriangularAutomorphism::identity(3)) == "# identity\n");
    CHECK(parse_automorphism("n = 4\nx2 -> x2 + x1\n").ambient() == 4);
    CHECK(parse_automorphism("x3 -> x3 + x1\n").ambient() == 3);
    CHECK_THROWS_AS((void)parse_automorphism("x2 -> x2\nx2 -> x2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_automorphism("x2 -> x2 + x3\n", 2), Error);
  }

  TEST_CASE("apply_to_poly") {
    CHECK(apply_to_poly(A("x2 -> x2 + x1^2", 2), P("x2", 2)) == P("x2 + x1^2", 2));
    const Polynomial p = P("x1^2 x2 - 3 x2 + 1", 2);
    CHECK(apply_to_poly(TriangularAutomorphism::identity(2), p) == p);
    CHECK(apply_to_poly(A("x1 -> 2 x1", 2), P("x1^2", 2)) == P("4 x1^2", 2));
  }

  TEST_CASE("compose") {
    const TriangularAutomorphism s = A("x1 -> -x1\nx2 -> 3 x2 + x1^2\nx3 -> x3 + x1 x2", 3);
    CHECK(compose(s, TriangularAutomorphism::identity(3)) == s);
    CHECK(compose(A("x2 -> x2 + x1", 2), A("x2 -> x2 + x1", 2)) == A("x2 -> x2 + 2 x1", 2));
    const TriangularAutomorphism id = compose(s, invert(s));
    for (std::size_t j = 1; j <= 3; ++j) CHECK(apply_to_poly(id, Polynomial::variable(3, j)) == Polynomial::variable(3, j));
  }

  TEST_CASE("invert") {
    const TriangularAutomorphism s = A("x2 -> x2 + x1^2", 2);
    const TriangularAutomorphism inv = invert(s);
    CHECK(inv == A("x2 -> x2 - x1^2", 2));
    CHECK(compose(s, inv).is_identity());
    CHECK(invert(TriangularAutomorphism::identity(3)).is_identity());
    CHECK(invert(A("x1 -> 2 x1", 2)) == A("x1 -> 1/2 x1", 2));
  }

  TEST_CASE("act_on_derivation") {
    const TriangularAutomorphism s = A("x2 -> x2 + x1^2", 2);
    CHECK(oracle::conjugate(s, D("d1", 2)) == D("d1 - 2 x1 d2", 2));
    CHECK(act_on_derivation(s, D("d1", 2)) == D("d1 - 2 x1 d2", 2));
    CHECK(oracle::conjugate(s, D("d2", 2)) == D("d2", 2));
    CHECK(act_on_derivation(s, D("d2", 2)) == D("d2", 2));
    const UniDerivation d = D("d1 + x1^3 d2 - x1 x2 d3", 3);
    CHECK(act_on_derivation(TriangularAutomorphism::identity(3), d) == d);
  }

  TEST_CASE("torus elements rescale partials") {
    const TriangularAutomorphism t({Q(2), Q(-1, 3), Q(5)}, {P("0", 3), P("0", 3), P("0", 3)});
    REQUIRE(t.is_torus());
    for (std::size_t j = 1; j <= 3; ++j)
      CHECK(act_on_derivation(t, UniDerivation::partial(3, j)) == UniDerivation::partial(3, j) * (1 / t.scale(j)));
  }

  TEST_CASE("group action and Lie automorphism properties on random samples") {
    Sampler rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng.below(2);
      const TriangularAutomorphism s = rng.automorphism(n, 2), t = rng.automorphism(n, 2);
      const UniDerivation a = rng.derivation(n, 2), b = rng.derivation(n, 2);
      CHECK(act_on_derivation(s, a) == oracle::conjugate(s, a));
      CHECK(act_on_derivation(s, bracket(a, b)) == bracket(act_on_derivation(s, a), act_on_derivation(s, b)));
      CHECK(act_on_derivation(compose(s, t), a) == act_on_derivation(s, act_on_derivation(t, a)));
      CHECK(compose(s, invert(s)).is_identity());
      CHECK(compose(invert(s), s).is_identity());
      const TriangularAutomorphism r = rng.automorphism(n, 1);
      CHECK(compose(compose(s, t), r) == compose(s, compose(t, r)));
      const Polynomial p = rng.polynomial(n, n, 2, 3);
      CHECK(apply_to_poly(compose(s, t), p) == apply_to_poly(s, apply_to_poly(t, p)));
    }
  }
}

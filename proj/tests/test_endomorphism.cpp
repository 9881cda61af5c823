#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "unitri/endomorphism.hpp"
#include "unitri/error.hpp"
#include "unitri/sampling.hpp"

using namespace unitri;
using namespace unitri::testing;

namespace {

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::parse;
}

}  // namespace

TEST_SUITE("endo_verifier") {
  TEST_CASE("endo_from_automorphism") {
    const auto sigma = A("x2 -> x2 + x1^2", 2);
    const TruncatedLieMap phi = endo_from_automorphism(sigma, 2);
    CHECK(phi.domain().size() == filtration_dimension(2, 2));
    CHECK(phi.image(0) == D("d1 - 2 x1 d2", 2));
    const auto torus = A("x2 -> 2 x2", 2);
    const TruncatedLieMap t = endo_from_automorphism(torus, 1);
    CHECK(t.image(1) == D("1/2 d2", 2));
    for (std::size_t i = 0; i < phi.domain().size(); ++i)
      CHECK(phi.image(i) == oracle::conjugate(sigma, phi.domain()[i].to_derivation(2)));
    CHECK(code_of([&] { (void)endo_from_automorphism(sigma, 0); }) == Errc::precondition);
  }

  TEST_CASE("endo_from_exp_ad") {
    const TruncatedLieMap phi = endo_from_exp_ad(D("x1 d2", 2), 1);
    CHECK(phi.image(0) == D("d1 - d2", 2));
    CHECK(phi.image(1) == D("d2", 2));
    CHECK(phi.image(2) == D("x1 d2", 2));
    CHECK(code_of([] { (void)endo_from_exp_ad(D("x1 d2", 2), 0); }) == Errc::precondition);
  }

  TEST_CASE("check_homomorphism finds the broken bracket") {
    const FiltrationBasis b = enumerate_basis(2, 1);
    const TruncatedLieMap phi(b, {D("d1", 2), D("d2", 2), D("0", 2)});
    const HomomorphismCheck r = check_homomorphism(phi);
    REQUIRE_FALSE(r.passed());
    CHECK(to_string(r.violation->left) == "1:");
    CHECK(to_string(r.violation->right) == "2:1");
    CHECK(r.violation->bracket == D("d2", 2));
    CHECK(r.violation->expected == D("d2", 2));
    CHECK(r.violation->actual.is_zero());
    CHECK(r.checked_pairs == 3);
    CHECK(r.unchecked_pairs == 0);
  }

  TEST_CASE("pair accounting") {
    const HomomorphismCheck r = check_homomorphism(TruncatedLieMap::identity(2, 2));
    CHECK(r.passed());
    // Levels 0,0,1,2: pairs with level sum <= 2 are all but (2:1, 2:2).
    CHECK(r.checked_pairs == 5);
    CHECK(r.unchecked_pairs == 1);
    CHECK(check_homomorphism(TruncatedLieMap::zero(2, 1)).passed());
  }

  TEST_CASE("conjugations and adjoint exponentials are homomorphisms") {
    Sampler rng(7);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 2 + rng.below(2);
      const auto sigma = rng.automorphism(n, 2);
      const std::size_t d = 1 + rng.below(2);
      const TruncatedLieMap phi = endo_from_automorphism(sigma, d);
      CHECK(check_homomorphism(phi).passed());
      for (std::size_t level = 0; level <= d; ++level) CHECK(check_injectivity(phi, level));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const UniDerivation g = rng.derivation(3, 2, 2, 2);
      CHECK(check_homomorphism(endo_from_exp_ad(g, 2)).passed());
    }
  }

  TEST_CASE("functoriality of the conjugation action") {
    Sampler rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = rng.automorphism(3, 2), t = rng.automorphism(3, 2);
      const TruncatedLieMap st = endo_from_automorphism(compose(s, t), 2);
      const TruncatedLieMap ps = endo_from_automorphism(s, 2);
      for (std::size_t i = 0; i < st.domain().size(); ++i) {
        const UniDerivation b = st.domain()[i].to_derivation(3);
        CHECK(st.image(i) == act_on_derivation(s, act_on_derivation(t, b)));
      }
      const TruncatedLieMap back = endo_from_automorphism(invert(s), 2);
      for (std::size_t i = 0; i < ps.domain().size(); ++i)
        CHECK(act_on_derivation(invert(s), ps.image(i)) == ps.domain()[i].to_derivation(3));
      CHECK(back.domain().size() == ps.domain().size());
    }
  }

  TEST_CASE("check_injectivity") {
    CHECK_FALSE(check_injectivity(TruncatedLieMap::zero(2, 1), 1));
    CHECK(check_injectivity(TruncatedLieMap::identity(3, 2), 2));
    const FiltrationBasis b = enumerate_basis(2, 1);
    const TruncatedLieMap collapse(b, {D("d1", 2), D("d2", 2), D("d2", 2)});
    CHECK(check_injectivity(collapse, 0));
    CHECK_FALSE(check_injectivity(collapse, 1));
    CHECK(code_of([&] { (void)check_injectivity(collapse, 2); }) == Errc::precondition);
  }

  TEST_CASE("extract_generators") {
    const auto gens = extract_generators(endo_from_automorphism(A("x2 -> x2 + x1^2", 2), 2));
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].lambda == 1);
    CHECK(gens[0].tail == D("-2 x1 d2", 2));
    CHECK(gens[1].lambda == 1);
    CHECK(gens[1].tail.is_zero());

    const auto torus = extract_generators(endo_from_automorphism(A("x1 -> 1/2 x1\nx2 -> 3 x2", 2), 1));
    CHECK(torus[0].lambda == 2);
    CHECK(torus[1].lambda == Q(1, 3));

    const FiltrationBasis b = enumerate_basis(2, 1);
    CHECK(code_of([&] { (void)extract_generators(TruncatedLieMap(b, {D("d1", 2), D("d1", 2), D("x1 d2", 2)})); }) ==
          Errc::derived_series_inclusion);
    CHECK(code_of([&] { (void)extract_generators(TruncatedLieMap(b, {D("d1", 2), D("x1 d2", 2), D("x1 d2", 2)})); }) ==
          Errc::lambda_not_scalar);
    CHECK(code_of([&] { (void)extract_generators(TruncatedLieMap(b, {D("d2", 2), D("d2", 2), D("x1 d2", 2)})); }) ==
          Errc::zero_leading_scalar);
    try {
      (void)extract_generators(TruncatedLieMap(b, {D("d1", 2), D("0", 2), D("x1 d2", 2)}));
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("zero leading scalar: not injective") == 0);
    }
  }

  TEST_CASE("check_pairwise_commuting") {
    CHECK_FALSE(check_pairwise_commuting({D("d1 - 2 x1 d2", 2), D("d2", 2)}));
    const auto bad = check_pairwise_commuting({D("d1", 2), D("x1 d2", 2)});
    REQUIRE(bad);
    CHECK(*bad == std::pair<std::size_t, std::size_t>{1, 2});
    const auto later = check_pairwise_commuting({D("d1", 3), D("d2", 3), D("x1 d3", 3)});
    REQUIRE(later);
    CHECK(*later == std::pair<std::size_t, std::size_t>{1, 3});
  }

  TEST_CASE("generator images under phi commute") {
    Sampler rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      const TruncatedLieMap phi = endo_from_automorphism(rng.automorphism(3, 3), 1);
      const auto targets = generator_images(phi);
      for (std::size_t i = 1; i <= 3; ++i) CHECK(targets[i - 1] == phi(UniDerivation::partial(3, i)));
      CHECK_FALSE(check_pairwise_commuting(targets));
    }
  }
}

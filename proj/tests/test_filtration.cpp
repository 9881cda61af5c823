#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "unitri/error.hpp"
#include "unitri/sampling.hpp"

using namespace unitri;
using namespace unitri::testing;

namespace {

std::vector<UniDerivation> basis_elements(const FiltrationBasis& b, std::size_t min_index = 1) {
  std::vector<UniDerivation> out;
  for (const auto& e : b.elements())
    if (e.target >= min_index) out.push_back(e.to_derivation(b.ambient()));
  return out;
}

}  // namespace

TEST_SUITE("filtration") {
  TEST_CASE("enumerate_basis") {
    const FiltrationBasis b = enumerate_basis(2, 1);
    REQUIRE(b.size() == 3);
    CHECK(to_string(b[0]) == "1:");
    CHECK(to_string(b[1]) == "2:0");
    CHECK(to_string(b[2]) == "2:1");
    CHECK(b[2].to_derivation(2) == D("x1 d2", 2));
    CHECK(enumerate_basis(2, 0).size() == 2);
    CHECK(enumerate_basis(3, 4).size() == 31);
    CHECK_THROWS_AS((void)enumerate_basis(1, 2), Error);
    // Graded-lex within each slot: 3:0,0 then 3:0,1 3:1,0 then degree 2.
    const FiltrationBasis b3 = enumerate_basis(3, 1);
    std::vector<std::string> names;
    for (const auto& e : b3.elements()) names.push_back(to_string(e));
    CHECK(names == std::vector<std::string>{"1:", "2:0", "2:1", "3:0,0", "3:0,1", "3:1,0", "3:1,1"});
  }

  TEST_CASE("dimension matches the definition of N_d") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t d = 0; d <= 4; ++d) {
        CHECK(filtration_dimension(n, d) == oracle::brute_force_dimension(n, d));
        CHECK(enumerate_basis(n, d).size() == filtration_dimension(n, d));
      }
  }

  TEST_CASE("basis index text form") {
    const BasisIndex b = parse_basis_index("3:1,2");
    CHECK(b.target == 3);
    CHECK(b.alpha == std::vector<Exponent>{1, 2});
    CHECK(to_string(parse_basis_index("1:")) == "1:");
    CHECK_THROWS_AS((void)parse_basis_index("3:1"), Error);
    CHECK_THROWS_AS((void)parse_basis_index("2:"), Error);
    CHECK_THROWS_AS((void)parse_basis_index(":1"), Error);
    CHECK_THROWS_AS((void)parse_basis_index("3:1,"), Error);
  }

  TEST_CASE("coords") {
    const FiltrationBasis b = enumerate_basis(2, 1);
    CHECK(coords(D("d1", 2), b) == std::vector<Scalar>{1, 0, 0});
    CHECK(coords(D("1/2 x1 d2", 2), b) == std::vector<Scalar>{0, 0, Q(1, 2)});
    try {
      (void)coords(D("x1^2 d2", 2), b);
      FAIL("expected outside_filtration_level");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::outside_filtration_level);
      CHECK(std::string(e.what()).find("outside filtration level") != std::string::npos);
    }
    Sampler rng(3);
    const FiltrationBasis b3 = enumerate_basis(3, 3);
    for (int trial = 0; trial < 50; ++trial) {
      UniDerivation d = rng.derivation(3, 3);
      if (membership_level(d) > 3) continue;
      CHECK(combine(b3, coords(d, b3)) == d);
    }
  }

  TEST_CASE("membership_level") {
    CHECK(membership_level(D("d1", 3)) == 0);
    CHECK(membership_level(D("x1^2 d2", 3)) == 2);
    CHECK(membership_level(D("x1 x2 d3", 3)) == 1);
  }

  TEST_CASE("membership_level agrees with the ad(d_j) nilpotency definition") {
    Sampler rng(11);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 2 + rng.below(3);
      const UniDerivation u = rng.derivation(n, 4);
      const std::size_t level = membership_level(u);
      auto in_level = [&](std::size_t d) {
        for (std::size_t j = 1; j < n; ++j)
          if (!ad_power(UniDerivation::partial(n, j), u, d + 1).is_zero()) return false;
        return true;
      };
      CHECK(in_level(level));
      if (level > 0) CHECK_FALSE(in_level(level - 1));
    }
  }

  TEST_CASE("brackets respect the filtration") {
    Sampler rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + rng.below(3);
      const UniDerivation d = rng.derivation(n, 3), e = rng.derivation(n, 3);
      CHECK(membership_level(bracket(d, e)) <= membership_level(d) + membership_level(e));
    }
  }

  TEST_CASE("RowSpace produces the canonical reduced basis") {
    const std::vector<UniDerivation> ds = {D("2 d1 + 4 d2", 2), D("d1 - x1 d2", 2), D("3 d1 + 4 d2 - x1 d2", 2)};
    const auto basis = span_basis(2, ds);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == D("d1 - x1 d2", 2));
    CHECK(basis[1] == D("d2 + 1/2 x1 d2", 2));
    std::vector<UniDerivation> reversed(ds.rbegin(), ds.rend());
    CHECK(span_basis(2, reversed) == basis);
    Sampler rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<UniDerivation> set;
      const std::size_t k = 1 + rng.below(6);
      for (std::size_t i = 0; i < k; ++i) set.push_back(rng.derivation(3, 2, 1, 2));
      if (rng.below(2)) set.push_back(set.front() * Scalar(3) - set.back());
      CHECK(span_rank(set) == oracle::dense_rank(set, 3));
    }
  }

  TEST_CASE("derived_span") {
    const SpannedSubalgebra s1{2, {D("d1", 2), D("x1 d2", 2)}};
    CHECK(derived_span(s1, 1) == std::vector<UniDerivation>{D("d2", 2)});
    CHECK(derived_span(SpannedSubalgebra{2, {D("d1", 2), D("d2", 2)}}, 0).empty());
    const SpannedSubalgebra n1{2, basis_elements(enumerate_basis(2, 1))};
    CHECK(derived_span(n1, 1) == std::vector<UniDerivation>{D("d2", 2)});
    CHECK_THROWS_AS((void)derived_span(s1, 0), Error);
  }

  TEST_CASE("derived_length") {
    CHECK(derived_length(SpannedSubalgebra{2, {D("d1", 2), D("d2", 2)}}, 0) == 1);
    const SpannedSubalgebra n2{2, basis_elements(enumerate_basis(2, 2))};
    CHECK(derived_span(n2, 2) == std::vector<UniDerivation>{D("d2", 2), D("x1 d2", 2)});
    CHECK(derived_length(n2, 2) == 2);
    CHECK(derived_length(SpannedSubalgebra{2, {}}, 0) == 0);
    CHECK(derived_length_upper_bound(n2) == 2);
  }

  TEST_CASE("subalgebras K d_i + u_{n,i+1} and their copies of u_{n-i+1} have derived length n-i+1") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t d = 2;
        const FiltrationBasis b = enumerate_basis(n, d);
        // G = K d_i + u_{n,i+1}
        SpannedSubalgebra g{n, {UniDerivation::partial(n, i)}};
        for (auto& e : basis_elements(b, i + 1)) g.spanners.push_back(e);
        // H = K d_i + K[x_i] d_{i+1} + ... + K[x_i..x_{n-1}] d_n
        SpannedSubalgebra h{n, {UniDerivation::partial(n, i)}};
        for (const auto& e : b.elements()) {
          if (e.target <= i) continue;
          bool ok = true;
          for (std::size_t k = 1; k < i; ++k) ok = ok && e.alpha[k - 1] == 0;
          if (ok) h.spanners.push_back(e.to_derivation(n));
        }
        CHECK(derived_length(g, d) == n - i + 1);
        CHECK(derived_length_upper_bound(g) == n - i + 1);
        CHECK(derived_length(h, d) == n - i + 1);
      }
  }

  TEST_CASE("derived spans of truncated ideals reach the next ideal") {
    for (std::size_t n = 2; n <= 3; ++n)
      for (std::size_t d = 0; d <= 2; ++d)
        for (std::size_t i = 1; i <= n; ++i) {
          const SpannedSubalgebra s{n, basis_elements(enumerate_basis(n, d + 1), i)};
          const auto span = derived_span(s, d + 1);
          DerivationSpace space;
          for (const auto& u : span) {
            CHECK(ideal_index(u).value >= i + 1);
            space.insert(to_row(u));
          }
          for (const auto& target : basis_elements(enumerate_basis(n, d), i + 1))
            CHECK(space.contains(to_row(target)));
        }
  }

  TEST_CASE("rank_of") {
    CHECK(rank_of(TruncatedLieMap::identity(2, 1), 1) == 3);
    CHECK(rank_of(TruncatedLieMap::zero(2, 1), 1) == 0);
    CHECK(rank_of(TruncatedLieMap::identity(3, 2), 1) == filtration_dimension(3, 1));
    // Image of d1 under x2 -> x2 + x1^2 is d1 - 2 x1 d2 which stays in N_1 but x1 d2 -> x1 d2 etc.
    const FiltrationBasis b = enumerate_basis(2, 1);
    TruncatedLieMap escaping(b, {D("d1", 2), D("d2", 2), D("x1^2 d2", 2)});
    try {
      (void)rank_of(escaping, 1);
      FAIL("expected filtration_not_preserved");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::filtration_not_preserved);
      CHECK(std::string(e.what()).find("2:1") != std::string::npos);
    }
    CHECK(rank_of(escaping, 0) == 2);
    CHECK_THROWS_AS((void)rank_of(escaping, 2), Error);
  }

  TEST_CASE("restriction_matrix and its text form") {
    const FiltrationBasis b = enumerate_basis(2, 1);
    const TruncatedLieMap m(b, {D("d1 - d2", 2), D("2 d2", 2), D("x1 d2 + 1/2 d2", 2)});
    const auto rows = restriction_matrix(m, 1);
    CHECK(format_matrix(rows) == "1 -1 0\n0 2 0\n0 1/2 1\n");
    CHECK(oracle::dense_rank(rows) == rank_of(m, 1));
  }

  TEST_CASE("truncated map linear extension") {
    const FiltrationBasis b = enumerate_basis(2, 1);
    const TruncatedLieMap m(b, {D("d1 - d2", 2), D("2 d2", 2), D("x1 d2", 2)});
    CHECK(m(D("3 d1 + x1 d2", 2)) == D("3 d1 - 3 d2 + x1 d2", 2));
    CHECK_THROWS_AS((void)m(D("x1^2 d2", 2)), Error);
    CHECK_THROWS_AS(TruncatedLieMap(b, {D("d1", 2)}), Error);
  }
}

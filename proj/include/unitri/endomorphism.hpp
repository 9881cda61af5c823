#ifndef UNITRI_ENDOMORPHISM_HPP
#define UNITRI_ENDOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "unitri/automorphism.hpp"
#include "unitri/filtration.hpp"

namespace unitri {

/// φ(∂_i) = λ_i ∂_i + u_i with λ_i a nonzero constant and u_i ∈ u_{n,i+1}.
struct GeneratorDecomposition {
  std::size_t index = 1;
  Scalar lambda;
  UniDerivation tail;
};

/// φ([u, v]) ≠ [φ(u), φ(v)] for the basis elements u = left, v = right.
struct HomomorphismViolation {
  BasisIndex left;
  BasisIndex right;
  UniDerivation bracket;   // [u, v] in the domain
  UniDerivation expected;  // φ([u, v])
  UniDerivation actual;    // [φ(u), φ(v)]
};

struct HomomorphismCheck {
  /// Unordered basis pairs with level(u) + level(v) ≤ d, i.e. whose bracket stays in the domain.
  std::size_t checked_pairs = 0;
  /// Pairs the truncation cannot see.
  std::size_t unchecked_pairs = 0;
  std::optional<HomomorphismViolation> violation;

  bool passed() const noexcept { return !violation.has_value(); }
};

/// b ↦ σ·b on the basis of N_d (d ≥ 1).
TruncatedLieMap endo_from_automorphism(const TriangularAutomorphism& sigma, std::size_t d);

/// b ↦ e^{ad(g)}(b) on the basis of N_d (d ≥ 1).
TruncatedLieMap endo_from_exp_ad(const UniDerivation& g, std::size_t d, std::size_t cap = kDefaultNilpotencyCap);

/// Checks φ([u,v]) = [φ(u), φ(v)] over basis pairs in canonical order and
/// returns the first failing pair.
HomomorphismCheck check_homomorphism(const TruncatedLieMap& phi);

/// Whether φ restricted to N_level has trivial kernel. Images may lie outside N_level.
bool check_injectivity(const TruncatedLieMap& phi, std::size_t level);

/// Reads ∂'_i = φ(∂_i) and splits it as λ_i ∂_i + u_i.
///
/// Throws Errc::derived_series_inclusion if ∂'_i ∉ u_{n,i},
/// Errc::lambda_not_scalar if the ∂_i-coefficient is not a constant, and
/// Errc::zero_leading_scalar if it is zero.
std::vector<GeneratorDecomposition> extract_generators(const TruncatedLieMap& phi);

/// First pair (i, j), i < j (1-based), with [t_i, t_j] ≠ 0, or nullopt if all commute.
std::optional<std::pair<std::size_t, std::size_t>> check_pairwise_commuting(const std::vector<UniDerivation>& targets);

/// φ(∂_1), ..., φ(∂_n).
std::vector<UniDerivation> generator_images(const TruncatedLieMap& phi);

}  // namespace unitri

#endif  // UNITRI_ENDOMORPHISM_HPP

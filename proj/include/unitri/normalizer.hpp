#ifndef UNITRI_NORMALIZER_HPP
#define UNITRI_NORMALIZER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unitri/endomorphism.hpp"

namespace unitri {

/// The unique σ ∈ T^n ⋉ T_n with σ·∂_i = targets[i-1] for every i.
///
/// σ(x_j) = c_j x_j + a_j is pinned down by ∂'_i(σ(x_j)) = δ_ij. This forces
/// c_j = λ_j⁻¹, and for i < j it is the first-order system
///
///   λ_i ∂_i(a_j) + Σ_{i<k<j} f_k^{(i)} ∂_k(a_j) + c_j f_j^{(i)} = 0,
///
/// where ∂'_i = λ_i ∂_i + Σ_{k>i} f_k^{(i)} ∂_k. Each a_j is solved by descending
/// i = j-1, ..., 1: the residual of equation i must lie in K[x_1..x_i] and is
/// integrated in x_i. Antiderivatives carry no x_i-free part, so a_j(0) = 0.
///
/// Throws Errc::integrability_failure for non-commuting targets or a residual
/// that still depends on later variables, Errc::not_realizable when some target
/// is not of the form λ_i ∂_i + u_i with λ_i ∈ K*, u_i ∈ u_{n,i+1}, and
/// Errc::solver_consistency if the final check σ·∂_i = ∂'_i fails.
TriangularAutomorphism construct_sigma(const std::vector<UniDerivation>& targets);

struct Normalization {
  TriangularAutomorphism sigma;
  /// ψ(b) = σ⁻¹·φ(b); fixes every ∂_i.
  TruncatedLieMap psi;
};

Normalization normalize(const TruncatedLieMap& phi);

enum class Verdict { certified, rejected };

/// Pipeline step at which verify_theorem stopped.
enum class Stage { homomorphism, injectivity, generators, normalization, filtration, complete };

const char* stage_name(Stage s) noexcept;

struct LevelRank {
  std::size_t level;
  std::size_t rank;
  std::size_t dimension;
};

struct VerificationReport {
  Verdict verdict = Verdict::rejected;
  Stage stage = Stage::homomorphism;
  std::string reason;
  std::size_t ambient = 0;
  std::size_t level = 0;
  std::size_t budget = 0;
  std::size_t checked_pairs = 0;
  std::size_t unchecked_pairs = 0;
  std::vector<Scalar> lambdas;
  std::optional<TriangularAutomorphism> sigma;
  std::vector<LevelRank> level_ranks;
  std::optional<HomomorphismViolation> violation;

  bool certified() const noexcept { return verdict == Verdict::certified; }
};

/// floor(d / 2): the largest i whose pairs N_i × N_i were all checked.
std::size_t default_budget(std::size_t level) noexcept;

/// Runs the full certification pipeline on φ:
///   1. homomorphism law on all pairs the truncation sees;
///   2. injectivity on N_d;
///   3. generator decomposition φ(∂_i) = λ_i ∂_i + u_i with λ_i ≠ 0;
///   4. construction of σ and normalization ψ = σ⁻¹φ;
///   5. ψ(N_i) ⊆ N_i with full rank for i ≤ budget.
/// Failures become rejected reports. A budget above d throws Errc::precondition.
VerificationReport verify_theorem(const TruncatedLieMap& phi, std::optional<std::size_t> budget = std::nullopt);

}  // namespace unitri

#endif  // UNITRI_NORMALIZER_HPP

#ifndef UNITRI_AUTOMORPHISM_HPP
#define UNITRI_AUTOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitri/derivation.hpp"
#include "unitri/polynomial.hpp"

namespace unitri {

/// Element of T^n ⋉ T_n: the algebra automorphism x_j ↦ c_j x_j + a_j of P_n with
/// c_j ≠ 0, a_1 = 0 and a_j ∈ (x_1, ..., x_{j-1}) ⊂ K[x_1..x_{j-1}].
class TriangularAutomorphism {
 public:
  TriangularAutomorphism() = default;
  TriangularAutomorphism(std::vector<Scalar> scales, std::vector<Polynomial> tails);

  static TriangularAutomorphism identity(std::size_t n);
  /// Splits each image into c_j x_j + a_j; throws Errc::invalid_automorphism if it does not have that shape.
  static TriangularAutomorphism from_images(std::vector<Polynomial> images);

  std::size_t ambient() const noexcept { return scales_.size(); }
  const Scalar& scale(std::size_t j) const { return scales_.at(j - 1); }
  const Polynomial& tail(std::size_t j) const { return tails_.at(j - 1); }
  /// σ(x_j).
  const Polynomial& image(std::size_t j) const { return images_.at(j - 1); }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const std::vector<Scalar>& scales() const noexcept { return scales_; }
  const std::vector<Polynomial>& tails() const noexcept { return tails_; }

  bool is_identity() const;
  bool is_torus() const;

  friend bool operator==(const TriangularAutomorphism& a, const TriangularAutomorphism& b) {
    return a.scales_ == b.scales_ && a.tails_ == b.tails_;
  }

 private:
  std::vector<Scalar> scales_;
  std::vector<Polynomial> tails_;
  std::vector<Polynomial> images_;
};

/// σ(p) = p(σ(x_1), ..., σ(x_n)).
Polynomial apply_to_poly(const TriangularAutomorphism& sigma, const Polynomial& p);

/// (σ∘τ)(x_j) = σ(τ(x_j)).
TriangularAutomorphism compose(const TriangularAutomorphism& sigma, const TriangularAutomorphism& tau);

/// Back-substitution x_j ↦ c_j⁻¹ (x_j − a_j(σ⁻¹(x_1), ..., σ⁻¹(x_{j-1}))).
TriangularAutomorphism invert(const TriangularAutomorphism& sigma);

/// σ·D = σ∘D∘σ⁻¹.
///
/// The coefficients g_j of σ·D are characterised by (σ·D)(σ(x_j)) = σ(D(x_j)),
/// a lower-triangular system with diagonal c_j, solved by forward substitution
/// without forming σ⁻¹.
UniDerivation act_on_derivation(const TriangularAutomorphism& sigma, const UniDerivation& d);

/// One line per non-identity variable: `xK -> c xK + tail`. The identity prints as `# identity`.
std::string to_string(const TriangularAutomorphism& sigma);

/// Reads the line format above; blank lines and `#` comments are skipped and an
/// optional `n = N` line fixes the variable count. Otherwise n is the largest index
/// mentioned, or `n` if given (which must then be at least that large).
TriangularAutomorphism parse_automorphism(std::string_view text, std::optional<std::size_t> n = std::nullopt);

}  // namespace unitri

#endif  // UNITRI_AUTOMORPHISM_HPP

#ifndef UNITRI_DERIVATION_HPP
#define UNITRI_DERIVATION_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "unitri/polynomial.hpp"

namespace unitri {

inline constexpr std::size_t kDefaultNilpotencyCap = 64;

/// Element Σ_j f_j ∂_j of u_n, with f_j ∈ K[x_1..x_{j-1}] (so f_1 is a constant).
///
/// Construction validates the triangular shape and throws Errc::invalid_derivation
/// on any coefficient that depends on x_j or later.
class UniDerivation {
 public:
  UniDerivation() = default;
  /// The zero derivation of u_n.
  explicit UniDerivation(std::size_t n);
  explicit UniDerivation(std::vector<Polynomial> coeffs);

  /// ∂_j.
  static UniDerivation partial(std::size_t n, std::size_t j);
  /// c x^m ∂_j.
  static UniDerivation monomial(std::size_t j, Monomial m, const Scalar& c = 1);

  std::size_t ambient() const noexcept { return coeffs_.size(); }
  /// Coefficient of ∂_j, 1 ≤ j ≤ n.
  const Polynomial& coefficient(std::size_t j) const { return coeffs_.at(j - 1); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  std::size_t term_count() const noexcept;

  UniDerivation& operator+=(const UniDerivation& other);
  UniDerivation& operator-=(const UniDerivation& other);
  UniDerivation& operator*=(const Scalar& c);

  friend UniDerivation operator+(UniDerivation a, const UniDerivation& b) { return a += b; }
  friend UniDerivation operator-(UniDerivation a, const UniDerivation& b) { return a -= b; }
  friend UniDerivation operator*(UniDerivation a, const Scalar& c) { return a *= c; }
  friend UniDerivation operator*(const Scalar& c, UniDerivation a) { return a *= c; }
  UniDerivation operator-() const;

  friend bool operator==(const UniDerivation& a, const UniDerivation& b) { return a.coeffs_ == b.coeffs_; }

 private:
  struct Unchecked {};
  UniDerivation(std::vector<Polynomial> coeffs, Unchecked) : coeffs_(std::move(coeffs)) {}
  friend UniDerivation bracket(const UniDerivation&, const UniDerivation&);

  std::vector<Polynomial> coeffs_;
};

/// Position in the chain u_n = u_{n,1} ⊃ u_{n,2} ⊃ ... ⊃ u_{n,n+1} = 0.
struct IdealIndex {
  std::size_t value = 1;
  friend auto operator<=>(const IdealIndex&, const IdealIndex&) = default;
};

/// [D, E] = Σ_j (D(g_j) − E(f_j)) ∂_j.
UniDerivation bracket(const UniDerivation& d, const UniDerivation& e);

/// D(p) = Σ_j f_j ∂_j(p).
Polynomial apply(const UniDerivation& d, const Polynomial& p);

/// Largest i with D ∈ u_{n,i}; n+1 for the zero derivation.
IdealIndex ideal_index(const UniDerivation& d);

/// ad(g)^k (D).
UniDerivation ad_power(const UniDerivation& g, const UniDerivation& d, std::size_t k);

/// Σ_{i=0}^k ad(g)^i(D) / i!, where ad(g)^{k+1}(D) = 0. Nilpotency is detected
/// per argument; if ad(g)^cap(D) is still nonzero the call throws
/// Errc::nilpotency_cap_exceeded.
UniDerivation exp_ad(const UniDerivation& g, const UniDerivation& d, std::size_t cap = kDefaultNilpotencyCap);

}  // namespace unitri

#endif  // UNITRI_DERIVATION_HPP

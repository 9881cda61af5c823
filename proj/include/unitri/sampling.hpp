#ifndef UNITRI_SAMPLING_HPP
#define UNITRI_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "unitri/automorphism.hpp"
#include "unitri/derivation.hpp"

namespace unitri {

/// Seeded generator of small random algebra elements for tests and the CLI.
/// Draws are reduced from a 64-bit Mersenne twister by modulus, so a seed gives
/// the same objects on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  /// p/q with |p| ≤ 3 and q ∈ {1, 2, 3}.
  Scalar small_scalar(bool nonzero = false);

  /// Up to `max_terms` terms in x_1..x_vars (ambient n), each of total degree ≤ max_degree.
  Polynomial polynomial(std::size_t n, std::size_t vars, unsigned max_degree, std::size_t max_terms,
                        bool allow_constant = true);

  /// Random element of u_{n,min_index} with coefficient degree ≤ max_degree.
  UniDerivation derivation(std::size_t n, unsigned max_degree, std::size_t min_index = 1, std::size_t max_terms = 3);

  /// Random element of T^n ⋉ T_n with tail degree ≤ tail_degree.
  TriangularAutomorphism automorphism(std::size_t n, unsigned tail_degree, std::size_t max_terms = 3,
                                      bool with_torus = true);

 private:
  std::mt19937_64 rng_;
};

}  // namespace unitri

#endif  // UNITRI_SAMPLING_HPP

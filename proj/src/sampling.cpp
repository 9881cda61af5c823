#include "unitri/sampling.hpp"

namespace unitri {

Scalar Sampler::small_scalar(bool nonzero) {
  for (;;) {
    const long num = static_cast<long>(below(7)) - 3;
    const long den = static_cast<long>(below(3)) + 1;
    if (nonzero && num == 0) continue;
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
}

Polynomial Sampler::polynomial(std::size_t n, std::size_t vars, unsigned max_degree, std::size_t max_terms,
                               bool allow_constant) {
  std::vector<Polynomial::Term> terms;
  if (vars == 0) {
    if (allow_constant) terms.emplace_back(Monomial(n), small_scalar());
    return Polynomial::from_terms(n, std::move(terms));
  }
  const std::size_t count = below(max_terms + 1);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Exponent> exps(n, 0);
    const unsigned deg = static_cast<unsigned>(below(max_degree + 1));
    for (unsigned k = 0; k < deg; ++k) ++exps[below(vars)];
    Monomial m(std::move(exps));
    if (!allow_constant && m.is_one()) continue;
    terms.emplace_back(std::move(m), small_scalar(true));
  }
  return Polynomial::from_terms(n, std::move(terms));
}

UniDerivation Sampler::derivation(std::size_t n, unsigned max_degree, std::size_t min_index, std::size_t max_terms) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (std::size_t j = 1; j <= n; ++j)
    coeffs.push_back(j < min_index ? Polynomial(n) : polynomial(n, j - 1, max_degree, max_terms));
  return UniDerivation(std::move(coeffs));
}

TriangularAutomorphism Sampler::automorphism(std::size_t n, unsigned tail_degree, std::size_t max_terms,
                                             bool with_torus) {
  std::vector<Scalar> scales;
  std::vector<Polynomial> tails;
  for (std::size_t j = 1; j <= n; ++j) {
    scales.push_back(with_torus ? small_scalar(true) : Scalar(1));
    tails.push_back(polynomial(n, j - 1, tail_degree, max_terms, false));
  }
  return TriangularAutomorphism(std::move(scales), std::move(tails));
}

}  // namespace unitri

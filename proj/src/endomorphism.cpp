#include "unitri/endomorphism.hpp"

#include "unitri/error.hpp"
#include "unitri/text.hpp"

namespace unitri {

namespace {

void require_positive_level(std::size_t d) {
  if (d < 1) throw Error(Errc::precondition, "endomorphisms are built on N_d with d >= 1");
}

std::vector<UniDerivation> basis_derivations(const FiltrationBasis& basis) {
  std::vector<UniDerivation> out;
  out.reserve(basis.size());
  for (const auto& b : basis.elements()) out.push_back(b.to_derivation(basis.ambient()));
  return out;
}

}  // namespace

TruncatedLieMap endo_from_automorphism(const TriangularAutomorphism& sigma, std::size_t d) {
  require_positive_level(d);
  FiltrationBasis basis = enumerate_basis(sigma.ambient(), d);
  std::vector<UniDerivation> images;
  images.reserve(basis.size());
  for (const auto& b : basis.elements()) images.push_back(act_on_derivation(sigma, b.to_derivation(basis.ambient())));
  return TruncatedLieMap(std::move(basis), std::move(images));
}

TruncatedLieMap endo_from_exp_ad(const UniDerivation& g, std::size_t d, std::size_t cap) {
  require_positive_level(d);
  FiltrationBasis basis = enumerate_basis(g.ambient(), d);
  std::vector<UniDerivation> images;
  images.reserve(basis.size());
  for (const auto& b : basis.elements()) images.push_back(exp_ad(g, b.to_derivation(basis.ambient()), cap));
  return TruncatedLieMap(std::move(basis), std::move(images));
}

HomomorphismCheck check_homomorphism(const TruncatedLieMap& phi) {
  const FiltrationBasis& basis = phi.domain();
  const std::vector<UniDerivation> elems = basis_derivations(basis);
  const std::size_t d = basis.level();
  HomomorphismCheck result;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (basis[a].level() + basis[b].level() > d) {
        ++result.unchecked_pairs;
        continue;
      }
      if (result.violation) {
        ++result.checked_pairs;
        continue;
      }
      ++result.checked_pairs;
      UniDerivation br = bracket(elems[a], elems[b]);
      UniDerivation expected = phi(br);
      UniDerivation actual = bracket(phi.image(a), phi.image(b));
      if (expected != actual)
        result.violation = HomomorphismViolation{basis[a], basis[b], std::move(br), std::move(expected),
                                                 std::move(actual)};
    }
  }
  return result;
}

bool check_injectivity(const TruncatedLieMap& phi, std::size_t level) {
  if (level > phi.level())
    throw Error(Errc::precondition, "injectivity level " + std::to_string(level) + " exceeds the domain level " +
                                        std::to_string(phi.level()));
  const FiltrationBasis& basis = phi.domain();
  DerivationSpace space;
  std::size_t count = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].level() > level) continue;
    ++count;
    if (phi.image(i).is_zero() || !space.insert(to_row(phi.image(i)))) return false;
  }
  return space.rank() == count;
}

std::vector<UniDerivation> generator_images(const TruncatedLieMap& phi) {
  const std::size_t n = phi.ambient();
  std::vector<UniDerivation> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t pos = phi.domain().position(BasisIndex{i, std::vector<Exponent>(i - 1, 0)});
    if (pos == phi.domain().size()) throw Error(Errc::precondition, "domain does not contain d" + std::to_string(i));
    out.push_back(phi.image(pos));
  }
  return out;
}

std::vector<GeneratorDecomposition> extract_generators(const TruncatedLieMap& phi) {
  const std::size_t n = phi.ambient();
  const std::vector<UniDerivation> targets = generator_images(phi);
  std::vector<GeneratorDecomposition> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const UniDerivation& t = targets[i - 1];
    if (ideal_index(t).value < i)
      throw Error(Errc::derived_series_inclusion, "derived-series inclusion violated: phi(d" + std::to_string(i) +
                                                      ") = " + to_string(t) + " is not in u_{n," +
                                                      std::to_string(i) + "}");
    const Polynomial& lead = t.coefficient(i);
    if (!lead.is_constant())
      throw Error(Errc::lambda_not_scalar, "lambda_" + std::to_string(i) + " not scalar (" + to_string(lead) +
                                               "): homomorphism law must fail");
    const Scalar lambda = lead.constant_term();
    if (lambda == 0)
      throw Error(Errc::zero_leading_scalar, "zero leading scalar: not injective (lambda_" + std::to_string(i) +
                                                 " = 0 in phi(d" + std::to_string(i) + ") = " + to_string(t) + ")");
    out.push_back(GeneratorDecomposition{i, lambda, t - UniDerivation::partial(n, i) * lambda});
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> check_pairwise_commuting(const std::vector<UniDerivation>& targets) {
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (!bracket(targets[i], targets[j]).is_zero()) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

}  // namespace unitri

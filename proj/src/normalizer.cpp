#include "unitri/normalizer.hpp"

#include "unitri/error.hpp"
#include "unitri/text.hpp"

namespace unitri {

const char* stage_name(Stage s) noexcept {
  switch (s) {
    case Stage::homomorphism: return "homomorphism";
    case Stage::injectivity: return "injectivity";
    case Stage::generators: return "generators";
    case Stage::normalization: return "normalization";
    case Stage::filtration: return "filtration";
    case Stage::complete: return "complete";
  }
  return "unknown";
}

TriangularAutomorphism construct_sigma(const std::vector<UniDerivation>& targets) {
  const std::size_t n = targets.size();
  if (n == 0) throw Error(Errc::precondition, "construct_sigma needs at least one target");
  for (const auto& t : targets) require_same_ambient(n, t.ambient(), "construct_sigma");

  if (auto pair = check_pairwise_commuting(targets))
    throw Error(Errc::integrability_failure, "integrability failure: targets " + std::to_string(pair->first) +
                                                 " and " + std::to_string(pair->second) + " do not commute");

  std::vector<Scalar> lambdas;
  lambdas.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const UniDerivation& t = targets[i - 1];
    const Polynomial& lead = t.coefficient(i);
    if (ideal_index(t).value < i || !lead.is_constant() || lead.is_zero())
      throw Error(Errc::not_realizable, "not realizable in T^n x T_n: target " + std::to_string(i) + " = " +
                                            to_string(t) + " is not lambda d" + std::to_string(i) +
                                            " + u with lambda != 0, u in u_{n," + std::to_string(i + 1) + "}");
    lambdas.push_back(lead.constant_term());
  }

  std::vector<Scalar> scales;
  std::vector<Polynomial> tails;
  scales.reserve(n);
  tails.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar c = 1 / lambdas[j - 1];
    Polynomial a(n);
    for (std::size_t i = j - 1; i >= 1; --i) {
      const UniDerivation& t = targets[i - 1];
      Polynomial residual = t.coefficient(j) * c;
      if (!a.is_zero()) {
        residual += partial_derivative(a, i) * lambdas[i - 1];
        for (std::size_t k = i + 1; k < j; ++k)
          if (!t.coefficient(k).is_zero()) residual += t.coefficient(k) * partial_derivative(a, k);
      }
      if (residual.max_support_index() > i)
        throw Error(Errc::integrability_failure,
                    "integrability failure: equation for d" + std::to_string(i) + " acting on sigma(x" +
                        std::to_string(j) + ") depends on x" + std::to_string(residual.max_support_index()));
      if (!residual.is_zero()) a -= antiderivative(residual, i) * (1 / lambdas[i - 1]);
    }
    scales.push_back(c);
    tails.push_back(std::move(a));
  }

  TriangularAutomorphism sigma(std::move(scales), std::move(tails));
  for (std::size_t i = 1; i <= n; ++i)
    if (act_on_derivation(sigma, UniDerivation::partial(n, i)) != targets[i - 1])
      throw Error(Errc::solver_consistency,
                  "solver consistency failure: sigma . d" + std::to_string(i) + " does not match its target");
  return sigma;
}

Normalization normalize(const TruncatedLieMap& phi) {
  (void)extract_generators(phi);
  TriangularAutomorphism sigma = construct_sigma(generator_images(phi));
  const TriangularAutomorphism inverse = invert(sigma);
  std::vector<UniDerivation> images;
  images.reserve(phi.images().size());
  for (const auto& img : phi.images()) images.push_back(act_on_derivation(inverse, img));
  return Normalization{std::move(sigma), TruncatedLieMap(phi.domain(), std::move(images))};
}

std::size_t default_budget(std::size_t level) noexcept { return level / 2; }

VerificationReport verify_theorem(const TruncatedLieMap& phi, std::optional<std::size_t> budget) {
  VerificationReport report;
  report.ambient = phi.ambient();
  report.level = phi.level();
  report.budget = budget.value_or(default_budget(phi.level()));
  if (report.budget > report.level)
    throw Error(Errc::precondition, "report budget " + std::to_string(report.budget) + " exceeds the level " +
                                        std::to_string(report.level));
  auto reject = [&](Stage stage, std::string reason) {
    report.verdict = Verdict::rejected;
    report.stage = stage;
    report.reason = std::move(reason);
    return report;
  };

  const HomomorphismCheck hom = check_homomorphism(phi);
  report.checked_pairs = hom.checked_pairs;
  report.unchecked_pairs = hom.unchecked_pairs;
  if (!hom.passed()) {
    report.violation = hom.violation;
    const auto& v = *hom.violation;
    return reject(Stage::homomorphism, "homomorphism law fails on [" + to_string(v.left) + ", " + to_string(v.right) +
                                           "]: phi([u,v]) = " + to_string(v.expected) +
                                           " but [phi(u), phi(v)] = " + to_string(v.actual));
  }

  if (!check_injectivity(phi, phi.level()))
    return reject(Stage::injectivity, "not a monomorphism: the restriction to N_" + std::to_string(phi.level()) +
                                          " has a nontrivial kernel");

  std::vector<GeneratorDecomposition> gens;
  try {
    gens = extract_generators(phi);
  } catch (const Error& e) {
    if (e.code() != Errc::zero_leading_scalar) return reject(Stage::generators, e.what());
    // Recover which index failed to state the derived-length contradiction.
    const auto targets = generator_images(phi);
    std::size_t i = 1;
    while (i <= targets.size() && targets[i - 1].coefficient(i).constant_term() != 0) ++i;
    const std::size_t n = phi.ambient();
    return reject(Stage::generators,
                  std::string(e.what()) + "; phi would map K d" + std::to_string(i) + " + u_{n," +
                      std::to_string(i + 1) + "} (derived length " + std::to_string(n - i + 1) + ") into u_{n," +
                      std::to_string(i + 1) + "} (derived length " + std::to_string(n - i) + ")");
  }
  for (const auto& g : gens) report.lambdas.push_back(g.lambda);

  Normalization norm;
  try {
    norm = normalize(phi);
  } catch (const Error& e) {
    return reject(Stage::normalization, e.what());
  }
  report.sigma = norm.sigma;

  for (std::size_t i = 0; i <= report.budget; ++i) {
    const std::size_t dim = filtration_dimension(phi.ambient(), i);
    std::size_t rank = 0;
    try {
      rank = rank_of(norm.psi, i);
    } catch (const Error& e) {
      if (e.code() != Errc::filtration_not_preserved) throw;
      return reject(Stage::filtration, e.what());
    }
    report.level_ranks.push_back(LevelRank{i, rank, dim});
    if (rank != dim)
      return reject(Stage::filtration, "normalized map has rank " + std::to_string(rank) + " < dim N_" +
                                           std::to_string(i) + " = " + std::to_string(dim));
  }

  report.verdict = Verdict::certified;
  report.stage = Stage::complete;
  report.reason = "certified automorphism at level " + std::to_string(phi.level());
  return report;
}

}  // namespace unitri

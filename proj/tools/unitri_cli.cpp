// unitri: command-line front end for the u_n toolkit.
//
// Exit codes: 0 success / certified, 1 rejected or failed check, 2 malformed input.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unitri/automorphism.hpp"
#include "unitri/endomorphism.hpp"
#include "unitri/error.hpp"
#include "unitri/filtration.hpp"
#include "unitri/io.hpp"
#include "unitri/normalizer.hpp"
#include "unitri/report.hpp"
#include "unitri/sampling.hpp"
#include "unitri/text.hpp"

namespace {

using namespace unitri;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitMalformed = 2;

// Errors about the shape of the inputs, as opposed to a computation that failed on valid ones.
bool is_input_error(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::ambient_mismatch:
    case Errc::index_out_of_range:
    case Errc::invalid_derivation:
    case Errc::invalid_automorphism:
    case Errc::outside_filtration_level:
    case Errc::precondition: return true;
    default: return false;
  }
}

// Error raised while reading a named input, reported as `source:line:col: message`.
struct InputError {
  std::string source;
  std::string message;
};

[[noreturn]] void rethrow_with_source(const std::string& source) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw InputError{source, std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message()};
  } catch (const Error& e) {
    throw InputError{source, std::string(" ") + e.what()};
  }
}

// Variable count shared by all textual arguments: the largest index mentioned
// (at least 2), cross-checked against --n when given.
std::size_t infer_n(const std::vector<std::string>& exprs, std::optional<std::size_t> forced,
                    std::size_t floor = 2) {
  std::size_t needed = floor;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    try {
      needed = std::max(needed, infer_variable_count(exprs[i]));
    } catch (...) {
      rethrow_with_source("arg" + std::to_string(i + 1));
    }
  }
  if (forced) {
    if (*forced < needed)
      throw InputError{"--n", " n = " + std::to_string(*forced) + " but the inputs mention index " +
                                  std::to_string(needed)};
    return *forced;
  }
  return needed;
}

UniDerivation derivation_arg(const std::string& text, std::size_t n, std::size_t which) {
  try {
    return parse_derivation(text, n);
  } catch (...) {
    rethrow_with_source("arg" + std::to_string(which));
  }
}

Polynomial polynomial_arg(const std::string& text, std::size_t n, std::size_t which) {
  try {
    return parse_polynomial(text, n);
  } catch (...) {
    rethrow_with_source("arg" + std::to_string(which));
  }
}

TriangularAutomorphism sigma_file(const std::string& path, std::optional<std::size_t> n) {
  try {
    return parse_automorphism(read_file(path), n);
  } catch (...) {
    rethrow_with_source(path);
  }
}

TruncatedLieMap endo_file(const std::string& path) {
  try {
    return parse_endomorphism(read_file(path));
  } catch (...) {
    rethrow_with_source(path);
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Lie algebra u_n of unitriangular polynomial derivations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::optional<std::size_t> opt_n;
  std::vector<std::string> exprs;
  std::size_t cap = kDefaultNilpotencyCap;
  std::string sigma_path, endo_path, spanners_path, out_path, exp_ad_expr;
  std::size_t level = 0, dim_n = 0, dim_d = 0;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  unsigned tail_degree = 2;
  bool json = false, identity_flag = false, zero_flag = false, random_flag = false, show_bound = false;
  bool with_matrix = false;
  std::function<int()> action;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", opt_n, "Variable count (inferred if omitted)"); };

  auto* bracket_cmd = app.add_subcommand("bracket", "Print [D, E]");
  bracket_cmd->add_option("D", exprs, "Two derivations")->expected(2)->required();
  add_n(bracket_cmd);
  bracket_cmd->callback([&] {
    action = [&] {
      const std::size_t n = infer_n(exprs, opt_n);
      std::cout << to_string(bracket(derivation_arg(exprs[0], n, 1), derivation_arg(exprs[1], n, 2))) << "\n";
      return kExitOk;
    };
  });

  auto* apply_cmd = app.add_subcommand("apply", "Print D(p)");
  apply_cmd->add_option("args", exprs, "A derivation and a polynomial")->expected(2)->required();
  add_n(apply_cmd);
  apply_cmd->callback([&] {
    action = [&] {
      const std::size_t n = infer_n(exprs, opt_n);
      std::cout << to_string(apply(derivation_arg(exprs[0], n, 1), polynomial_arg(exprs[1], n, 2))) << "\n";
      return kExitOk;
    };
  });

  auto* exp_cmd = app.add_subcommand("exp-ad", "Print e^{ad(g)}(D)");
  exp_cmd->add_option("args", exprs, "g and D")->expected(2)->required();
  exp_cmd->add_option("--cap", cap, "Nilpotency cap")->capture_default_str()->check(CLI::PositiveNumber);
  add_n(exp_cmd);
  exp_cmd->callback([&] {
    action = [&] {
      const std::size_t n = infer_n(exprs, opt_n);
      std::cout << to_string(exp_ad(derivation_arg(exprs[0], n, 1), derivation_arg(exprs[1], n, 2), cap)) << "\n";
      return kExitOk;
    };
  });

  auto* act_cmd = app.add_subcommand("act", "Print sigma . D for an automorphism file");
  act_cmd->add_option("--sigma", sigma_path, "Automorphism file")->required();
  act_cmd->add_option("D", exprs, "Derivation")->expected(1)->required();
  add_n(act_cmd);
  act_cmd->callback([&] {
    action = [&] {
      TriangularAutomorphism sigma = sigma_file(sigma_path, std::nullopt);
      const std::size_t n = infer_n(exprs, opt_n ? opt_n : std::optional<std::size_t>(), sigma.ambient());
      if (sigma.ambient() != n) sigma = sigma_file(sigma_path, n);
      std::cout << to_string(act_on_derivation(sigma, derivation_arg(exprs[0], n, 1))) << "\n";
      return kExitOk;
    };
  });

  auto* ideal_cmd = app.add_subcommand("ideal-index", "Largest i with D in u_{n,i}");
  ideal_cmd->add_option("D", exprs, "Derivation")->expected(1)->required();
  add_n(ideal_cmd);
  ideal_cmd->callback([&] {
    action = [&] {
      const std::size_t n = infer_n(exprs, opt_n);
      std::cout << ideal_index(derivation_arg(exprs[0], n, 1)).value << "\n";
      return kExitOk;
    };
  });

  auto* dim_cmd = app.add_subcommand("dim-n", "dim N_d for u_n");
  dim_cmd->add_option("n", dim_n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  dim_cmd->add_option("d", dim_d)->required();
  dim_cmd->callback([&] {
    action = [&] {
      std::cout << filtration_dimension(dim_n, dim_d) << "\n";
      return kExitOk;
    };
  });

  auto* basis_cmd = app.add_subcommand("basis", "List the basis of N_d");
  basis_cmd->add_option("n", dim_n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  basis_cmd->add_option("d", dim_d)->required();
  basis_cmd->callback([&] {
    action = [&] {
      const FiltrationBasis b = enumerate_basis(dim_n, dim_d);
      for (const auto& e : b.elements()) std::cout << to_string(e) << " " << to_string(e.to_derivation(dim_n)) << "\n";
      return kExitOk;
    };
  });

  auto* dl_cmd = app.add_subcommand("derived-length", "Derived length of the span of a spanner file");
  dl_cmd->add_option("--spanners", spanners_path, "Spanner file")->required();
  dl_cmd->add_option("--budget", budget, "Filtration level containing every spanner")->required();
  dl_cmd->add_flag("--bound", show_bound, "Also print the ideal-index upper bound");
  add_n(dl_cmd);
  dl_cmd->callback([&] {
    action = [&] {
      SpannedSubalgebra s;
      try {
        s = parse_spanners(read_file(spanners_path), opt_n);
      } catch (...) {
        rethrow_with_source(spanners_path);
      }
      std::cout << derived_length(s, *budget);
      if (show_bound) std::cout << " " << derived_length_upper_bound(s);
      std::cout << "\n";
      return kExitOk;
    };
  });

  auto* make_cmd = app.add_subcommand("make-endo", "Write an endomorphism file on N_d");
  auto* src = make_cmd->add_option_group("source");
  src->add_option("--sigma", sigma_path, "Induced by an automorphism file");
  src->add_option("--exp-ad", exp_ad_expr, "Induced by e^{ad(g)}");
  src->add_flag("--identity", identity_flag, "Identity map");
  src->add_flag("--zero", zero_flag, "Zero map");
  src->add_flag("--random-sigma", random_flag, "Induced by a random automorphism (see --seed)");
  src->require_option(1);
  make_cmd->add_option("--level", level, "Filtration level d")->required();
  make_cmd->add_option("--seed", seed, "Seed for --random-sigma")->capture_default_str();
  make_cmd->add_option("--tail-degree", tail_degree, "Tail degree for --random-sigma")->capture_default_str();
  make_cmd->add_option("--cap", cap, "Nilpotency cap for --exp-ad")->capture_default_str();
  make_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");
  add_n(make_cmd);
  make_cmd->callback([&] {
    action = [&] {
      TruncatedLieMap map;
      if (!sigma_path.empty()) {
        map = endo_from_automorphism(sigma_file(sigma_path, opt_n), level);
      } else if (!exp_ad_expr.empty()) {
        const std::size_t n = infer_n({exp_ad_expr}, opt_n);
        map = endo_from_exp_ad(derivation_arg(exp_ad_expr, n, 1), level, cap);
      } else if (random_flag) {
        Sampler sampler(seed);
        map = endo_from_automorphism(sampler.automorphism(opt_n.value_or(3), tail_degree), level);
      } else {
        if (!opt_n) throw InputError{"--n", " --identity and --zero need --n"};
        map = identity_flag ? TruncatedLieMap::identity(*opt_n, level) : TruncatedLieMap::zero(*opt_n, level);
      }
      emit(format_endomorphism(map), out_path);
      return kExitOk;
    };
  });

  auto* check_cmd = app.add_subcommand("check-endo", "Check homomorphism law, injectivity and generator shape");
  check_cmd->add_option("--endo", endo_path, "Endomorphism file")->required();
  check_cmd->add_flag("--json", json, "Machine-readable output");
  check_cmd->add_flag("--matrix", with_matrix, "Print the matrix on the top level when N_d is preserved");
  check_cmd->callback([&] {
    action = [&] {
      const TruncatedLieMap map = endo_file(endo_path);
      const HomomorphismCheck hom = check_homomorphism(map);
      std::vector<bool> injective;
      for (std::size_t i = 0; i <= map.level(); ++i) injective.push_back(check_injectivity(map, i));
      std::string generators_error;
      std::vector<GeneratorDecomposition> gens;
      try {
        gens = extract_generators(map);
      } catch (const Error& e) {
        generators_error = e.what();
      }
      const bool ok = hom.passed() && injective.back() && generators_error.empty();
      if (json) {
        nlohmann::ordered_json j;
        j["ok"] = ok;
        j["homomorphism"] = {{"passed", hom.passed()},
                             {"checked_pairs", hom.checked_pairs},
                             {"unchecked_pairs", hom.unchecked_pairs}};
        if (hom.violation)
          j["violation"] = {{"left", to_string(hom.violation->left)},
                            {"right", to_string(hom.violation->right)},
                            {"bracket", to_string(hom.violation->bracket)},
                            {"expected", to_string(hom.violation->expected)},
                            {"actual", to_string(hom.violation->actual)}};
        else
          j["violation"] = nullptr;
        j["injective"] = injective;
        auto g = nlohmann::ordered_json::array();
        for (const auto& d : gens) g.push_back({{"index", d.index}, {"lambda", to_string(d.lambda)}, {"tail", to_string(d.tail)}});
        j["generators"] = g;
        j["generators_error"] = generators_error.empty() ? nlohmann::ordered_json(nullptr)
                                                         : nlohmann::ordered_json(generators_error);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "homomorphism: " << (hom.passed() ? "pass" : "FAIL") << " (" << hom.checked_pairs
                  << " pairs checked, " << hom.unchecked_pairs << " beyond truncation)\n";
        if (hom.violation) {
          const auto& v = *hom.violation;
          std::cout << "  violation: [" << to_string(v.left) << ", " << to_string(v.right)
                    << "]: expected " << to_string(v.expected) << ", actual " << to_string(v.actual) << "\n";
        }
        std::cout << "injective:";
        for (std::size_t i = 0; i < injective.size(); ++i)
          std::cout << " N_" << i << "=" << (injective[i] ? "yes" : "no");
        std::cout << "\n";
        if (generators_error.empty())
          for (const auto& d : gens)
            std::cout << "phi(d" << d.index << "): lambda = " << to_string(d.lambda)
                      << ", tail = " << to_string(d.tail) << "\n";
        else
          std::cout << "generators: " << generators_error << "\n";
        if (with_matrix) {
          try {
            std::cout << "matrix on N_" << map.level() << ":\n" << format_matrix(restriction_matrix(map, map.level()));
          } catch (const Error& e) {
            std::cout << "matrix: " << e.what() << "\n";
          }
        }
        std::cout << "result: " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? kExitOk : kExitRejected;
    };
  });

  auto* norm_cmd = app.add_subcommand("normalize", "Print sigma and write the normalized map sigma^-1 phi");
  norm_cmd->add_option("--endo", endo_path, "Endomorphism file")->required();
  norm_cmd->add_option("-o,--output", out_path, "Write the normalized map here (default stdout)");
  norm_cmd->callback([&] {
    action = [&] {
      const TruncatedLieMap map = endo_file(endo_path);
      Normalization norm;
      try {
        norm = normalize(map);
      } catch (const Error& e) {
        std::cerr << "normalize: " << e.what() << "\n";
        return kExitRejected;
      }
      std::string sigma_text;
      {
        std::istringstream lines(to_string(norm.sigma));
        for (std::string line; std::getline(lines, line);) sigma_text += "# sigma: " + (line.rfind("# ", 0) == 0 ? line.substr(2) : line) + "\n";
      }
      emit(sigma_text + format_endomorphism(norm.psi), out_path);
      if (!out_path.empty()) std::cout << to_string(norm.sigma);
      return kExitOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Certify that an endomorphism is an automorphism at its level");
  verify_cmd->add_option("--endo", endo_path, "Endomorphism file")->required();
  verify_cmd->add_option("--budget", budget, "Highest level to certify (default: level / 2)");
  verify_cmd->add_flag("--json", json, "Machine-readable output");
  verify_cmd->callback([&] {
    action = [&] {
      const TruncatedLieMap map = endo_file(endo_path);
      if (budget && *budget > map.level())
        throw InputError{"--budget", " budget " + std::to_string(*budget) + " exceeds the level " +
                                         std::to_string(map.level())};
      const VerificationReport report = verify_theorem(map, budget);
      std::cout << (json ? format_report_json(report) : format_report_text(report));
      return report.certified() ? kExitOk : kExitRejected;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << e.source << ":" << e.message << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitMalformed : kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

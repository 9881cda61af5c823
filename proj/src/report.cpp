#include "unitri/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "unitri/text.hpp"

namespace unitri {

namespace {

const char* verdict_name(Verdict v) { return v == Verdict::certified ? "certified" : "rejected"; }

}  // namespace

std::string format_report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(r.verdict);
  if (r.certified())
    out << " (automorphism at level " << r.level << ")";
  else
    out << " at stage " << stage_name(r.stage);
  out << "\n";
  out << "reason: " << r.reason << "\n";
  out << "n: " << r.ambient << "  level: " << r.level << "  budget: " << r.budget << "\n";
  out << "homomorphism pairs: " << r.checked_pairs << " checked, " << r.unchecked_pairs
      << " beyond truncation\n";
  if (r.violation) {
    const auto& v = *r.violation;
    out << "violation: [" << to_string(v.left) << ", " << to_string(v.right) << "] = " << to_string(v.bracket)
        << "\n  expected phi([u,v]) = " << to_string(v.expected) << "\n  actual [phi(u), phi(v)] = "
        << to_string(v.actual) << "\n";
  }
  if (!r.lambdas.empty()) {
    out << "lambdas:";
    for (const auto& l : r.lambdas) out << " " << to_string(l);
    out << "\n";
  }
  if (r.sigma) {
    out << "sigma:\n";
    std::istringstream lines(to_string(*r.sigma));
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  }
  if (!r.level_ranks.empty()) {
    out << "level  rank  dim\n";
    for (const auto& lr : r.level_ranks)
      out << std::setw(5) << lr.level << std::setw(6) << lr.rank << std::setw(5) << lr.dimension << "\n";
  }
  return out.str();
}

std::string format_report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(r.verdict);
  j["stage"] = stage_name(r.stage);
  j["reason"] = r.reason;
  j["n"] = r.ambient;
  j["level"] = r.level;
  j["budget"] = r.budget;
  j["homomorphism"] = {{"checked_pairs", r.checked_pairs}, {"unchecked_pairs", r.unchecked_pairs}};
  if (r.violation) {
    const auto& v = *r.violation;
    j["violation"] = {{"left", to_string(v.left)},
                      {"right", to_string(v.right)},
                      {"bracket", to_string(v.bracket)},
                      {"expected", to_string(v.expected)},
                      {"actual", to_string(v.actual)}};
  } else {
    j["violation"] = nullptr;
  }
  auto lambdas = nlohmann::ordered_json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(to_string(l));
  j["lambdas"] = lambdas;
  j["sigma"] = r.sigma ? nlohmann::ordered_json(to_string(*r.sigma)) : nlohmann::ordered_json(nullptr);
  auto ranks = nlohmann::ordered_json::array();
  for (const auto& lr : r.level_ranks) ranks.push_back({{"level", lr.level}, {"rank", lr.rank}, {"dim", lr.dimension}});
  j["rank_table"] = ranks;
  return j.dump(2) + "\n";
}

}  // namespace unitri

#ifndef UNITRI_REPORT_HPP
#define UNITRI_REPORT_HPP

#include <string>

#include "unitri/normalizer.hpp"

namespace unitri {

/// Human-readable report: verdict line, lambdas, sigma, rank table.
std::string format_report_text(const VerificationReport& report);

/// Same data as a JSON document (pretty-printed).
std::string format_report_json(const VerificationReport& report);

}  // namespace unitri

#endif  // UNITRI_REPORT_HPP

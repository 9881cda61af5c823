#include "unitri/error.hpp"

namespace unitri {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ambient_mismatch: return "ambient_mismatch";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::invalid_derivation: return "invalid_derivation";
    case Errc::invalid_automorphism: return "invalid_automorphism";
    case Errc::nilpotency_cap_exceeded: return "nilpotency_cap_exceeded";
    case Errc::outside_filtration_level: return "outside_filtration_level";
    case Errc::filtration_not_preserved: return "filtration_not_preserved";
    case Errc::precondition: return "precondition";
    case Errc::derived_series_inclusion: return "derived_series_inclusion";
    case Errc::lambda_not_scalar: return "lambda_not_scalar";
    case Errc::zero_leading_scalar: return "zero_leading_scalar";
    case Errc::integrability_failure: return "integrability_failure";
    case Errc::not_realizable: return "not_realizable";
    case Errc::solver_consistency: return "solver_consistency";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace unitri

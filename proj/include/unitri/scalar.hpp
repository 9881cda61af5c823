#ifndef UNITRI_SCALAR_HPP
#define UNITRI_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace unitri {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with positive denominator.
using Scalar = mpq_class;

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Scalar& value);

/// Parses `p` or `p/q` (optional leading sign). Throws Error on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);

Scalar factorial(unsigned k);

}  // namespace unitri

#endif  // UNITRI_SCALAR_HPP

#ifndef UNITRI_TESTS_SUPPORT_HPP
#define UNITRI_TESTS_SUPPORT_HPP

#include <string>

#include "unitri/automorphism.hpp"
#include "unitri/text.hpp"

namespace unitri::testing {

inline Polynomial P(const std::string& text, std::size_t n) { return parse_polynomial(text, n); }
inline UniDerivation D(const std::string& text, std::size_t n) { return parse_derivation(text, n); }
inline Scalar Q(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}
inline TriangularAutomorphism A(const std::string& text, std::size_t n) { return parse_automorphism(text, n); }

}  // namespace unitri::testing

#endif

#ifndef UNITRI_TEXT_HPP
#define UNITRI_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "unitri/derivation.hpp"
#include "unitri/polynomial.hpp"

namespace unitri {

// Textual grammar shared by the CLI and the file formats:
//
//   expr   := ["-"|"+"] term { ("+"|"-") term }
//   term   := [coeff] { ["*"] "x" K ["^" E] } [ ["*"] "d" K ]     (d-part only for derivations)
//   coeff  := INT [ "/" INT ]
//
// Whitespace is insignificant. `0` denotes the zero polynomial/derivation.

/// Source position of a parsed snippet, used to report errors relative to a file.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

Polynomial parse_polynomial(std::string_view text, std::size_t n, SourcePos origin = {});
UniDerivation parse_derivation(std::string_view text, std::size_t n, SourcePos origin = {});

/// Largest K among the `xK` and `dK` tokens (0 if none). Throws ParseError on bad tokens.
std::size_t infer_variable_count(std::string_view text, SourcePos origin = {});

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const UniDerivation& d);

}  // namespace unitri

#endif  // UNITRI_TEXT_HPP

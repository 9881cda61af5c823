#ifndef UNITRI_FILTRATION_HPP
#define UNITRI_FILTRATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unitri/derivation.hpp"
#include "unitri/linalg.hpp"

namespace unitri {

/// The basis element x^α ∂_j of u_n, α ∈ ℕ^{j-1}.
struct BasisIndex {
  std::size_t target = 1;
  std::vector<Exponent> alpha;

  /// Smallest d with x^α ∂_j ∈ N_d.
  Exponent level() const noexcept;
  UniDerivation to_derivation(std::size_t n) const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// `j:α_1,...,α_{j-1}`; for j = 1 this is `1:`.
std::string to_string(const BasisIndex& b);
BasisIndex parse_basis_index(std::string_view text);

/// Ordered monomial basis of N_d = { u ∈ u_n : ad(∂_k)^{d+1} u = 0, k < n }:
/// all x^α ∂_j with every α_k ≤ d, sorted by j and then graded-lex on α.
class FiltrationBasis {
 public:
  FiltrationBasis() = default;
  FiltrationBasis(std::size_t n, std::size_t level, std::vector<BasisIndex> elements);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<BasisIndex>& elements() const& noexcept { return elements_; }
  std::vector<BasisIndex> elements() && { return std::move(elements_); }
  const BasisIndex& operator[](std::size_t i) const { return elements_.at(i); }

  /// Position of x^m ∂_j, or size() if it is not in the basis.
  std::size_t position(std::size_t j, const Monomial& m) const;
  std::size_t position(const BasisIndex& b) const;

 private:
  std::size_t n_ = 0;
  std::size_t level_ = 0;
  std::vector<BasisIndex> elements_;
  std::map<std::pair<std::size_t, std::vector<Exponent>>, std::size_t> lookup_;
};

FiltrationBasis enumerate_basis(std::size_t n, std::size_t d);

/// dim N_d = Σ_{j=1}^n (d+1)^{j-1}.
std::size_t filtration_dimension(std::size_t n, std::size_t d);

/// Exact coordinates of D in B; throws Errc::outside_filtration_level if D ∉ span(B).
std::vector<Scalar> coords(const UniDerivation& d, const FiltrationBasis& basis);
UniDerivation combine(const FiltrationBasis& basis, const std::vector<Scalar>& coefficients);

/// Smallest d with D ∈ N_d: the largest single-variable exponent in any coefficient.
std::size_t membership_level(const UniDerivation& d);

/// A linear map on N_d, given by the image of each basis element.
class TruncatedLieMap {
 public:
  TruncatedLieMap() = default;
  TruncatedLieMap(FiltrationBasis domain, std::vector<UniDerivation> images);

  static TruncatedLieMap identity(std::size_t n, std::size_t d);
  static TruncatedLieMap zero(std::size_t n, std::size_t d);

  const FiltrationBasis& domain() const noexcept { return domain_; }
  const std::vector<UniDerivation>& images() const noexcept { return images_; }
  const UniDerivation& image(std::size_t i) const { return images_.at(i); }
  std::size_t ambient() const noexcept { return domain_.ambient(); }
  std::size_t level() const noexcept { return domain_.level(); }

  /// Linear extension applied to D ∈ N_d.
  UniDerivation operator()(const UniDerivation& d) const;

  friend bool operator==(const TruncatedLieMap& a, const TruncatedLieMap& b) {
    return a.domain_.ambient() == b.domain_.ambient() && a.domain_.level() == b.domain_.level() &&
           a.images_ == b.images_;
  }

 private:
  FiltrationBasis domain_;
  std::vector<UniDerivation> images_;
};

/// A finite spanning set; the span need not be closed under the bracket.
struct SpannedSubalgebra {
  std::size_t ambient = 0;
  std::vector<UniDerivation> spanners;
};

/// Column key (slot j, monomial) ordered by j and then graded-lex.
struct SlotKey {
  std::size_t slot;
  Monomial monomial;
};

struct SlotKeyLess {
  bool operator()(const SlotKey& a, const SlotKey& b) const noexcept {
    if (a.slot != b.slot) return a.slot < b.slot;
    return grlex_less(a.monomial, b.monomial);
  }
};

using DerivationSpace = RowSpace<SlotKey, SlotKeyLess>;

DerivationSpace::Row to_row(const UniDerivation& d);
UniDerivation from_row(std::size_t n, const DerivationSpace::Row& row);

/// Reduced echelon basis of span(ds).
std::vector<UniDerivation> span_basis(std::size_t n, const std::vector<UniDerivation>& ds);
std::size_t span_rank(const std::vector<UniDerivation>& ds);

/// Canonical basis of span{[s,t] : s,t ∈ spanners}. All spanners must lie in
/// N_budget (Errc::precondition otherwise); the outputs lie in N_{2·budget}.
std::vector<UniDerivation> derived_span(const SpannedSubalgebra& s, std::size_t budget_level);

/// Number of nonzero terms of the series span(S), [span, span], ... obtained by
/// iterating derived_span. This certifies a lower bound for the derived length
/// of the subalgebra S generates.
std::size_t derived_length(const SpannedSubalgebra& s, std::size_t budget_level);

/// n + 1 − min ideal_index over the spanners: brackets strictly raise the ideal
/// index on the diagonal, so no derived series starting inside u_{n,i} has more
/// than n − i + 1 nonzero terms. Zero for an empty or all-zero set.
std::size_t derived_length_upper_bound(const SpannedSubalgebra& s);

/// Rank of M restricted to N_sublevel → N_sublevel. Throws
/// Errc::filtration_not_preserved naming the first basis element whose image leaves N_sublevel.
std::size_t rank_of(const TruncatedLieMap& m, std::size_t sublevel);

/// Matrix of M restricted to N_sublevel, one row per domain basis element in
/// basis order (row i = coordinates of the image of element i).
std::vector<std::vector<Scalar>> restriction_matrix(const TruncatedLieMap& m, std::size_t sublevel);

/// Row-major, one row per line, entries `p/q` separated by single spaces.
std::string format_matrix(const std::vector<std::vector<Scalar>>& rows);

}  // namespace unitri

#endif  // UNITRI_FILTRATION_HPP

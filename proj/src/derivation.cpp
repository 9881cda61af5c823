#include "unitri/derivation.hpp"

#include <algorithm>
#include <string>

#include "unitri/error.hpp"

namespace unitri {

UniDerivation::UniDerivation(std::size_t n) {
  coeffs_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) coeffs_.emplace_back(n);
}

UniDerivation::UniDerivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  const std::size_t n = coeffs_.size();
  for (std::size_t j = 1; j <= n; ++j) {
    const Polynomial& f = coeffs_[j - 1];
    require_same_ambient(n, f.ambient(), "derivation construction");
    if (f.max_support_index() > j - 1)
      throw Error(Errc::invalid_derivation, "coefficient of d" + std::to_string(j) + " depends on x" +
                                                std::to_string(f.max_support_index()) +
                                                "; u_n requires it to lie in K[x1..x" + std::to_string(j - 1) +
                                                "]");
  }
}

UniDerivation UniDerivation::partial(std::size_t n, std::size_t j) {
  if (j == 0 || j > n)
    throw Error(Errc::index_out_of_range, "d" + std::to_string(j) + " out of range for n = " + std::to_string(n));
  UniDerivation d(n);
  d.coeffs_[j - 1] = Polynomial::constant(n, 1);
  return d;
}

UniDerivation UniDerivation::monomial(std::size_t j, Monomial m, const Scalar& c) {
  const std::size_t n = m.size();
  if (j == 0 || j > n)
    throw Error(Errc::index_out_of_range, "d" + std::to_string(j) + " out of range for n = " + std::to_string(n));
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) coeffs.push_back(k == j ? Polynomial::monomial(m, c) : Polynomial(n));
  return UniDerivation(std::move(coeffs));
}

bool UniDerivation::is_zero() const noexcept {
  for (const auto& f : coeffs_)
    if (!f.is_zero()) return false;
  return true;
}

std::size_t UniDerivation::term_count() const noexcept {
  std::size_t total = 0;
  for (const auto& f : coeffs_) total += f.term_count();
  return total;
}

UniDerivation& UniDerivation::operator+=(const UniDerivation& other) {
  require_same_ambient(ambient(), other.ambient(), "derivation addition");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

UniDerivation& UniDerivation::operator-=(const UniDerivation& other) {
  require_same_ambient(ambient(), other.ambient(), "derivation subtraction");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

UniDerivation& UniDerivation::operator*=(const Scalar& c) {
  for (auto& f : coeffs_) f *= c;
  return *this;
}

UniDerivation UniDerivation::operator-() const {
  UniDerivation out(*this);
  for (auto& f : out.coeffs_) f = -f;
  return out;
}

// Only ∂_k with k < j can act nontrivially on a coefficient of ∂_j.
static Polynomial apply_below(const UniDerivation& d, const Polynomial& p, std::size_t limit) {
  Polynomial out(p.ambient());
  if (p.is_constant()) return out;
  const std::size_t top = std::min(limit, p.max_support_index());
  for (std::size_t k = 1; k <= top; ++k) {
    const Polynomial& f = d.coefficient(k);
    if (f.is_zero()) continue;
    Polynomial dp = partial_derivative(p, k);
    if (!dp.is_zero()) out += f * dp;
  }
  return out;
}

UniDerivation bracket(const UniDerivation& d, const UniDerivation& e) {
  require_same_ambient(d.ambient(), e.ambient(), "bracket");
  const std::size_t n = d.ambient();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Polynomial c = apply_below(d, e.coefficient(j), j - 1);
    c -= apply_below(e, d.coefficient(j), j - 1);
    out.push_back(std::move(c));
  }
  // u_n is closed under the bracket, so the result needs no re-validation.
  return UniDerivation(std::move(out), UniDerivation::Unchecked{});
}

Polynomial apply(const UniDerivation& d, const Polynomial& p) {
  require_same_ambient(d.ambient(), p.ambient(), "derivation action");
  return apply_below(d, p, d.ambient());
}

IdealIndex ideal_index(const UniDerivation& d) {
  for (std::size_t j = 1; j <= d.ambient(); ++j)
    if (!d.coefficient(j).is_zero()) return IdealIndex{j};
  return IdealIndex{d.ambient() + 1};
}

UniDerivation ad_power(const UniDerivation& g, const UniDerivation& d, std::size_t k) {
  require_same_ambient(g.ambient(), d.ambient(), "ad power");
  UniDerivation cur = d;
  for (std::size_t i = 0; i < k && !cur.is_zero(); ++i) cur = bracket(g, cur);
  return cur;
}

UniDerivation exp_ad(const UniDerivation& g, const UniDerivation& d, std::size_t cap) {
  require_same_ambient(g.ambient(), d.ambient(), "exp_ad");
  if (cap == 0) throw Error(Errc::precondition, "exp_ad needs a nilpotency cap of at least 1");
  UniDerivation sum = d;
  UniDerivation term = d;
  for (std::size_t i = 1; i <= cap; ++i) {
    term = bracket(g, term);
    if (term.is_zero()) return sum;
    if (i == cap) break;
    sum += term * (Scalar(1) / factorial(static_cast<unsigned>(i)));
  }
  throw Error(Errc::nilpotency_cap_exceeded,
              "nilpotency cap exceeded: ad(g)^" + std::to_string(cap) + " is still nonzero on the argument");
}

}  // namespace unitri

#include "unitri/polynomial.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "unitri/error.hpp"

namespace unitri {

void require_same_ambient(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw Error(Errc::ambient_mismatch, std::string("mismatched ambient_n in ") + where + " (" +
                                            std::to_string(a) + " vs " + std::to_string(b) + ")");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t n, std::size_t j, Exponent e) {
  if (j == 0 || j > n)
    throw Error(Errc::index_out_of_range, "variable index x" + std::to_string(j) + " out of range for n = " +
                                              std::to_string(n));
  Monomial m(n);
  m.exps_[j - 1] = e;
  m.degree_ = e;
  return m;
}

Exponent Monomial::max_exponent() const noexcept {
  Exponent best = 0;
  for (Exponent e : exps_) best = std::max(best, e);
  return best;
}

std::size_t Monomial::support_index() const noexcept {
  for (std::size_t k = exps_.size(); k > 0; --k)
    if (exps_[k - 1] != 0) return k;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(size(), other.size(), "monomial product");
  Monomial out(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += other.exps_[k];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::shifted(std::size_t j, int delta) const {
  Monomial out(*this);
  auto& e = out.exps_.at(j - 1);
  e = static_cast<Exponent>(static_cast<int>(e) + delta);
  out.degree_ = static_cast<Exponent>(static_cast<int>(out.degree_) + delta);
  return out;
}

Monomial Monomial::lifted(std::size_t n) const {
  if (support_index() > n)
    throw Error(Errc::ambient_mismatch, "cannot view monomial in fewer than " + std::to_string(support_index()) +
                                            " variables");
  std::vector<Exponent> exps(n, 0);
  std::copy_n(exps_.begin(), std::min(n, exps_.size()), exps.begin());
  return Monomial(std::move(exps));
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k)
    if (x[k] != y[k]) return x[k] < y[k];
  return x.size() < y.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
  Polynomial p(n);
  if (c != 0) p.terms_.emplace_back(Monomial(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t j) {
  Polynomial p(n);
  p.terms_.emplace_back(Monomial::variable(n, j), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(Monomial m, const Scalar& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t n, std::vector<Term> terms) {
  std::map<Monomial, Scalar, GrlexGreater> acc;
  for (auto& [m, c] : terms) {
    require_same_ambient(n, m.size(), "polynomial construction");
    auto [it, inserted] = acc.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  }
  Polynomial p(n);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Scalar Polynomial::constant_term() const {
  // The constant monomial is grlex-smallest, so it can only be the last term.
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_less(key, t.first); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Exponent Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

Exponent Polynomial::max_exponent() const noexcept {
  Exponent best = 0;
  for (const auto& t : terms_) best = std::max(best, t.first.max_exponent());
  return best;
}

std::size_t Polynomial::max_support_index() const noexcept {
  std::size_t best = 0;
  for (const auto& t : terms_) best = std::max(best, t.first.support_index());
  return best;
}

Polynomial Polynomial::lifted(std::size_t m) const {
  Polynomial p(m);
  p.terms_.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) p.terms_.emplace_back(mono.lifted(m), c);
  return p;
}

Polynomial Polynomial::combine(const Polynomial& other, bool subtract) const {
  require_same_ambient(n_, other.n_, subtract ? "polynomial subtraction" : "polynomial addition");
  Polynomial out(n_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && grlex_less(b->first, a->first))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || grlex_less(a->first, b->first)) {
      out.terms_.emplace_back(b->first, subtract ? Scalar(-b->second) : b->second);
      ++b;
    } else {
      Scalar c = subtract ? Scalar(a->second - b->second) : Scalar(a->second + b->second);
      if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) {
    require_same_ambient(n_, other.n_, "polynomial addition");
    return *this;
  }
  *this = combine(other, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) {
    require_same_ambient(n_, other.n_, "polynomial subtraction");
    return *this;
  }
  *this = combine(other, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ambient(a.ambient(), b.ambient(), "polynomial product");
  Polynomial out(a.ambient());
  if (a.is_zero() || b.is_zero()) return out;
  if (b.terms_.size() == 1) {
    const auto& [m, c] = b.terms_.front();
    out.terms_.reserve(a.terms_.size());
    // Multiplying by one monomial preserves the term order.
    for (const auto& [am, ac] : a.terms_) out.terms_.emplace_back(am * m, ac * c);
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  std::map<Monomial, Scalar, GrlexGreater> acc;
  Scalar prod;
  for (const auto& [am, ac] : a.terms_) {
    for (const auto& [bm, bc] : b.terms_) {
      prod = ac * bc;
      auto [it, inserted] = acc.try_emplace(am * bm, prod);
      if (!inserted) it->second += prod;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, Exponent e) {
  Polynomial result = Polynomial::constant(p.ambient(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t j) {
  if (j == 0 || j > p.ambient())
    throw Error(Errc::index_out_of_range,
                "partial derivative index " + std::to_string(j) + " out of range for n = " +
                    std::to_string(p.ambient()));
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m.exponent(j);
    if (e == 0) continue;
    terms.emplace_back(m.shifted(j, -1), c * e);
  }
  return Polynomial::from_terms(p.ambient(), std::move(terms));
}

Polynomial antiderivative(const Polynomial& p, std::size_t j) {
  if (j == 0 || j > p.ambient())
    throw Error(Errc::index_out_of_range,
                "integration index " + std::to_string(j) + " out of range for n = " + std::to_string(p.ambient()));
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m.exponent(j);
    terms.emplace_back(m.shifted(j, +1), c / Scalar(e + 1));
  }
  return Polynomial::from_terms(p.ambient(), std::move(terms));
}

namespace {

// Horner-style evaluation: terms are grouped by the exponent of the highest
// remaining variable, so each distinct prefix is multiplied out once.
class Substitution {
 public:
  Substitution(std::span<const Polynomial> images, std::size_t out_n)
      : images_(images), out_n_(out_n), powers_(images.size()) {}

  Polynomial run(std::vector<const Polynomial::Term*> terms, std::size_t var) {
    if (terms.empty()) return Polynomial(out_n_);
    if (var == 0) {
      // All exponents consumed; distinct monomials leave exactly one term.
      Scalar total = 0;
      for (const auto* t : terms) total += t->second;
      return Polynomial::constant(out_n_, total);
    }
    std::map<Exponent, std::vector<const Polynomial::Term*>> groups;
    for (const auto* t : terms) groups[t->first.exponent(var)].push_back(t);
    if (groups.size() == 1 && groups.begin()->first == 0) return run(std::move(terms), var - 1);
    Polynomial out(out_n_);
    for (auto& [e, group] : groups) {
      Polynomial inner = run(std::move(group), var - 1);
      if (e == 0)
        out += inner;
      else
        out += inner * power(var, e);
    }
    return out;
  }

 private:
  const Polynomial& power(std::size_t var, Exponent e) {
    auto& cache = powers_[var - 1];
    if (cache.empty()) cache.push_back(Polynomial::constant(out_n_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[var - 1]);
    return cache[e];
  }

  std::span<const Polynomial> images_;
  std::size_t out_n_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.ambient())
    throw Error(Errc::ambient_mismatch, "substitute needs " + std::to_string(p.ambient()) + " images, got " +
                                            std::to_string(images.size()));
  if (images.empty()) return p;
  const std::size_t out_n = images.front().ambient();
  for (const auto& img : images) require_same_ambient(out_n, img.ambient(), "substitute");
  std::vector<const Polynomial::Term*> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.push_back(&t);
  Substitution sub(images, out_n);
  return sub.run(std::move(terms), p.ambient());
}

std::size_t max_support_index(const Polynomial& p) { return p.max_support_index(); }

}  // namespace unitri

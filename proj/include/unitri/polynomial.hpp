#ifndef UNITRI_POLYNOMIAL_HPP
#define UNITRI_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "unitri/scalar.hpp"

namespace unitri {

using Exponent = std::uint32_t;

/// Exponent vector x^α of fixed length n. Variables are 1-based in the public API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t n, std::size_t j, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  /// Exponent of x_j, 1 ≤ j ≤ size().
  Exponent exponent(std::size_t j) const { return exps_.at(j - 1); }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  Exponent degree() const noexcept { return degree_; }
  Exponent max_exponent() const noexcept;
  /// Largest j with a nonzero exponent of x_j, 0 for the constant monomial.
  std::size_t support_index() const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Returns the monomial with the exponent of x_j changed by `delta` (must stay ≥ 0).
  Monomial shifted(std::size_t j, int delta) const;
  Monomial lifted(std::size_t n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_n.
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_less(a, b); }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_less(b, a); }
};

/// Sparse polynomial in K[x_1, ..., x_n] with exact rational coefficients.
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}

  static Polynomial constant(std::size_t n, const Scalar& c);
  static Polynomial variable(std::size_t n, std::size_t j);
  static Polynomial monomial(Monomial m, const Scalar& c = 1);
  /// Canonicalizes an arbitrary term list (duplicates merged, zeros dropped).
  static Polynomial from_terms(std::size_t n, std::vector<Term> terms);

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  Exponent total_degree() const noexcept;
  /// Largest exponent of any single variable in any term.
  Exponent max_exponent() const noexcept;
  /// Smallest j such that the polynomial lies in K[x_1..x_j].
  std::size_t max_support_index() const noexcept;

  /// Same polynomial viewed in K[x_1..x_m], m ≥ every variable it uses.
  Polynomial lifted(std::size_t m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial combine(const Polynomial& other, bool subtract) const;

  std::size_t n_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, Exponent e);

/// Formal ∂p/∂x_j.
Polynomial partial_derivative(const Polynomial& p, std::size_t j);

/// The antiderivative in x_j with no x_j-free part: every monomial x^α maps to x^α x_j / (α_j + 1).
Polynomial antiderivative(const Polynomial& p, std::size_t j);

/// p(images[0], ..., images[n-1]); all images must share one ambient size.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

std::size_t max_support_index(const Polynomial& p);

void require_same_ambient(std::size_t a, std::size_t b, const char* where);

}  // namespace unitri

#endif  // UNITRI_POLYNOMIAL_HPP

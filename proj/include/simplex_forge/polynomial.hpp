#ifndef SIMPLEX_FORGE_POLYNOMIAL_HPP
#define SIMPLEX_FORGE_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "simplex_forge/numbers.hpp"

namespace simplex_forge {

/**
 * Univariate polynomial with exact rational coefficients, coefficient i
 * belonging to t^i. Trailing zero coefficients are never stored, so the zero
 * polynomial has no coefficients and equality is structural.
 */
class FPolynomial {
 public:
  FPolynomial() = default;
  explicit FPolynomial(std::vector<Rational> coefficients);
  FPolynomial(std::initializer_list<Rational> coefficients);

  static FPolynomial constant(Rational c);
  /// The monomial t.
  static FPolynomial variable();

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator()(const Rational& t) const;

  /// p(t) -> p(q(t))
  FPolynomial compose(const FPolynomial& q) const;

  FPolynomial& operator+=(const FPolynomial& other);
  FPolynomial& operator-=(const FPolynomial& other);
  FPolynomial& operator*=(const FPolynomial& other);
  FPolynomial& operator*=(const Rational& c);

  friend FPolynomial operator+(FPolynomial a, const FPolynomial& b) { return a += b; }
  friend FPolynomial operator-(FPolynomial a, const FPolynomial& b) { return a -= b; }
  friend FPolynomial operator*(FPolynomial a, const FPolynomial& b) { return a *= b; }
  friend FPolynomial operator*(FPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const FPolynomial&, const FPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Formal antiderivative with zero constant term: t^n -> t^{n+1}/(n+1).
FPolynomial antiderivative(const FPolynomial& p);

/// p^k for k >= 0.
FPolynomial power(const FPolynomial& p, unsigned k);

}  // namespace simplex_forge

#endif

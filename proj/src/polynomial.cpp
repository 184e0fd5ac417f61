#include "simplex_forge/polynomial.hpp"

#include <algorithm>

namespace simplex_forge {

FPolynomial::FPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

FPolynomial::FPolynomial(std::initializer_list<Rational> coefficients)
    : FPolynomial(std::vector<Rational>(coefficients)) {}

FPolynomial FPolynomial::constant(Rational c) { return FPolynomial({std::move(c)}); }

FPolynomial FPolynomial::variable() { return FPolynomial({Rational(0), Rational(1)}); }

void FPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational FPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational FPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

FPolynomial FPolynomial::compose(const FPolynomial& q) const {
  FPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

FPolynomial& FPolynomial::operator+=(const FPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

FPolynomial& FPolynomial::operator-=(const FPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

FPolynomial& FPolynomial::operator*=(const FPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

FPolynomial& FPolynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string FPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const bool unit = mag == 1;
    if (i == 0 || !unit) s += simplex_forge::to_string(mag);
    if (i >= 1) s += unit ? "t" : "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

FPolynomial antiderivative(const FPolynomial& p) {
  std::vector<Rational> out(p.coefficients().size() + 1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    out[i + 1] = p.coefficients()[i] / Rational(static_cast<long>(i + 1));
  return FPolynomial(std::move(out));
}

FPolynomial power(const FPolynomial& p, unsigned k) {
  FPolynomial acc = FPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) acc *= p;
  return acc;
}

}  // namespace simplex_forge

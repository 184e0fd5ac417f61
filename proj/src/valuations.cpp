#include "simplex_forge/valuations.hpp"

#include <algorithm>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

FVector f_vector(const SimplicialComplex& g) {
  FVector f;
  for (const Simplex& x : g) {
    const auto k = static_cast<std::size_t>(x.dimension());
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

FPolynomial f_function(const FVector& f) {
  std::vector<Rational> c(f.size() + 1);
  c[0] = 1;
  for (std::size_t k = 0; k < f.size(); ++k) c[k + 1] = f[k];
  return FPolynomial(std::move(c));
}

FPolynomial f_function(const SimplicialComplex& g) { return f_function(f_vector(g)); }

HVector h_vector(const SimplicialComplex& g) {
  if (g.empty()) throw PreconditionViolation("h-vector of the empty complex");
  const FVector f = f_vector(g);
  const auto top = static_cast<unsigned>(f.size());  // D = dim + 1
  const FPolynomial shifted({Rational(-1), Rational(1)});  // x - 1
  // Σ_{k=-1}^{d} f_k (x-1)^{D-k-1}, with f_{-1} = 1
  FPolynomial h = power(shifted, top);
  for (std::size_t k = 0; k < f.size(); ++k)
    h += power(shifted, top - static_cast<unsigned>(k) - 1) * Rational(f[k]);
  HVector out(top + 1);
  for (unsigned i = 0; i <= top; ++i) out[i] = boost::multiprecision::numerator(h.coefficient(i));
  return out;
}

bool is_dehn_sommerville(const SimplicialComplex& g) {
  const HVector h = h_vector(g);
  return std::equal(h.begin(), h.end(), h.rbegin());
}

bool satisfies_reflection_symmetry(const SimplicialComplex& g) {
  if (g.empty()) throw PreconditionViolation("reflection symmetry of the empty complex");
  const FPolynomial f = f_function(g);
  const FPolynomial reflected = f.compose(FPolynomial({Rational(-1), Rational(-1)}));
  const int sign = (*g.dimension() + 1) % 2 == 0 ? 1 : -1;
  return reflected == f * Rational(sign);
}

BigInt ds_residual(const SimplicialComplex& g, const std::vector<std::int64_t>& coeffs) {
  const FVector f = f_vector(g);
  BigInt acc = 0;
  for (std::size_t k = 0; k < std::min(f.size(), coeffs.size()); ++k)
    acc += BigInt(f[k]) * coeffs[k];
  return acc;
}

BigInt stirling2(unsigned n, unsigned k) {
  // row-by-row recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = row[j] * j + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

IntegerMatrix barycentric_operator(int d) {
  if (d < 0) throw InvalidInput("barycentric operator needs d >= 0");
  const auto n = static_cast<std::size_t>(d) + 1;
  IntegerMatrix q(n);
  BigInt factorial = 1;
  for (std::size_t k = 0; k < n; ++k) {
    factorial *= static_cast<unsigned long>(k + 1);
    for (std::size_t j = 0; j < n; ++j)
      q(k, j) = stirling2(static_cast<unsigned>(j + 1), static_cast<unsigned>(k + 1)) * factorial;
  }
  return q;
}

std::vector<BigInt> apply(const IntegerMatrix& q, const FVector& f) {
  std::vector<BigInt> out(q.rows(), 0);
  for (std::size_t k = 0; k < q.rows(); ++k)
    for (std::size_t j = 0; j < std::min(q.cols(), f.size()); ++j) out[k] += q(k, j) * f[j];
  for (std::size_t j = q.cols(); j < f.size(); ++j)
    if (f[j] != 0) throw InvalidInput("f-vector longer than the operator");
  return out;
}

bool alternating_eigenvector_check(int d) {
  const IntegerMatrix q = barycentric_operator(d);
  const std::size_t n = q.order();
  for (std::size_t j = 0; j < n; ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += (k % 2 == 0 ? 1 : -1) * q(k, j);
    if (acc != (j % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace simplex_forge

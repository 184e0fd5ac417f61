#include "simplex_forge/matrix.hpp"

#include <sstream>
#include <utility>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t order) {
  IntegerMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                                   std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) throw InvalidInput("block out of range");
  IntegerMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

bool IntegerMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

BigInt IntegerMatrix::trace() const {
  if (!is_square()) throw InvalidInput("trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt IntegerMatrix::entry_sum() const {
  BigInt s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

BigInt IntegerMatrix::row_sum(std::size_t i) const {
  BigInt s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& bkj = b(k, j);
        if (bkj != 0) mpz_addmul(c(i, j).backend().data(), aik.backend().data(), bkj.backend().data());
      }
    }
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntegerMatrix power(const IntegerMatrix& a, unsigned m) {
  if (!a.is_square()) throw InvalidInput("power of a non-square matrix");
  IntegerMatrix result = IntegerMatrix::identity(a.order());
  IntegerMatrix base = a;
  while (m > 0) {
    if (m & 1u) result = result * base;
    m >>= 1u;
    if (m > 0) base = base * base;
  }
  return result;
}

namespace {

// Bareiss elimination in place. Returns the number of pivots; `sign` tracks
// row swaps.
// After step k, entry (i, j) for i, j > k equals the (k+1)-th order leading
// minor bordered by row i and column j, so every division below is exact.
std::size_t bareiss(IntegerMatrix& m, int& sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
      sign = -sign;
    }
    mpz_srcptr p = m(r, c).backend().data();
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_srcptr lead = m(i, c).backend().data();
      const bool lead_zero = mpz_sgn(lead) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr e = m(i, j).backend().data();
        if (lead_zero && mpz_sgn(e) == 0) continue;
        mpz_mul(e, e, p);
        if (!lead_zero) mpz_submul(e, lead, m(r, j).backend().data());
        if (mpz_cmp_ui(prev.backend().data(), 1) != 0)
          mpz_divexact(e, e, prev.backend().data());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

BigInt determinant(IntegerMatrix m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.order();
  if (n == 0) return 1;
  int sign = 1;
  if (bareiss(m, sign) < n) return 0;
  BigInt d = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

std::size_t rank(IntegerMatrix m) {
  // Fraction-free elimination where each updated row is divided by the gcd
  // of its entries. Scaling a row by a nonzero rational leaves the rank
  // unchanged and keeps entries small.
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  BigInt g;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Pivot: smallest magnitude, then fewest nonzeros to the right.
    std::size_t pivot = rows;
    std::size_t best_fill = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      std::size_t fill = 0;
      for (std::size_t j = c + 1; j < cols; ++j) fill += m(i, j) != 0;
      if (pivot == rows) {
        pivot = i;
        best_fill = fill;
        continue;
      }
      const int cmp = mpz_cmpabs(m(i, c).backend().data(), m(pivot, c).backend().data());
      if (cmp < 0 || (cmp == 0 && fill < best_fill)) {
        pivot = i;
        best_fill = fill;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    mpz_srcptr p = m(r, c).backend().data();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const BigInt lead = m(i, c);
      g = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr e = m(i, j).backend().data();
        mpz_mul(e, e, p);
        mpz_submul(e, lead.backend().data(), m(r, j).backend().data());
        if (mpz_sgn(e) != 0) mpz_gcd(g.backend().data(), g.backend().data(), e);
      }
      m(i, c) = 0;
      if (g > 1)
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_ptr e = m(i, j).backend().data();
          if (mpz_sgn(e) != 0) mpz_divexact(e, e, g.backend().data());
        }
    }
    ++r;
  }
  return r;
}

std::size_t nullity(const IntegerMatrix& m) {
  if (!m.is_square()) throw InvalidInput("nullity of a non-square matrix");
  return m.order() - rank(m);
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << (i + 1 == m.rows() ? "]]" : "]\n");
  }
  if (m.rows() == 0) out << "[]";
  return out.str();
}

}  // namespace simplex_forge

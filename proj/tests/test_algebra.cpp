#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simplex_forge/errors.hpp"
#include "simplex_forge/matrix.hpp"
#include "simplex_forge/numbers.hpp"
#include "simplex_forge/polynomial.hpp"

using namespace simplex_forge;

namespace {

IntegerMatrix from(const oracle::IntMat& a) {
  IntegerMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = a[i][j];
  return m;
}

oracle::IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range,
                             double density) {
  std::uniform_int_distribution<int> v(-range, range);
  std::bernoulli_distribution keep(density);
  oracle::IntMat a(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : a)
    for (auto& x : row)
      if (keep(rng)) x = v(rng);
  return a;
}

// rows beyond `r` are random combinations of the first r rows
oracle::IntMat low_rank(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  auto a = random_matrix(rng, n, n, 4, 0.8);
  std::uniform_int_distribution<int> c(-2, 2);
  for (std::size_t i = r; i < n; ++i) {
    std::fill(a[i].begin(), a[i].end(), 0);
    for (std::size_t k = 0; k < r; ++k) {
      const int ck = c(rng);
      for (std::size_t j = 0; j < n; ++j) a[i][j] += ck * a[k][j];
    }
  }
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(IntegerMatrix::identity(5)) == 1);
  CHECK(determinant(IntegerMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntegerMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntegerMatrix(0)) == 1);
  CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), InvalidInput);
}

TEST_CASE("determinant matches rational elimination") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 9;
    const auto a = random_matrix(rng, n, n, 9, t % 3 == 0 ? 0.3 : 0.9);
    CHECK(BigInt(determinant(from(a))) == numerator(oracle::det(a)));
  }
}

TEST_CASE("determinant needs arbitrary precision") {
  // 30x30 with entries near 10^6: the determinant has well over 100 digits
  std::mt19937_64 rng(5);
  auto a = random_matrix(rng, 30, 30, 1000000, 1.0);
  const BigInt d = determinant(from(a));
  CHECK(d == numerator(oracle::det(a)));
  CHECK(d.str().size() > 100);
}

TEST_CASE("rank and nullity") {
  CHECK(nullity(IntegerMatrix(3)) == 3);
  CHECK(nullity(IntegerMatrix::identity(4)) == 0);
  CHECK(rank(IntegerMatrix(2, 5)) == 0);
  CHECK(rank(IntegerMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 12;
    const std::size_t r = static_cast<std::size_t>(t) % n;
    const auto a = low_rank(rng, n, r);
    CHECK(rank(from(a)) == oracle::rank(a));
    CHECK(rank(from(a)) == oracle::rank_mod_p(a));
  }
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(rng, 3 + t % 5, 7 - t % 4, 3, 0.4);
    CHECK(rank(from(a)) == oracle::rank(a));
  }
}

TEST_CASE("matrix arithmetic") {
  IntegerMatrix a{{1, 2}, {3, 4}};
  CHECK(a * IntegerMatrix::identity(2) == a);
  CHECK(power(a, 0) == IntegerMatrix::identity(2));
  CHECK(power(a, 3) == a * a * a);
  CHECK(a + a == IntegerMatrix{{2, 4}, {6, 8}});
  CHECK(a.transposed() == IntegerMatrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5);
  CHECK(a.entry_sum() == 10);
  CHECK(a.row_sum(1) == 7);
  CHECK_FALSE(a.is_symmetric());
  CHECK(IntegerMatrix(2).is_zero());
  CHECK(a.block(1, 2, 0, 2) == IntegerMatrix{{3, 4}});
  CHECK_THROWS_AS(a * IntegerMatrix(3), InvalidInput);
  CHECK_THROWS_AS(a + IntegerMatrix(3), InvalidInput);
  CHECK_THROWS_AS((IntegerMatrix{{1, 2}, {3}}), InvalidInput);
}

TEST_CASE("polynomials") {
  const FPolynomial one = FPolynomial::constant(1);
  const FPolynomial t = FPolynomial::variable();
  CHECK(antiderivative(one) == t);
  CHECK(antiderivative(FPolynomial{1, 2}) == FPolynomial{0, 1, 1});
  CHECK(antiderivative(FPolynomial{1, 4, 4}) == FPolynomial{0, 1, 2, Rational(4, 3)});
  CHECK(power(FPolynomial{1, 2}, 3) == FPolynomial{1, 6, 12, 8});
  CHECK((FPolynomial{1, 1} - FPolynomial{1, 1}).is_zero());
  CHECK(FPolynomial{}.degree() == -1);
  CHECK(FPolynomial{1, 0, 0}.degree() == 0);
  CHECK(FPolynomial{1, 2}(Rational(-1, 2)) == 0);
  // p(-1 - t) for p = 1 + t
  CHECK(FPolynomial{1, 1}.compose(FPolynomial{-1, -1}) == FPolynomial{0, -1});
  CHECK((t * Rational(3)).coefficient(1) == 3);
  CHECK(t.coefficient(7) == 0);
  CHECK(FPolynomial{1, Rational(-1, 2), 3}.to_string() == "1 - 1/2*t + 3*t^2");
}

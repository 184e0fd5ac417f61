#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simplex_forge/errors.hpp"
#include "simplex_forge/generators.hpp"
#include "simplex_forge/homotopy.hpp"
#include "simplex_forge/valuations.hpp"

using namespace simplex_forge;
using FV = std::vector<std::int64_t>;

namespace {

HVector hv(std::initializer_list<long> xs) {
  HVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("f-vectors") {
  CHECK(f_vector(fixtures::triangle()) == FV{3, 3, 1});
  CHECK(f_vector(cross_polytope(4)) == FV{10, 40, 80, 80, 32});
  CHECK(f_vector(projective_plane()) == FV{15, 42, 28});
  CHECK(f_vector(SimplicialComplex{}).empty());
  for (const auto& g : fixtures::small_random(30, 10))
    CHECK(f_vector(g) == oracle::fvec(oracle::faces_of(g)));
}

TEST_CASE("f-functions") {
  CHECK(f_function(SimplicialComplex{}) == FPolynomial::constant(1));
  CHECK(f_function(fixtures::c4()) == FPolynomial{1, 4, 4});
  CHECK(f_function(fixtures::octahedron()) == power(FPolynomial{1, 2}, 3));
  // f(-1) = 1 - χ
  for (const auto& g : fixtures::small_random(20, 30))
    CHECK(f_function(g)(-1) == 1 - euler_characteristic(g));
}

TEST_CASE("h-vectors") {
  CHECK(h_vector(fixtures::c4()) == hv({1, 2, 1}));
  CHECK(h_vector(cross_polytope(3)) == hv({1, 4, 6, 4, 1}));
  CHECK(h_vector(fixtures::star_tree()) == hv({0, 3, 1}));
  CHECK_THROWS_AS(h_vector(SimplicialComplex{}), PreconditionViolation);
  for (const auto& g : fixtures::small_random(30, 50)) {
    const auto expected = oracle::hvec(f_vector(g));
    CHECK(h_vector(g) == HVector(expected.begin(), expected.end()));
  }
}

TEST_CASE("Dehn-Sommerville") {
  CHECK(is_dehn_sommerville(cross_polytope(3)));
  CHECK(is_dehn_sommerville(join(cross_polytope(3), fixtures::c4())));
  CHECK_FALSE(is_dehn_sommerville(whitney(Graph::from_edges({{1, 2}, {1, 3}, {1, 4}, {1, 5}}))));
  CHECK_THROWS_AS(is_dehn_sommerville(SimplicialComplex{}), PreconditionViolation);
  CHECK(satisfies_reflection_symmetry(fixtures::octahedron()));
  CHECK_FALSE(satisfies_reflection_symmetry(fixtures::triangle()));

  // palindromic h and reflection symmetry are the same condition
  for (const auto& g : fixtures::small_random(40, 70)) {
    const auto h = oracle::hvec(f_vector(g));
    const bool palindromic = std::equal(h.begin(), h.end(), h.rbegin());
    CHECK(is_dehn_sommerville(g) == palindromic);
    CHECK(satisfies_reflection_symmetry(g) == palindromic);
  }
  // spheres in several dimensions
  for (int d = 0; d <= 5; ++d) CHECK(is_dehn_sommerville(cross_polytope(d)));
}

TEST_CASE("residuals") {
  CHECK(ds_residual(cross_polytope(4), {0, -22, 33, -40, 45}) == 0);
  CHECK(ds_residual(fixtures::octahedron(), {0, 0, 0}) == 0);
  CHECK(ds_residual(fixtures::triangle(), {1, 0, 0}) == 3);
  CHECK(ds_residual(fixtures::triangle(), {1}) == 3);
  CHECK(ds_residual(fixtures::triangle(), {0, 0, 0, 0, 9}) == 0);
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(3, 0) == 0);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(stirling2(n, k) == oracle::stirling2(n, k));
}

TEST_CASE("barycentric operator") {
  CHECK(barycentric_operator(0) == IntegerMatrix{{1}});
  CHECK(barycentric_operator(1) == IntegerMatrix{{1, 1}, {0, 2}});
  const auto q2 = barycentric_operator(2);
  CHECK(simplex_forge::apply(barycentric_operator(1), FV{4, 4}) == std::vector<BigInt>{8, 8});
  CHECK(simplex_forge::apply(q2, FV{3, 3, 1}) == std::vector<BigInt>{7, 12, 6});
  CHECK_THROWS_AS(barycentric_operator(-1), InvalidInput);
  CHECK_THROWS_AS(simplex_forge::apply(barycentric_operator(1), FV{3, 3, 1}), InvalidInput);
  for (int d : {0, 1, 2, 4, 7}) CHECK(alternating_eigenvector_check(d));

  for (const auto& g : fixtures::small_random(15, 120)) {
    if (*g.dimension() > 3) continue;
    const auto q = simplex_forge::apply(barycentric_operator(*g.dimension()), f_vector(g));
    const auto chains = oracle::chain_counts(oracle::faces_of(g));
    REQUIRE(q.size() == chains.size());
    for (std::size_t k = 0; k < q.size(); ++k) CHECK(q[k] == chains[k]);
  }
}

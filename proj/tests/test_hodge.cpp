#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simplex_forge/energy.hpp"
#include "simplex_forge/errors.hpp"
#include "simplex_forge/generators.hpp"
#include "simplex_forge/hodge.hpp"

using namespace simplex_forge;
using Betti = std::vector<std::size_t>;

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(fixtures::point()) == IntegerMatrix(1));
  const auto e = fixtures::edge();
  // elements {1}, {2}, {1,2}: d{1} = -{1,2}, d{2} = +{1,2}
  CHECK(exterior_derivative(e) == IntegerMatrix{{0, 0, 0}, {0, 0, 0}, {-1, 1, 0}});
  const auto t = fixtures::triangle();
  const auto d = exterior_derivative(t);
  CHECK(d.rows() == 7);
  CHECK((d * d).is_zero());
  CHECK(derivative_block(t, 0).rows() == 3);
  CHECK(derivative_block(t, 0).cols() == 3);
  CHECK(derivative_block(t, 1).rows() == 1);

  for (const auto& g : fixtures::small_random(20, 2000)) {
    const auto dg = exterior_derivative(g);
    CHECK((dg * dg).is_zero());
    const auto faces = oracle::faces_of(g);
    for (int k = 0; k + 1 <= *g.dimension(); ++k) {
      const auto block = derivative_block(g, k);
      const auto expected = oracle::boundary(faces, static_cast<std::size_t>(k));
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) CHECK(block(r, c) == expected[r][c]);
    }
    // flipping orientations conjugates d and leaves d² = 0
    std::vector<bool> flip(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) flip[i] = (i * 7) % 3 == 0;
    const auto df = exterior_derivative(g, flip);
    CHECK((df * df).is_zero());
    CHECK(rank(df) == rank(dg));
  }
  CHECK_THROWS_AS(exterior_derivative(t, std::vector<bool>(3)), InvalidInput);
}

TEST_CASE("Hodge Laplacian") {
  CHECK(hodge_laplacian(fixtures::point()) == IntegerMatrix{{0}});
  CHECK(hodge_laplacian(fixtures::two_points()) == IntegerMatrix(2));
  const auto c4 = fixtures::c4();
  const auto l = hodge_laplacian(c4);
  CHECK(is_block_diagonal(c4, l));
  CHECK(l.is_symmetric());
  const auto l0 = laplacian_block(c4, l, 0);
  // graph Laplacian of the 4-cycle
  CHECK(l0 == IntegerMatrix{{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}});
  CHECK(nullity(l0) == 1);
  CHECK_FALSE(is_block_diagonal(c4, connection_laplacian(c4)));
}

TEST_CASE("Betti numbers") {
  CHECK(betti(fixtures::two_points()) == Betti{2});
  CHECK(betti(fixtures::c4()) == Betti{1, 1});
  CHECK(betti(fixtures::octahedron()) == Betti{1, 0, 1});
  CHECK(betti(projective_plane()) == Betti{1, 0, 0});
  CHECK(betti(cross_polytope(3)) == Betti{1, 0, 0, 1});
  CHECK(betti(SimplicialComplex{}).empty());
  CHECK(betti(fixtures::cube_skeleton()) == Betti{1, 5});
  for (const auto& g : fixtures::small_random(30, 2100)) {
    const auto b = betti(g);
    CHECK(b == oracle::betti(oracle::faces_of(g)));
    CHECK(betti_from_laplacian(g) == b);
  }
}

TEST_CASE("Euler-Poincare") {
  CHECK(euler_poincare_check(fixtures::c4()));
  CHECK(euler_poincare_check(fixtures::octahedron()));
  CHECK(euler_poincare_check(projective_plane()));
  for (const auto& g : fixtures::small_random(30, 2200)) CHECK(euler_poincare_check(g));
}

TEST_CASE("McKean-Singer") {
  CHECK(mckean_singer_check(fixtures::point(), 3));
  CHECK(mckean_singer_check(fixtures::c4(), 5));
  CHECK_THROWS_AS(mckean_singer_check(fixtures::c4(), 0), InvalidInput);
  const auto o = fixtures::octahedron();
  const auto st = laplacian_power_super_traces(o, 4);
  REQUIRE(st.size() == 5);
  CHECK(st[0] == 2);
  for (std::size_t m = 1; m < st.size(); ++m) CHECK(st[m] == 0);
  // blockwise super traces agree with the full matrix power
  for (const auto& g : fixtures::small_random(10, 2300)) {
    CHECK(mckean_singer_check(g, 3));
    const auto l = hodge_laplacian(g);
    const auto traces = laplacian_power_super_traces(g, 3);
    for (unsigned m = 0; m <= 3; ++m) CHECK(super_trace(g, power(l, m)) == traces[m]);
  }
}

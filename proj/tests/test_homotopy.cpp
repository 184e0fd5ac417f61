#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simplex_forge/errors.hpp"
#include "simplex_forge/generators.hpp"
#include "simplex_forge/homotopy.hpp"
#include "simplex_forge/valuations.hpp"

using namespace simplex_forge;
using FV = std::vector<std::int64_t>;

namespace {

const HomotopyOptions bare{5000, false};

// every step deletes a star whose link was certified contractible, ending at a point
bool witness_valid(const SimplicialComplex& g, const HomotopyVerdict& v) {
  if (!v.contractible) return false;
  SimplicialComplex current = g;
  for (const auto& step : v.witness) {
    if (!current.contains(step.element) || !step.link || !step.link->contractible) return false;
    const auto link = link_complex(current, step.element);
    if (!witness_valid(link, *step.link)) return false;
    current = delete_star(current, step.element);
  }
  return current.size() == 1;
}

bool is_tree(const SimplicialComplex& g) {
  const auto f = f_vector(g);
  if (f.empty() || f.size() > 2) return false;
  const std::int64_t edges = f.size() == 2 ? f[1] : 0;
  return edges == f[0] - 1 && oracle::betti(oracle::faces_of(g))[0] == 1;
}

}  // namespace

TEST_CASE("delete_star") {
  auto t = fixtures::triangle();
  auto rest = delete_star(t, Simplex{1});
  CHECK(rest == closure({{2, 3}}));
  CHECK(euler_characteristic(rest) == 1);
  auto path = delete_star(fixtures::c4(), Simplex{1});
  CHECK(path == closure({{2, 3}, {3, 4}}));
  CHECK(euler_characteristic(path) == 1);
  CHECK(delete_star(t, Simplex{1, 2, 3}).size() == 6);
  CHECK_THROWS_AS(delete_star(t, Simplex{9}), NotAnElement);
}

TEST_CASE("contractibility examples") {
  CHECK(is_contractible(fixtures::point()).contractible);
  CHECK(is_contractible(fixtures::point()).witness.empty());
  CHECK_FALSE(is_contractible(SimplicialComplex{}).contractible);
  CHECK_FALSE(is_contractible(fixtures::c4(), bare).contractible);
  CHECK_FALSE(is_contractible(fixtures::two_points(), bare).contractible);
  CHECK_FALSE(is_contractible(fixtures::octahedron(), bare).contractible);
  const auto t = is_contractible(fixtures::triangle(), bare);
  CHECK(witness_valid(fixtures::triangle(), t));
  CHECK(replay(fixtures::triangle(), t).size() == 1);
  CHECK(is_contractible(fixtures::star_tree(), bare).contractible);
}

TEST_CASE("every unit ball is contractible") {
  for (const auto& g : fixtures::small_random(12, 300)) {
    HomotopySolver solver(bare);
    for (const auto& x : g) {
      const auto ball = subcomplex(unit_ball(g, x));
      const auto v = solver.contractible(ball);
      CHECK(v->contractible);
      CHECK(witness_valid(ball, *v));
    }
  }
}

TEST_CASE("contractible complexes have the homology of a point") {
  int contractible = 0, not_contractible = 0;
  // the bare recursion is exponential on non-contractible inputs, so it only
  // sees the small ones
  for (const auto& g : fixtures::small_random(60, 400)) {
    if (g.size() > 80) continue;
    const bool small = g.size() <= 24;
    const auto v = is_contractible(g, small ? bare : HomotopyOptions{});
    const auto b = oracle::betti(oracle::faces_of(g));
    if (v.contractible) {
      ++contractible;
      CHECK(witness_valid(g, v));
      CHECK(euler_characteristic(g) == 1);
      CHECK(b[0] == 1);
      for (std::size_t k = 1; k < b.size(); ++k) CHECK(b[k] == 0);
    } else {
      ++not_contractible;
    }
    // pruning is only a shortcut
    if (small) CHECK(is_contractible(g).contractible == v.contractible);
  }
  CHECK(contractible > 0);
  CHECK(not_contractible > 0);
}

TEST_CASE("one-dimensional complexes are contractible exactly when they are trees") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    // sparse graphs are mostly triangle free; skip the others
    const auto g = whitney(random_graph(n, n - 1 + static_cast<std::int64_t>(seed % 3) - 1, seed));
    if (g.empty() || *g.dimension() > 1) continue;
    CHECK(is_contractible(g, bare).contractible == is_tree(g));
  }
}

TEST_CASE("manifolds") {
  CHECK(is_manifold(fixtures::octahedron(), 2));
  CHECK(is_manifold(fixtures::c4(), 1));
  CHECK_FALSE(is_manifold(fixtures::cube_skeleton(), 1));
  CHECK_FALSE(is_manifold(fixtures::star_tree(), 1));
  CHECK_FALSE(is_manifold(fixtures::triangle(), 2));
  CHECK_FALSE(is_manifold(fixtures::c4(), 2));
  CHECK(is_manifold(projective_plane(), 2));
  CHECK(is_manifold(named_skeleton("cycle", 7), 1));
  // a manifold that is not a sphere
  CHECK_FALSE(is_sphere(projective_plane(), 2));
}

TEST_CASE("spheres") {
  CHECK(is_sphere(SimplicialComplex{}, -1));
  CHECK(is_sphere(fixtures::two_points(), 0));
  CHECK(is_sphere(fixtures::octahedron(), 2));
  CHECK(is_sphere(cross_polytope(2), 2));
  CHECK(is_sphere(fixtures::c4(), 1));
  CHECK_FALSE(is_sphere(fixtures::c4(), 2));
  CHECK_FALSE(is_sphere(fixtures::point(), 0));
  CHECK_FALSE(is_sphere(disjoint_union(fixtures::c4(), fixtures::c4()), 1));
  for (int d = 0; d <= 3; ++d) {
    const auto s = cross_polytope(d);
    CHECK(is_sphere(s, d));
    const auto b = oracle::betti(oracle::faces_of(s));
    if (d == 0) {
      CHECK(b == std::vector<std::size_t>{2});
    } else {
      CHECK(b.front() == 1);
      CHECK(b.back() == 1);
    }
  }
}

TEST_CASE("Euler gem") {
  CHECK(euler_gem_check(cross_polytope(2), 2));
  CHECK(euler_characteristic(cross_polytope(2)) == 2);
  CHECK(euler_gem_check(cross_polytope(3), 3));
  CHECK(euler_characteristic(cross_polytope(3)) == 0);
  CHECK(euler_gem_check(fixtures::two_points(), 0));
  CHECK(euler_gem_check(SimplicialComplex{}, -1));
  CHECK_THROWS_AS(euler_gem_check(fixtures::triangle(), 2), PreconditionViolation);
  CHECK_THROWS_AS(euler_gem_check(projective_plane(), 2), PreconditionViolation);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(is_contractible(cross_polytope(3), HomotopyOptions{10, true}), TooLarge);
}

TEST_CASE("solver can be shared between threads") {
  HomotopySolver solver(bare);
  const auto g = cross_polytope(2);
  std::vector<int> results(4, -1);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = solver.sphere(g, 2) ? 1 : 0; });
  for (auto& t : threads) t.join();
  for (int r : results) CHECK(r == 1);
}

TEST_CASE("barycentric refinement") {
  CHECK(f_vector(barycentric_refinement(fixtures::point())) == FV{1});
  CHECK(f_vector(barycentric_refinement(fixtures::c4())) == FV{8, 8});
  CHECK(is_sphere(barycentric_refinement(fixtures::c4()), 1));
  CHECK(f_vector(barycentric_refinement(fixtures::triangle())) == FV{7, 12, 6});
  for (const auto& g : fixtures::small_random(10, 600)) {
    const auto chains = oracle::chain_counts(oracle::faces_of(g));
    CHECK(f_vector(barycentric_refinement(g)) == chains);
    CHECK(euler_characteristic(barycentric_refinement(g)) == euler_characteristic(g));
  }
}

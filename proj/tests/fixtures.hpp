// Small complexes written out by hand, and seeded random Whitney complexes.
#ifndef SIMPLEX_FORGE_TESTS_FIXTURES_HPP
#define SIMPLEX_FORGE_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/generators.hpp"

namespace fixtures {

using simplex_forge::SimplicialComplex;
using simplex_forge::closure;

inline SimplicialComplex point() { return closure({{1}}); }
inline SimplicialComplex two_points() { return closure({{1}, {2}}); }
inline SimplicialComplex edge() { return closure({{1, 2}}); }
inline SimplicialComplex triangle() { return closure({{1, 2, 3}}); }
inline SimplicialComplex c4() { return closure({{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

// poles 5,6 over the square 1-2-3-4
inline SimplicialComplex octahedron() {
  return closure({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5},
                  {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {1, 4, 6}});
}

// center 1, leaves 2..5
inline SimplicialComplex star_tree() { return closure({{1, 2}, {1, 3}, {1, 4}, {1, 5}}); }

inline SimplicialComplex cube_skeleton() {
  return closure({{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4},
                  {3, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
}

inline SimplicialComplex random_whitney(int n, std::int64_t m, std::uint64_t seed) {
  return simplex_forge::whitney(simplex_forge::random_graph(n, m, seed));
}

// a spread of small random complexes for property tests
inline std::vector<SimplicialComplex> small_random(std::size_t count, std::uint64_t seed0) {
  std::vector<SimplicialComplex> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 6 + static_cast<int>(i % 5);
    const std::int64_t m = n * (n - 1) / 2 * (3 + static_cast<std::int64_t>(i % 4)) / 8;
    out.push_back(random_whitney(n, m, seed0 + i));
  }
  return out;
}

}  // namespace fixtures

#endif

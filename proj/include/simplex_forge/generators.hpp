/**
 * Ways to build complexes: the Whitney (clique) complex of a graph, the join
 * and disjoint-union combinators, named examples and seeded random graphs.
 */
#ifndef SIMPLEX_FORGE_GENERATORS_HPP
#define SIMPLEX_FORGE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "simplex_forge/complex.hpp"

namespace simplex_forge {

/// Simple undirected graph on positive labels.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInput for loops, non-positive labels or edges whose
  /// endpoints are not listed as vertices. Repeated edges collapse.
  Graph(std::set<Label> vertices, const std::vector<std::pair<Label, Label>>& edges);
  /// Vertex set is taken to be the set of endpoints.
  static Graph from_edges(const std::vector<std::pair<Label, Label>>& edges);

  void add_vertex(Label v);
  void add_edge(Label a, Label b);

  const std::set<Label>& vertices() const noexcept { return vertices_; }
  /// Edges as (smaller, larger) pairs.
  const std::set<std::pair<Label, Label>>& edges() const noexcept { return edges_; }
  bool adjacent(Label a, Label b) const;

  /// Subgraph induced on the given vertices (which must be vertices of this graph).
  Graph induced(const std::set<Label>& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Label> vertices_;
  std::set<std::pair<Label, Label>> edges_;
};

/// Complex of all vertex sets of complete subgraphs.
SimplicialComplex whitney(const Graph& g);

/// G + H: G, a copy of H with labels shifted by max label of G, and all unions
/// x ∪ y across the two. f-functions multiply.
SimplicialComplex join(const SimplicialComplex& g, const SimplicialComplex& h);

/// Join with the two-point complex.
SimplicialComplex suspension(const SimplicialComplex& g);

/// G together with a copy of H whose labels are shifted past G's.
SimplicialComplex disjoint_union(const SimplicialComplex& g, const SimplicialComplex& h);

/// {{1},{2}}
SimplicialComplex two_points();

/// Iterated join of d+1 two-point complexes: the boundary of the
/// (d+1)-dimensional cross-polytope, a d-sphere. d = -1 gives the empty complex.
SimplicialComplex cross_polytope(int d);

/// Whitney complex of a fixed 15-vertex, 42-edge graph triangulating the real
/// projective plane; f-vector (15, 42, 28).
SimplicialComplex projective_plane();
Graph projective_plane_graph();

/// One-dimensional named complexes: "cube", "dodecahedron", "cycle" (n >= 3
/// vertices) and "star" (n >= 2 vertices: one center and n-1 leaves).
/// Throws InvalidInput for unknown names or bad parameters.
SimplicialComplex named_skeleton(std::string_view name, std::optional<int> n = std::nullopt);
Graph named_graph(std::string_view name, std::optional<int> n = std::nullopt);

/**
 * Uniform random graph with exactly m edges on vertices 1..n (the G(n, m)
 * model). The generator is std::mt19937_64 seeded with `seed`; the m edges
 * are the first m entries of a partial Fisher-Yates shuffle of the
 * lexicographically ordered pair list, drawn with
 * std::uniform_int_distribution. Results are reproducible within one build.
 */
Graph random_graph(int n, std::int64_t m, std::uint64_t seed);

}  // namespace simplex_forge

#endif

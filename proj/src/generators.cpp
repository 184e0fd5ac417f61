#include "simplex_forge/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

// ------------------------------------------------------------------ Graph --

Graph::Graph(std::set<Label> vertices, const std::vector<std::pair<Label, Label>>& edges) {
  for (Label v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) {
    if (!vertices_.contains(a) || !vertices_.contains(b))
      throw InvalidInput("edge endpoint is not a vertex");
    add_edge(a, b);
  }
}

Graph Graph::from_edges(const std::vector<std::pair<Label, Label>>& edges) {
  Graph g;
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_vertex(Label v) {
  if (v <= 0) throw InvalidInput("vertex labels must be positive");
  vertices_.insert(v);
}

void Graph::add_edge(Label a, Label b) {
  if (a == b) throw InvalidInput("loops are not allowed");
  add_vertex(a);
  add_vertex(b);
  edges_.emplace(std::min(a, b), std::max(a, b));
}

bool Graph::adjacent(Label a, Label b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

Graph Graph::induced(const std::set<Label>& keep) const {
  Graph out;
  for (Label v : keep) {
    if (!vertices_.contains(v)) throw InvalidInput("induced subgraph on a non-vertex");
    out.add_vertex(v);
  }
  for (const auto& [a, b] : edges_)
    if (keep.contains(a) && keep.contains(b)) out.add_edge(a, b);
  return out;
}

// ----------------------------------------------------------- combinators --

SimplicialComplex whitney(const Graph& g) {
  std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
  std::vector<std::vector<Label>> higher(labels.size());
  for (const auto& [a, b] : g.edges()) {
    auto ia = std::lower_bound(labels.begin(), labels.end(), a) - labels.begin();
    higher[static_cast<std::size_t>(ia)].push_back(b);
  }

  std::vector<Simplex> cliques;
  // Grow each clique only by common neighbours above its largest vertex, so
  // every clique is produced exactly once.
  std::vector<Label> current;
  auto grow = [&](auto&& self, const std::vector<Label>& candidates) -> void {
    cliques.emplace_back(current);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Label v = candidates[i];
      const auto iv = static_cast<std::size_t>(
          std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
      std::vector<Label> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (std::binary_search(higher[iv].begin(), higher[iv].end(), candidates[j]))
          next.push_back(candidates[j]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    current = {labels[i]};
    grow(grow, higher[i]);
  }
  return SimplicialComplex::from_elements(std::move(cliques));
}

SimplicialComplex join(const SimplicialComplex& g, const SimplicialComplex& h) {
  if (g.empty()) return h;
  if (h.empty()) return g;
  const Label offset = g.max_label();
  std::vector<Simplex> shifted;
  shifted.reserve(h.size());
  for (const Simplex& y : h) shifted.push_back(y.shifted(offset));

  std::vector<Simplex> out(g.begin(), g.end());
  out.reserve(g.size() + h.size() + g.size() * h.size());
  out.insert(out.end(), shifted.begin(), shifted.end());
  for (const Simplex& x : g)
    for (const Simplex& y : shifted) out.push_back(x.united(y));
  return SimplicialComplex::from_elements(std::move(out));
}

SimplicialComplex two_points() { return closure({Simplex{1}, Simplex{2}}); }

SimplicialComplex suspension(const SimplicialComplex& g) { return join(g, two_points()); }

SimplicialComplex disjoint_union(const SimplicialComplex& g, const SimplicialComplex& h) {
  const Label offset = g.max_label();
  std::vector<Simplex> out(g.begin(), g.end());
  for (const Simplex& y : h) out.push_back(y.shifted(offset));
  return SimplicialComplex::from_elements(std::move(out));
}

SimplicialComplex cross_polytope(int d) {
  if (d < -1) throw InvalidInput("cross-polytope dimension must be >= -1");
  SimplicialComplex g;
  for (int i = 0; i <= d; ++i) g = join(g, two_points());
  return g;
}

// ------------------------------------------------------- named complexes --

Graph projective_plane_graph() {
  return Graph::from_edges({{1, 5},   {1, 7},   {1, 2},   {1, 4},   {1, 8},   {1, 9},
                            {2, 6},   {2, 9},   {2, 3},   {2, 5},   {2, 10},  {4, 3},
                            {4, 5},   {4, 11},  {4, 7},   {4, 12},  {8, 7},   {8, 14},
                            {8, 9},   {8, 15},  {9, 10},  {9, 15},  {3, 7},   {3, 10},
                            {3, 6},   {3, 11},  {5, 6},   {5, 12},  {5, 13},  {10, 11},
                            {10, 15}, {6, 7},   {6, 13},  {6, 14},  {11, 12}, {11, 15},
                            {7, 14},  {12, 13}, {12, 15}, {13, 14}, {13, 15}, {14, 15}});
}

SimplicialComplex projective_plane() { return whitney(projective_plane_graph()); }

Graph named_graph(std::string_view name, std::optional<int> n) {
  if (name == "cube") {
    // vertices are 1 + (3-bit coordinates); edges flip one bit
    return Graph::from_edges({{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4},
                              {3, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
  }
  if (name == "dodecahedron") {
    // generalized Petersen graph GP(10,2): outer 10-cycle 1..10, inner
    // pentagrams on 11..20, spokes i -- i+10
    return Graph::from_edges({{1, 2},   {1, 10},  {1, 11},  {2, 3},   {2, 12},  {3, 4},
                              {3, 13},  {4, 5},   {4, 14},  {5, 6},   {5, 15},  {6, 7},
                              {6, 16},  {7, 8},   {7, 17},  {8, 9},   {8, 18},  {9, 10},
                              {9, 19},  {10, 20}, {11, 13}, {11, 19}, {12, 14}, {12, 20},
                              {13, 15}, {14, 16}, {15, 17}, {16, 18}, {17, 19}, {18, 20}});
  }
  if (name == "cycle") {
    if (!n || *n < 3) throw InvalidInput("cycle needs n >= 3 vertices");
    Graph g;
    for (int i = 1; i <= *n; ++i) g.add_edge(i, i % *n + 1);
    return g;
  }
  if (name == "star") {
    if (!n || *n < 2) throw InvalidInput("star needs n >= 2 vertices");
    Graph g;
    for (int i = 2; i <= *n; ++i) g.add_edge(1, i);
    return g;
  }
  throw InvalidInput("unknown named complex '" + std::string(name) + "'");
}

SimplicialComplex named_skeleton(std::string_view name, std::optional<int> n) {
  return whitney(named_graph(name, n));
}

// ----------------------------------------------------------------- random --

Graph random_graph(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs)
    throw InvalidInput("edge count " + std::to_string(m) + " out of range [0, " +
                       std::to_string(pairs) + "]");
  std::vector<std::pair<Label, Label>> all;
  all.reserve(static_cast<std::size_t>(pairs));
  for (Label a = 1; a <= n; ++a)
    for (Label b = a + 1; b <= n; ++b) all.emplace_back(a, b);

  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::int64_t> pick(i, pairs - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(pick(rng))]);
  }
  Graph g;
  for (Label v = 1; v <= n; ++v) g.add_vertex(v);
  for (std::int64_t i = 0; i < m; ++i) g.add_edge(all[static_cast<std::size_t>(i)].first,
                                                  all[static_cast<std::size_t>(i)].second);
  return g;
}

}  // namespace simplex_forge

#include "simplex_forge/curvature_morse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simplex_forge/errors.hpp"
#include "simplex_forge/valuations.hpp"

namespace simplex_forge {

// -------------------------------------------------------- VertexFunction --

VertexFunction::VertexFunction(const SimplicialComplex& g, std::map<Label, Rational> values)
    : values_(std::move(values)) {
  const auto labels = g.vertex_labels();
  if (values_.size() != labels.size())
    throw InvalidInput("vertex function must assign exactly one value per vertex");
  for (Label v : labels)
    if (!values_.contains(v))
      throw InvalidInput("vertex " + std::to_string(v) + " has no value");
  const auto [lo, hi] = g.dimension_range(1);
  for (std::size_t i = lo; i < hi; ++i) {
    const Simplex& e = g[i];
    if (values_.at(e.front()) == values_.at(e.back()))
      throw InvalidInput("function is not locally injective on edge " + e.to_string());
  }
}

VertexFunction VertexFunction::from_sequence(const SimplicialComplex& g,
                                             const std::vector<Rational>& values) {
  const auto labels = g.vertex_labels();
  if (values.size() != labels.size())
    throw InvalidInput("expected " + std::to_string(labels.size()) + " vertex values, got " +
                       std::to_string(values.size()));
  std::map<Label, Rational> m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(labels[i], values[i]);
  return VertexFunction(g, std::move(m));
}

VertexFunction VertexFunction::random_ordering(const SimplicialComplex& g, std::mt19937_64& rng) {
  std::vector<long> ranks(g.vertex_count());
  std::iota(ranks.begin(), ranks.end(), 1L);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return from_sequence(g, std::vector<Rational>(ranks.begin(), ranks.end()));
}

VertexFunction VertexFunction::negated() const {
  VertexFunction out;
  for (const auto& [v, value] : values_) out.values_.emplace(v, -value);
  return out;
}

std::pair<Rational, Rational> VertexFunction::range_on(const Simplex& x) const {
  Rational lo = values_.at(x.front());
  Rational hi = lo;
  for (Label v : x.vertices()) {
    const Rational& value = values_.at(v);
    if (value < lo) lo = value;
    if (value > hi) hi = value;
  }
  return {lo, hi};
}

// -------------------------------------------------------------- curvature --

namespace {

// f-vector of the link S(v) of a vertex, read off the simplex set directly.
FVector link_f_vector(const SimplicialComplex& g, Label v) {
  FVector f;
  const SimplexSet s = unit_sphere(g, Simplex{v});
  for (std::size_t i : s.indices()) {
    const auto k = static_cast<std::size_t>(g[i].dimension());
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

}  // namespace

CurvatureProfile levitt_curvature(const SimplicialComplex& g) {
  CurvatureProfile out;
  out.total = 0;
  for (Label v : g.vertex_labels()) {
    const FVector f = link_f_vector(g, v);
    Rational k = 1;  // k = -1 term: (-1)^0 f_{-1} / 1
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Rational term(f[i], static_cast<long>(i + 2));
      if (i % 2 == 0)
        k -= term;
      else
        k += term;
    }
    out.total += k;
    out.per_vertex.emplace(v, std::move(k));
  }
  return out;
}

CurvatureProfile levitt_curvature_from_antiderivatives(const SimplicialComplex& g) {
  CurvatureProfile out;
  out.total = 0;
  for (Label v : g.vertex_labels()) {
    Rational k = -antiderivative(f_function(link_f_vector(g, v)))(Rational(-1));
    out.total += k;
    out.per_vertex.emplace(v, std::move(k));
  }
  return out;
}

bool gauss_bonnet_polynomial_check(const SimplicialComplex& g) {
  FPolynomial sum;
  for (Label v : g.vertex_labels()) sum += antiderivative(f_function(link_f_vector(g, v)));
  return f_function(g) - FPolynomial::constant(1) == sum;
}

// ------------------------------------------------------ Poincaré-Hopf --

SimplexSet lower_link(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  const SimplexSet s = unit_sphere(g, Simplex{v});
  ElementBits bits(g.size());
  const Rational& level = f(v);
  for (std::size_t i : s.indices())
    if (f.range_on(g[i]).second < level) bits.set(i);
  return SimplexSet(g, std::move(bits));
}

std::int64_t ph_index_link_form(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  return 1 - euler_characteristic(lower_link(g, f, v));
}

std::int64_t ph_index_max_form(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  const SimplexSet u = star(g, Simplex{v});
  std::int64_t acc = 0;
  for (std::size_t i : u.indices())
    if (f.range_on(g[i]).second == f(v)) acc += g[i].weight();
  return acc;
}

std::int64_t ph_index(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  const std::int64_t a = ph_index_link_form(g, f, v);
  const std::int64_t b = ph_index_max_form(g, f, v);
  if (a != b)
    throw InternalInconsistency("index forms disagree at vertex " + std::to_string(v) + ": " +
                                std::to_string(a) + " vs " + std::to_string(b));
  return a;
}

bool poincare_hopf_check(const SimplicialComplex& g, const VertexFunction& f) {
  std::int64_t sum = 0;
  for (Label v : g.vertex_labels()) sum += ph_index(g, f, v);
  return sum == euler_characteristic(g);
}

Rational symmetric_index(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  const VertexFunction minus = f.negated();
  return Rational(ph_index(g, f, v) + ph_index(g, minus, v), 2);
}

SimplexSet mixed_link(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  const SimplexSet s = unit_sphere(g, Simplex{v});
  ElementBits bits(g.size());
  const Rational& level = f(v);
  for (std::size_t i : s.indices()) {
    const auto [lo, hi] = f.range_on(g[i]);
    if (lo < level && level < hi) bits.set(i);
  }
  return SimplexSet(g, std::move(bits));
}

SimplicialComplex center_manifold(const SimplicialComplex& g, const VertexFunction& f, Label v) {
  return order_complex(g, mixed_link(g, f, v).indices());
}

SimplicialComplex level_set(const SimplicialComplex& g, const VertexFunction& f,
                            const Rational& c) {
  for (const auto& [v, value] : f.values())
    if (value == c)
      throw InvalidInput("level " + to_string(c) + " is the value at vertex " + std::to_string(v));
  std::vector<std::size_t> crossing;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [lo, hi] = f.range_on(g[i]);
    if (lo < c && c < hi) crossing.push_back(i);
  }
  return order_complex(g, std::move(crossing));
}

Rational midpoint_level(const VertexFunction& f, std::size_t k) {
  std::set<Rational> distinct;
  for (const auto& [v, value] : f.values()) distinct.insert(value);
  if (k + 1 >= distinct.size()) throw InvalidInput("no gap between consecutive values at that rank");
  auto it = std::next(distinct.begin(), static_cast<std::ptrdiff_t>(k));
  const Rational a = *it;
  const Rational b = *std::next(it);
  return (a + b) / 2;
}

bool sard_check(const SimplicialComplex& g, const VertexFunction& f, const Rational& c,
                HomotopyOptions options) {
  if (g.empty()) throw PreconditionViolation("level sets of the empty complex");
  const int d = *g.dimension();
  HomotopySolver solver(options);
  if (!solver.manifold(g, d))
    throw PreconditionViolation("Sard check requires a " + std::to_string(d) + "-manifold");
  const SimplicialComplex level = level_set(g, f, c);
  return level.empty() || solver.manifold(level, d - 1);
}

// ------------------------------------------------- index expectation --

IndexExpectation index_expectation(const SimplicialComplex& g, std::uint64_t trials,
                                   std::uint64_t seed) {
  if (trials == 0) throw InvalidInput("index expectation needs at least one trial");
  const auto labels = g.vertex_labels();
  const std::size_t nv = labels.size();
  // each element as positions into `labels`
  std::vector<std::vector<std::size_t>> positions;
  positions.reserve(g.size());
  for (const Simplex& x : g) {
    std::vector<std::size_t> p;
    for (Label v : x.vertices())
      p.push_back(static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) -
                                           labels.begin()));
    positions.push_back(std::move(p));
  }

  std::vector<std::int64_t> totals(nv, 0);
  std::vector<std::size_t> rank(nv);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  auto accumulate = [&] {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& p = positions[i];
      std::size_t top = p.front();
      for (std::size_t q : p)
        if (rank[q] > rank[top]) top = q;
      totals[top] += g[i].weight();
    }
  };

  IndexExpectation out;
  if (nv <= kExhaustiveVertexLimit) {
    out.exhaustive = true;
    do {
      accumulate();
      ++out.samples;
    } while (std::next_permutation(rank.begin(), rank.end()));
  } else {
    out.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::shuffle(rank.begin(), rank.end(), rng);
      accumulate();
      ++out.samples;
    }
  }
  for (std::size_t i = 0; i < nv; ++i)
    out.per_vertex.emplace(labels[i],
                           Rational(totals[i]) / Rational(static_cast<long>(out.samples)));
  return out;
}

}  // namespace simplex_forge

/**
 * Levitt curvature and Gauss-Bonnet, Poincaré-Hopf indices of vertex
 * functions, symmetric indices and center manifolds, discrete level sets, and
 * index expectation over random vertex orderings.
 */
#ifndef SIMPLEX_FORGE_CURVATURE_MORSE_HPP
#define SIMPLEX_FORGE_CURVATURE_MORSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/homotopy.hpp"
#include "simplex_forge/numbers.hpp"
#include "simplex_forge/polynomial.hpp"

namespace simplex_forge {

/**
 * Rational values on the vertices of a complex, with f(v) ≠ f(w) whenever
 * {v, w} is an edge.
 */
class VertexFunction {
 public:
  /// Throws InvalidInput if a vertex of g has no value, or if the values are
  /// not locally injective (the message names the offending edge).
  VertexFunction(const SimplicialComplex& g, std::map<Label, Rational> values);

  /// values[i] is assigned to the i-th vertex in ascending label order.
  static VertexFunction from_sequence(const SimplicialComplex& g, const std::vector<Rational>& values);
  /// A uniformly random ordering: a random permutation of 1..|V|.
  static VertexFunction random_ordering(const SimplicialComplex& g, std::mt19937_64& rng);

  const Rational& operator()(Label v) const { return values_.at(v); }
  const std::map<Label, Rational>& values() const noexcept { return values_; }

  VertexFunction negated() const;

  /// min and max of f over the vertices of x.
  std::pair<Rational, Rational> range_on(const Simplex& x) const;

 private:
  VertexFunction() = default;
  std::map<Label, Rational> values_;
};

struct CurvatureProfile {
  std::map<Label, Rational> per_vertex;
  Rational total;
};

/// K(v) = Σ_{k=-1}^{d} (-1)^{k+1} f_k(S(v)) / (k+2), f_{-1} = 1.
CurvatureProfile levitt_curvature(const SimplicialComplex& g);

/// K(v) by the polynomial route, -F_{S(v)}(-1).
CurvatureProfile levitt_curvature_from_antiderivatives(const SimplicialComplex& g);

/// f_G(t) - 1 == Σ_v F_{S(v)}(t) as an exact polynomial identity.
bool gauss_bonnet_polynomial_check(const SimplicialComplex& g);

/// S⁻_f(v): elements of S(v) on which every value of f is below f(v).
SimplexSet lower_link(const SimplicialComplex& g, const VertexFunction& f, Label v);

/// i_f(v) = 1 - χ(S⁻_f(v)).
std::int64_t ph_index_link_form(const SimplicialComplex& g, const VertexFunction& f, Label v);
/// i_f(v) = Σ of w(x) over the x ∋ v on which v carries the maximum of f.
std::int64_t ph_index_max_form(const SimplicialComplex& g, const VertexFunction& f, Label v);
/// Both forms; throws InternalInconsistency if they disagree.
std::int64_t ph_index(const SimplicialComplex& g, const VertexFunction& f, Label v);

/// Σ_v i_f(v) == χ(G).
bool poincare_hopf_check(const SimplicialComplex& g, const VertexFunction& f);

/// (i_f(v) + i_{-f}(v)) / 2
Rational symmetric_index(const SimplicialComplex& g, const VertexFunction& f, Label v);

/// Elements of S(v) on which f - f(v) changes sign.
SimplexSet mixed_link(const SimplicialComplex& g, const VertexFunction& f, Label v);

/// Order complex of mixed_link(g, f, v): the center manifold C_f(v), with
/// vertices labeled by canonical index in g plus one.
SimplicialComplex center_manifold(const SimplicialComplex& g, const VertexFunction& f, Label v);

/// {f = c} realized in the Barycentric refinement: the order complex of the
/// elements x with min f|x < c < max f|x. Throws InvalidInput if c is a
/// vertex value.
SimplicialComplex level_set(const SimplicialComplex& g, const VertexFunction& f, const Rational& c);

/// Midpoint between the k-th and (k+1)-th smallest distinct values.
Rational midpoint_level(const VertexFunction& f, std::size_t k);

/**
 * True iff level_set(g, f, c) is empty or a (d-1)-manifold, d = dim(g).
 * Throws PreconditionViolation unless g is a d-manifold, InvalidInput if c is
 * a vertex value.
 */
bool sard_check(const SimplicialComplex& g, const VertexFunction& f, const Rational& c,
                HomotopyOptions options = {});

struct IndexExpectation {
  std::map<Label, Rational> per_vertex;
  bool exhaustive = false;
  std::uint64_t samples = 0;  ///< orderings averaged over
  std::optional<std::uint64_t> seed;
};

/// Vertex counts up to this use exhaustive enumeration of all orderings.
inline constexpr std::size_t kExhaustiveVertexLimit = 8;

/**
 * Average of i_f(v) over vertex orderings f: all |V|! of them when
 * |V| <= kExhaustiveVertexLimit, else `trials` uniformly random ones drawn
 * from std::mt19937_64(seed).
 */
IndexExpectation index_expectation(const SimplicialComplex& g, std::uint64_t trials,
                                   std::uint64_t seed);

}  // namespace simplex_forge

#endif

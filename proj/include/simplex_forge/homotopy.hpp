/**
 * Contractibility, spheres and manifolds, defined recursively through unit
 * spheres:
 *
 *   - the one-point complex is contractible; G is contractible if some x has
 *     both S(x) and G \ U(x) contractible;
 *   - the empty complex is the (-1)-sphere; G is a d-manifold if every S(x)
 *     is a (d-1)-sphere, and a d-sphere if moreover some G \ U(x) is
 *     contractible.
 *
 * The recursion is exhaustive (candidates in canonical order) with a memo
 * keyed on the exact labeled element set.
 */
#ifndef SIMPLEX_FORGE_HOMOTOPY_HPP
#define SIMPLEX_FORGE_HOMOTOPY_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "simplex_forge/complex.hpp"

namespace simplex_forge {

struct HomotopyVerdict;

/// Remove U(element); `link` certifies that S(element) was contractible.
struct ReductionStep {
  Simplex element;
  std::shared_ptr<const HomotopyVerdict> link;
};

struct HomotopyVerdict {
  bool contractible = false;
  /// When contractible: successive star deletions taking the complex to a
  /// single point. Empty for the one-point complex.
  std::vector<ReductionStep> witness;
};

struct HomotopyOptions {
  /// Inputs with more elements are refused with TooLarge.
  std::size_t max_elements = 5000;
  /// Skip candidates whose Euler characteristic rules them out (a
  /// contractible complex has χ = 1). Turn off to run the bare recursion.
  bool prune_by_euler_characteristic = true;
};

/**
 * Holds the memo tables for one family of queries. Safe to share between
 * threads; lookups and inserts are serialized.
 */
class HomotopySolver {
 public:
  explicit HomotopySolver(HomotopyOptions options = {});

  std::shared_ptr<const HomotopyVerdict> contractible(const SimplicialComplex& g);
  bool manifold(const SimplicialComplex& g, int d);
  bool sphere(const SimplicialComplex& g, int d);

  const HomotopyOptions& options() const noexcept { return options_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Simplex>& key) const noexcept;
  };
  void guard(const SimplicialComplex& g) const;

  HomotopyOptions options_;
  std::mutex mutex_;
  std::unordered_map<std::vector<Simplex>, std::shared_ptr<const HomotopyVerdict>, KeyHash>
      contractible_memo_;
  std::unordered_map<std::vector<Simplex>, std::unordered_map<int, bool>, KeyHash> sphere_memo_;
};

/// G \ U(x). Throws NotAnElement.
SimplicialComplex delete_star(const SimplicialComplex& g, const Simplex& x);

/// The standalone complex S(x).
SimplicialComplex link_complex(const SimplicialComplex& g, const Simplex& x);

HomotopyVerdict is_contractible(const SimplicialComplex& g, HomotopyOptions options = {});
bool is_manifold(const SimplicialComplex& g, int d, HomotopyOptions options = {});
bool is_sphere(const SimplicialComplex& g, int d, HomotopyOptions options = {});

/// χ(G) == 1 + (-1)^d. Throws PreconditionViolation unless G is a d-sphere.
bool euler_gem_check(const SimplicialComplex& g, int d, HomotopyOptions options = {});

/// Applies the witness's star deletions to g; returns the final complex
/// (the one-point complex for a valid witness).
SimplicialComplex replay(const SimplicialComplex& g, const HomotopyVerdict& verdict);

/**
 * Order complex of a set of elements of G: its vertices are the chosen
 * elements, labeled by canonical index + 1, and its simplices are the chains
 * under strict inclusion (the cliques of the containment graph).
 */
SimplicialComplex order_complex(const SimplicialComplex& g, std::vector<std::size_t> indices);

/// Order complex of all of G.
SimplicialComplex barycentric_refinement(const SimplicialComplex& g);

}  // namespace simplex_forge

#endif

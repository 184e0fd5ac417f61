/**
 * Connection Laplacian, Green matrix and sphere Green matrix of a complex,
 * together with the energy and sphere formula checks.
 *
 *   L(x,y) = 1 if x ∩ y ≠ ∅, else 0
 *   g(x,y) = w(x) w(y) χ(U(x) ∩ U(y))      (g = L^{-1})
 *   s(x,y) = w(x) w(y) χ(S(x) ∩ S(y))
 *
 * All matrices are indexed by the canonical element order.
 */
#ifndef SIMPLEX_FORGE_ENERGY_HPP
#define SIMPLEX_FORGE_ENERGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/matrix.hpp"

namespace simplex_forge {

/// Matrix constructors refuse complexes with more elements than this.
inline constexpr std::size_t kDefaultMatrixCeiling = 400;

IntegerMatrix connection_laplacian(const SimplicialComplex& g,
                                   std::size_t max_elements = kDefaultMatrixCeiling);
IntegerMatrix green_matrix(const SimplicialComplex& g,
                           std::size_t max_elements = kDefaultMatrixCeiling);
IntegerMatrix sphere_matrix(const SimplicialComplex& g,
                            std::size_t max_elements = kDefaultMatrixCeiling);

/// Σ_x w(x) M(x,x). Throws InvalidInput if M's order differs from |G|.
BigInt super_trace(const SimplicialComplex& g, const IntegerMatrix& m);

/// V(x) = w(x) χ(U(x)); equals the x-th row sum of the Green matrix.
std::int64_t potential(const SimplicialComplex& g, const Simplex& x);

/// Σ_x w(x) χ(U(x)) and Σ_x w(x) χ(S(x)), without building any matrix.
std::int64_t energy_sum(const SimplicialComplex& g);
std::int64_t sphere_sum(const SimplicialComplex& g);

struct EnergyReport {
  std::int64_t euler_characteristic = 0;
  std::int64_t energy = 0;         ///< Σ_x w(x) χ(U(x))
  std::int64_t sphere = 0;         ///< Σ_x w(x) χ(S(x))
  bool energy_ok = false;          ///< energy == χ(G)
  bool sphere_ok = false;          ///< sphere == 0
  /// Matrix-level data; absent when the complex exceeds the matrix ceiling.
  std::optional<BigInt> det_g;
  std::optional<bool> inverse_ok;  ///< L·g == I
  std::optional<std::size_t> nullity_s;
  std::optional<BigInt> super_trace_s;
};

/// Throws PreconditionViolation for the empty complex.
EnergyReport verify_energy_and_sphere(const SimplicialComplex& g,
                                      std::size_t max_elements = kDefaultMatrixCeiling);

}  // namespace simplex_forge

#endif

/**
 * Exterior derivative, Hodge Laplacian and Betti numbers over the rationals.
 *
 * The reference orientation of each simplex is ascending vertex order, and
 * sign(x|y) = (-1)^i when y is x without its i-th smallest vertex. Since the
 * canonical element order groups elements by dimension, the k-forms occupy
 * the index range dimension_range(k) and d maps that block into the next.
 */
#ifndef SIMPLEX_FORGE_HODGE_HPP
#define SIMPLEX_FORGE_HODGE_HPP

#include <cstddef>
#include <vector>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/matrix.hpp"

namespace simplex_forge {

/// n×n matrix with d(x, y) = sign(x|y) for codimension-one faces y of x.
IntegerMatrix exterior_derivative(const SimplicialComplex& g);

/// Same, with the orientation of element i reversed when flip[i] is true
/// (i.e. conjugated by the diagonal ±1 matrix).
IntegerMatrix exterior_derivative(const SimplicialComplex& g, const std::vector<bool>& flip);

/// The block of d from k-forms to (k+1)-forms: f_{k+1} rows, f_k columns.
IntegerMatrix derivative_block(const SimplicialComplex& g, int k);

/// (d + dᵀ)²
IntegerMatrix hodge_laplacian(const SimplicialComplex& g);

/// The diagonal block L_k of a Hodge Laplacian on k-forms.
IntegerMatrix laplacian_block(const SimplicialComplex& g, const IntegerMatrix& laplacian, int k);

/// True iff every entry outside the per-dimension diagonal blocks vanishes.
bool is_block_diagonal(const SimplicialComplex& g, const IntegerMatrix& m);

/// b_k = f_k - rank(d_k) - rank(d_{k-1}), k = 0..dim. Empty for the empty complex.
std::vector<std::size_t> betti(const SimplicialComplex& g);

/// b_k as the nullity of the Laplacian block L_k.
std::vector<std::size_t> betti_from_laplacian(const SimplicialComplex& g);

/// Σ_k (-1)^k b_k == χ(G)
bool euler_poincare_check(const SimplicialComplex& g);

/// str(L^m) for m = 0..m_max, computed blockwise on the diagonal blocks.
std::vector<BigInt> laplacian_power_super_traces(const SimplicialComplex& g, unsigned m_max);

/// str(L^m) == 0 for 1 <= m <= m_max (and str(L^0) == χ). Throws
/// InvalidInput for m_max == 0.
bool mckean_singer_check(const SimplicialComplex& g, unsigned m_max);

}  // namespace simplex_forge

#endif

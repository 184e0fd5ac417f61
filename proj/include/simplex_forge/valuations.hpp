/**
 * Counting valuations: f-vectors, f-functions, h-vectors, the
 * Dehn-Sommerville symmetry and the Barycentric refinement operator acting on
 * f-vectors.
 */
#ifndef SIMPLEX_FORGE_VALUATIONS_HPP
#define SIMPLEX_FORGE_VALUATIONS_HPP

#include <cstdint>
#include <vector>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/matrix.hpp"
#include "simplex_forge/polynomial.hpp"

namespace simplex_forge {

/// f_k = number of k-dimensional elements, k = 0..dim. Empty for the empty complex.
using FVector = std::vector<std::int64_t>;
/// h_0..h_{dim+1}
using HVector = std::vector<BigInt>;

FVector f_vector(const SimplicialComplex& g);

/// 1 + Σ_k f_k t^{k+1}
FPolynomial f_function(const SimplicialComplex& g);
FPolynomial f_function(const FVector& f);

/**
 * Coefficients of h(x) = (x-1)^D f(1/(x-1)) with D = dim + 1, so that h is a
 * polynomial of degree at most D. Throws PreconditionViolation for the empty
 * complex.
 */
HVector h_vector(const SimplicialComplex& g);

/// True iff the h-vector is palindromic. Throws for the empty complex.
bool is_dehn_sommerville(const SimplicialComplex& g);

/// The equivalent form f(-1-t) = (-1)^{dim+1} f(t), checked as a polynomial
/// identity.
bool satisfies_reflection_symmetry(const SimplicialComplex& g);

/// f · coeffs, the shorter of the two zero-padded.
BigInt ds_residual(const SimplicialComplex& g, const std::vector<std::int64_t>& coeffs);

/// Second-kind Stirling number S(n, k).
BigInt stirling2(unsigned n, unsigned k);

/**
 * (d+1)x(d+1) matrix Q with Q[k][j] = S(j+1, k+1)·(k+1)!: a j-simplex
 * contributes Q[k][j] k-simplices to the Barycentric refinement.
 */
IntegerMatrix barycentric_operator(int d);

/// Q·f, with f zero-padded or Q sized to match.
std::vector<BigInt> apply(const IntegerMatrix& q, const FVector& f);

/// Qᵀ·(1,-1,1,...) == (1,-1,1,...)
bool alternating_eigenvector_check(int d);

}  // namespace simplex_forge

#endif

#include "simplex_forge/hodge.hpp"

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

IntegerMatrix exterior_derivative(const SimplicialComplex& g, const std::vector<bool>& flip) {
  if (!flip.empty() && flip.size() != g.size())
    throw InvalidInput("orientation vector size does not match the complex");
  const std::size_t n = g.size();
  IntegerMatrix d(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Simplex& x = g[r];
    if (x.size() < 2) continue;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::size_t c = g.require(x.without_index(i));
      int sign = i % 2 == 0 ? 1 : -1;
      if (!flip.empty() && flip[r] != flip[c]) sign = -sign;
      d(r, c) = sign;
    }
  }
  return d;
}

IntegerMatrix exterior_derivative(const SimplicialComplex& g) { return exterior_derivative(g, {}); }

IntegerMatrix derivative_block(const SimplicialComplex& g, int k) {
  const auto [c0, c1] = g.dimension_range(k);
  const auto [r0, r1] = g.dimension_range(k + 1);
  IntegerMatrix d(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r) {
    const Simplex& x = g[r];
    for (std::size_t i = 0; i < x.size(); ++i)
      d(r - r0, g.require(x.without_index(i)) - c0) = i % 2 == 0 ? 1 : -1;
  }
  return d;
}

IntegerMatrix hodge_laplacian(const SimplicialComplex& g) {
  const IntegerMatrix d = exterior_derivative(g);
  const IntegerMatrix dirac = d + d.transposed();
  return dirac * dirac;
}

IntegerMatrix laplacian_block(const SimplicialComplex& g, const IntegerMatrix& laplacian, int k) {
  const auto [lo, hi] = g.dimension_range(k);
  return laplacian.block(lo, hi, lo, hi);
}

bool is_block_diagonal(const SimplicialComplex& g, const IntegerMatrix& m) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i].size() != g[j].size() && m(i, j) != 0) return false;
  return true;
}

std::vector<std::size_t> betti(const SimplicialComplex& g) {
  if (g.empty()) return {};
  const int top = *g.dimension();
  // ranks[k] = rank of d_k : k-forms -> (k+1)-forms
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k < top; ++k) ranks[static_cast<std::size_t>(k)] = rank(derivative_block(g, k));
  std::vector<std::size_t> b;
  for (int k = 0; k <= top; ++k) {
    const auto [lo, hi] = g.dimension_range(k);
    const std::size_t below = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    b.push_back(hi - lo - ranks[static_cast<std::size_t>(k)] - below);
  }
  return b;
}

std::vector<std::size_t> betti_from_laplacian(const SimplicialComplex& g) {
  if (g.empty()) return {};
  const IntegerMatrix l = hodge_laplacian(g);
  std::vector<std::size_t> b;
  for (int k = 0; k <= *g.dimension(); ++k) b.push_back(nullity(laplacian_block(g, l, k)));
  return b;
}

bool euler_poincare_check(const SimplicialComplex& g) {
  std::int64_t alt = 0;
  const auto b = betti(g);
  for (std::size_t k = 0; k < b.size(); ++k)
    alt += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b[k]);
  return alt == euler_characteristic(g);
}

std::vector<BigInt> laplacian_power_super_traces(const SimplicialComplex& g, unsigned m_max) {
  std::vector<BigInt> out(m_max + 1, 0);
  if (g.empty()) return out;
  const IntegerMatrix l = hodge_laplacian(g);
  if (!is_block_diagonal(g, l)) throw InternalInconsistency("Hodge Laplacian is not block diagonal");
  for (int k = 0; k <= *g.dimension(); ++k) {
    const IntegerMatrix block = laplacian_block(g, l, k);
    IntegerMatrix p = IntegerMatrix::identity(block.order());
    for (unsigned m = 0; m <= m_max; ++m) {
      if (m > 0) p = p * block;
      if (k % 2 == 0)
        out[m] += p.trace();
      else
        out[m] -= p.trace();
    }
  }
  return out;
}

bool mckean_singer_check(const SimplicialComplex& g, unsigned m_max) {
  if (m_max == 0) throw InvalidInput("McKean-Singer check needs m_max >= 1");
  const auto traces = laplacian_power_super_traces(g, m_max);
  if (traces[0] != euler_characteristic(g)) return false;
  for (unsigned m = 1; m <= m_max; ++m)
    if (traces[m] != 0) return false;
  return true;
}

}  // namespace simplex_forge

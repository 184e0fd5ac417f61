#include "simplex_forge/energy.hpp"

#include <string>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

namespace {

void require_matrix_size(const SimplicialComplex& g, std::size_t max_elements) {
  if (g.empty()) throw PreconditionViolation("matrices of the empty complex are undefined");
  if (g.size() > max_elements)
    throw TooLarge("complex has " + std::to_string(g.size()) +
                   " elements; the matrix limit is " + std::to_string(max_elements));
}

std::int64_t chi(const SimplicialComplex& g, const ElementBits& bits) {
  const auto total = static_cast<std::int64_t>(bits.count());
  return total - 2 * static_cast<std::int64_t>((bits & g.odd_elements()).count());
}

IntegerMatrix pairwise_matrix(const SimplicialComplex& g, const std::vector<ElementBits>& sets) {
  const std::size_t n = g.size();
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::int64_t v = g[i].weight() * g[j].weight() * chi(g, sets[i] & sets[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

}  // namespace

IntegerMatrix connection_laplacian(const SimplicialComplex& g, std::size_t max_elements) {
  require_matrix_size(g, max_elements);
  const std::size_t n = g.size();
  IntegerMatrix l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (g[i].intersects(g[j])) {
        l(i, j) = 1;
        l(j, i) = 1;
      }
  return l;
}

IntegerMatrix green_matrix(const SimplicialComplex& g, std::size_t max_elements) {
  require_matrix_size(g, max_elements);
  return pairwise_matrix(g, local_sets(g).stars);
}

IntegerMatrix sphere_matrix(const SimplicialComplex& g, std::size_t max_elements) {
  require_matrix_size(g, max_elements);
  return pairwise_matrix(g, local_sets(g).spheres);
}

BigInt super_trace(const SimplicialComplex& g, const IntegerMatrix& m) {
  if (!m.is_square() || m.order() != g.size())
    throw InvalidInput("matrix order " + std::to_string(m.rows()) +
                       " does not match the complex size " + std::to_string(g.size()));
  BigInt acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].weight() > 0)
      acc += m(i, i);
    else
      acc -= m(i, i);
  }
  return acc;
}

std::int64_t potential(const SimplicialComplex& g, const Simplex& x) {
  return x.weight() * euler_characteristic(star(g, x));
}

std::int64_t energy_sum(const SimplicialComplex& g) {
  std::int64_t acc = 0;
  for (const Simplex& x : g) acc += x.weight() * euler_characteristic(star(g, x));
  return acc;
}

std::int64_t sphere_sum(const SimplicialComplex& g) {
  std::int64_t acc = 0;
  for (const Simplex& x : g) acc += x.weight() * euler_characteristic(unit_sphere(g, x));
  return acc;
}

EnergyReport verify_energy_and_sphere(const SimplicialComplex& g, std::size_t max_elements) {
  if (g.empty()) throw PreconditionViolation("energy report of the empty complex");
  EnergyReport r;
  r.euler_characteristic = euler_characteristic(g);
  r.energy = energy_sum(g);
  r.sphere = sphere_sum(g);
  r.energy_ok = r.energy == r.euler_characteristic;
  r.sphere_ok = r.sphere == 0;
  if (g.size() <= max_elements) {
    const IntegerMatrix l = connection_laplacian(g, max_elements);
    const LocalSets sets = local_sets(g);
    const IntegerMatrix green = pairwise_matrix(g, sets.stars);
    const IntegerMatrix s = pairwise_matrix(g, sets.spheres);
    r.inverse_ok = (l * green) == IntegerMatrix::identity(g.size());
    r.det_g = determinant(green);
    r.nullity_s = nullity(s);
    r.super_trace_s = super_trace(g, s);
  }
  return r;
}

}  // namespace simplex_forge

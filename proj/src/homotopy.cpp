#include "simplex_forge/homotopy.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

SimplicialComplex delete_star(const SimplicialComplex& g, const Simplex& x) {
  g.require(x);
  std::vector<Simplex> keep;
  keep.reserve(g.size());
  for (const Simplex& y : g)
    if (!x.is_subset_of(y)) keep.push_back(y);
  return SimplicialComplex::from_elements(std::move(keep));
}

SimplicialComplex link_complex(const SimplicialComplex& g, const Simplex& x) {
  return subcomplex(unit_sphere(g, x));
}

// --------------------------------------------------------------- solver --

std::size_t HomotopySolver::KeyHash::operator()(const std::vector<Simplex>& key) const noexcept {
  std::size_t seed = key.size();
  for (const Simplex& x : key) boost::hash_combine(seed, SimplexHash{}(x));
  return seed;
}

HomotopySolver::HomotopySolver(HomotopyOptions options) : options_(options) {}

void HomotopySolver::guard(const SimplicialComplex& g) const {
  if (g.size() > options_.max_elements)
    throw TooLarge("complex has " + std::to_string(g.size()) + " elements; the limit is " +
                   std::to_string(options_.max_elements));
}

std::shared_ptr<const HomotopyVerdict> HomotopySolver::contractible(const SimplicialComplex& g) {
  guard(g);
  static const auto no = std::make_shared<const HomotopyVerdict>();
  static const auto point = std::make_shared<const HomotopyVerdict>(HomotopyVerdict{true, {}});
  if (g.size() == 1) return point;
  if (g.empty()) return no;
  if (options_.prune_by_euler_characteristic && euler_characteristic(g) != 1) return no;
  {
    std::lock_guard lock(mutex_);
    if (auto it = contractible_memo_.find(g.elements()); it != contractible_memo_.end())
      return it->second;
  }

  std::shared_ptr<const HomotopyVerdict> result = no;
  for (const Simplex& x : g) {
    const SimplexSet s = unit_sphere(g, x);
    if (options_.prune_by_euler_characteristic && euler_characteristic(s) != 1) continue;
    auto link = contractible(subcomplex(s));
    if (!link->contractible) continue;
    const SimplicialComplex rest = delete_star(g, x);
    auto remainder = contractible(rest);
    if (!remainder->contractible) continue;
    HomotopyVerdict v{true, {}};
    v.witness.reserve(remainder->witness.size() + 1);
    v.witness.push_back({x, link});
    v.witness.insert(v.witness.end(), remainder->witness.begin(), remainder->witness.end());
    result = std::make_shared<const HomotopyVerdict>(std::move(v));
    break;
  }
  std::lock_guard lock(mutex_);
  contractible_memo_.emplace(g.elements(), result);
  return result;
}

bool HomotopySolver::manifold(const SimplicialComplex& g, int d) {
  guard(g);
  if (g.empty() || *g.dimension() != d) return false;
  for (const Simplex& x : g)
    if (!sphere(link_complex(g, x), d - 1)) return false;
  return true;
}

bool HomotopySolver::sphere(const SimplicialComplex& g, int d) {
  if (d < -1) return false;
  if (d == -1) return g.empty();
  if (g.empty()) return false;
  guard(g);
  {
    std::lock_guard lock(mutex_);
    if (auto it = sphere_memo_.find(g.elements()); it != sphere_memo_.end())
      if (auto jt = it->second.find(d); jt != it->second.end()) return jt->second;
  }
  bool result = manifold(g, d);
  if (result) {
    result = false;
    for (const Simplex& x : g)
      if (contractible(delete_star(g, x))->contractible) {
        result = true;
        break;
      }
  }
  std::lock_guard lock(mutex_);
  sphere_memo_[g.elements()][d] = result;
  return result;
}

// ------------------------------------------------------ free functions --

HomotopyVerdict is_contractible(const SimplicialComplex& g, HomotopyOptions options) {
  HomotopySolver solver(options);
  return *solver.contractible(g);
}

bool is_manifold(const SimplicialComplex& g, int d, HomotopyOptions options) {
  HomotopySolver solver(options);
  return solver.manifold(g, d);
}

bool is_sphere(const SimplicialComplex& g, int d, HomotopyOptions options) {
  HomotopySolver solver(options);
  return solver.sphere(g, d);
}

bool euler_gem_check(const SimplicialComplex& g, int d, HomotopyOptions options) {
  if (!is_sphere(g, d, options))
    throw PreconditionViolation("Euler gem check requires a " + std::to_string(d) + "-sphere");
  return euler_characteristic(g) == 1 + (d % 2 == 0 ? 1 : -1);
}

SimplicialComplex replay(const SimplicialComplex& g, const HomotopyVerdict& verdict) {
  SimplicialComplex current = g;
  for (const ReductionStep& step : verdict.witness) current = delete_star(current, step.element);
  return current;
}

SimplicialComplex order_complex(const SimplicialComplex& g, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const std::size_t m = indices.size();
  // Canonical order lists subsets before supersets, so chains are increasing
  // index sequences.
  std::vector<std::vector<std::size_t>> up(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Simplex& x = g[indices[a]];
      const Simplex& y = g[indices[b]];
      if (x.size() < y.size() && x.is_subset_of(y)) up[a].push_back(b);
    }

  std::vector<Simplex> chains;
  std::vector<Label> chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    chains.emplace_back(chain);
    for (std::size_t next : up[last]) {
      chain.push_back(static_cast<Label>(indices[next] + 1));
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::size_t a = 0; a < m; ++a) {
    chain = {static_cast<Label>(indices[a] + 1)};
    extend(extend, a);
  }
  return SimplicialComplex::from_elements(std::move(chains));
}

SimplicialComplex barycentric_refinement(const SimplicialComplex& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return order_complex(g, std::move(all));
}

}  // namespace simplex_forge

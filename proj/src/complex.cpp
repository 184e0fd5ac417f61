#include "simplex_forge/complex.hpp"

#include <algorithm>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

// ---------------------------------------------------------------- Simplex --

Simplex::Simplex(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() <= 0)
    throw InvalidInput("vertex labels must be positive, got " + std::to_string(vertices_.front()));
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidInput("repeated vertex label in simplex");
}

Simplex::Simplex(std::initializer_list<Label> vertices) : Simplex(std::vector<Label>(vertices)) {}

bool Simplex::contains(Label v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return size() <= other.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<Label> out;
  out.reserve(size() + other.size());
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::without_index(std::size_t i) const {
  if (size() < 2 || i >= size()) throw InvalidInput("cannot drop vertex from simplex");
  std::vector<Label> out = vertices_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::shifted(Label offset) const {
  std::vector<Label> out = vertices_;
  for (auto& v : out) v += offset;
  return Simplex(std::move(out));
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

std::size_t SimplexHash::operator()(const Simplex& x) const noexcept {
  return boost::hash_range(x.vertices().begin(), x.vertices().end());
}

// ------------------------------------------------------ SimplicialComplex --

SimplicialComplex::SimplicialComplex(Trusted, std::vector<Simplex> sorted_unique)
    : elements_(std::move(sorted_unique)) {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  odd_.resize(n);
  none_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Simplex& x = elements_[i];
    index_.emplace(x, i);
    if (x.dimension() % 2 == 1) odd_.set(i);
    if (x.size() == 1) {
      ++vertex_count_;
      containing_.emplace(x.front(), ElementBits(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (Label v : elements_[i].vertices())
      if (auto it = containing_.find(v); it != containing_.end()) it->second.set(i);
}

SimplicialComplex SimplicialComplex::from_elements(std::vector<Simplex> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SimplicialComplex g(Trusted{}, std::move(elements));
  // Checking codimension-one faces suffices: closure follows by induction.
  for (const Simplex& x : g.elements_) {
    if (x.size() < 2) continue;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Simplex face = x.without_index(i);
      if (!g.contains(face))
        throw NotSubsetClosed("face " + face.to_string() + " of " + x.to_string() +
                              " is missing");
    }
  }
  return g;
}

std::optional<int> SimplicialComplex::dimension() const {
  if (elements_.empty()) return std::nullopt;
  return elements_.back().dimension();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::require(const Simplex& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw NotAnElement(x.to_string() + " is not an element of the complex");
  return it->second;
}

std::vector<Label> SimplicialComplex::vertex_labels() const {
  std::vector<Label> out;
  out.reserve(vertex_count_);
  for (std::size_t i = 0; i < vertex_count_; ++i) out.push_back(elements_[i].front());
  return out;
}

Label SimplicialComplex::max_label() const noexcept {
  return vertex_count_ == 0 ? 0 : elements_[vertex_count_ - 1].front();
}

std::pair<std::size_t, std::size_t> SimplicialComplex::dimension_range(int k) const {
  auto lo = std::partition_point(elements_.begin(), elements_.end(),
                                 [k](const Simplex& x) { return x.dimension() < k; });
  auto hi = std::partition_point(lo, elements_.end(),
                                 [k](const Simplex& x) { return x.dimension() <= k; });
  return {static_cast<std::size_t>(lo - elements_.begin()),
          static_cast<std::size_t>(hi - elements_.begin())};
}

std::vector<Simplex> SimplicialComplex::facets() const {
  const std::size_t n = elements_.size();
  std::vector<bool> covered(n, false);
  for (const Simplex& x : elements_) {
    if (x.size() < 2) continue;
    for (std::size_t i = 0; i < x.size(); ++i) covered[index_.at(x.without_index(i))] = true;
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i]) out.push_back(elements_[i]);
  return out;
}

const ElementBits& SimplicialComplex::elements_containing(Label v) const {
  auto it = containing_.find(v);
  return it == containing_.end() ? none_ : it->second;
}

// ------------------------------------------------------------ SimplexSet --

SimplexSet::SimplexSet(const SimplicialComplex& host, ElementBits members)
    : host_(&host), bits_(std::move(members)) {
  if (bits_.size() != host.size()) throw InvalidInput("simplex set size does not match host");
}

SimplexSet::SimplexSet(const SimplicialComplex& host) : host_(&host), bits_(host.size()) {}

bool SimplexSet::contains(const Simplex& x) const {
  auto i = host_->index_of(x);
  return i && bits_.test(*i);
}

std::vector<std::size_t> SimplexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != ElementBits::npos; i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

std::vector<Simplex> SimplexSet::members() const {
  std::vector<Simplex> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != ElementBits::npos; i = bits_.find_next(i))
    out.push_back((*host_)[i]);
  return out;
}

bool SimplexSet::is_closed() const {
  for (auto i = bits_.find_first(); i != ElementBits::npos; i = bits_.find_next(i)) {
    const Simplex& x = (*host_)[i];
    if (x.size() < 2) continue;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!bits_.test(host_->require(x.without_index(k)))) return false;
  }
  return true;
}

void SimplexSet::check_same_host(const SimplexSet& other) const {
  if (host_ != other.host_) throw InvalidInput("simplex sets belong to different complexes");
}

SimplexSet SimplexSet::operator|(const SimplexSet& other) const {
  check_same_host(other);
  return SimplexSet(*host_, bits_ | other.bits_);
}

SimplexSet SimplexSet::operator&(const SimplexSet& other) const {
  check_same_host(other);
  return SimplexSet(*host_, bits_ & other.bits_);
}

SimplexSet SimplexSet::operator-(const SimplexSet& other) const {
  check_same_host(other);
  return SimplexSet(*host_, bits_ - other.bits_);
}

// ------------------------------------------------------------ operations --

SimplicialComplex closure(std::span<const Simplex> faces) {
  std::set<Simplex> all;
  for (const Simplex& face : faces) {
    const auto& v = face.vertices();
    const std::size_t k = v.size();
    if (k > 30) throw TooLarge("face with more than 30 vertices");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Label> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) sub.push_back(v[i]);
      all.emplace(std::move(sub));
    }
  }
  return SimplicialComplex::from_elements(std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex closure(std::initializer_list<Simplex> faces) {
  return closure(std::span<const Simplex>(faces.begin(), faces.size()));
}

SimplicialComplex closure(const std::vector<std::vector<Label>>& faces) {
  std::vector<Simplex> simplices;
  simplices.reserve(faces.size());
  for (const auto& f : faces) simplices.emplace_back(f);
  return closure(std::span<const Simplex>(simplices));
}

std::int64_t euler_characteristic(const SimplicialComplex& g) {
  std::int64_t chi = 0;
  for (const Simplex& x : g) chi += x.weight();
  return chi;
}

std::int64_t euler_characteristic(const SimplexSet& a) {
  const auto total = static_cast<std::int64_t>(a.bits().count());
  const auto odd = static_cast<std::int64_t>((a.bits() & a.host().odd_elements()).count());
  return total - 2 * odd;
}

namespace {

ElementBits star_bits(const SimplicialComplex& g, const Simplex& x) {
  ElementBits bits = g.elements_containing(x.front());
  for (std::size_t i = 1; i < x.size(); ++i) bits &= g.elements_containing(x.vertices()[i]);
  return bits;
}

// B(x) = {y : x ∪ y ∈ G}: y lies in a superset of x exactly when x ∪ y does.
ElementBits ball_bits(const SimplicialComplex& g, const Simplex& x) {
  ElementBits bits(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.contains(x.united(g[i]))) bits.set(i);
  return bits;
}

}  // namespace

SimplexSet star(const SimplicialComplex& g, const Simplex& x) {
  g.require(x);
  return SimplexSet(g, star_bits(g, x));
}

SimplexSet core(const SimplicialComplex& g, const Simplex& x) {
  g.require(x);
  ElementBits bits(g.size());
  const auto& v = x.vertices();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v.size()); ++mask) {
    std::vector<Label> sub;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(v[i]);
    bits.set(g.require(Simplex(std::move(sub))));
  }
  return SimplexSet(g, std::move(bits));
}

SimplexSet unit_ball(const SimplicialComplex& g, const Simplex& x) {
  g.require(x);
  return SimplexSet(g, ball_bits(g, x));
}

SimplexSet unit_sphere(const SimplicialComplex& g, const Simplex& x) {
  g.require(x);
  return SimplexSet(g, ball_bits(g, x) - star_bits(g, x));
}

SimplicialComplex subcomplex(const SimplexSet& s) {
  if (!s.is_closed()) throw NotSubsetClosed("simplex set is not closed under taking faces");
  return SimplicialComplex::from_elements(s.members());
}

LocalSets local_sets(const SimplicialComplex& g) {
  LocalSets out;
  out.stars.reserve(g.size());
  out.spheres.reserve(g.size());
  for (const Simplex& x : g) {
    ElementBits u = star_bits(g, x);
    out.spheres.push_back(ball_bits(g, x) - u);
    out.stars.push_back(std::move(u));
  }
  return out;
}

}  // namespace simplex_forge

/**
 * Finite abstract simplicial complexes and the local sets of their finite
 * (Alexandroff) topology: stars U(x), cores K(x), unit balls B(x) and unit
 * spheres S(x).
 *
 * Elements of a complex are kept in a canonical total order: by cardinality,
 * then lexicographically by vertex labels. Every matrix in the library is
 * indexed by this order, and elements of one dimension occupy a contiguous
 * index range.
 */
#ifndef SIMPLEX_FORGE_COMPLEX_HPP
#define SIMPLEX_FORGE_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace simplex_forge {

/// Vertex label. Labels are opaque positive integers.
using Label = std::int64_t;

using ElementBits = boost::dynamic_bitset<std::uint64_t>;

/**
 * A nonempty finite set of positive vertex labels, stored sorted.
 */
class Simplex {
 public:
  /// Sorts the labels. Throws InvalidInput on an empty list, a non-positive
  /// label or a repeated label.
  explicit Simplex(std::vector<Label> vertices);
  Simplex(std::initializer_list<Label> vertices);

  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  /// (-1)^dim
  int weight() const noexcept { return (vertices_.size() % 2 == 1) ? 1 : -1; }

  Label front() const noexcept { return vertices_.front(); }
  Label back() const noexcept { return vertices_.back(); }

  bool contains(Label v) const;
  bool is_subset_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  /// Set union.
  Simplex united(const Simplex& other) const;
  /// The face obtained by dropping the i-th smallest vertex; requires size() >= 2.
  Simplex without_index(std::size_t i) const;
  /// Every label shifted by +offset.
  Simplex shifted(Label offset) const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  /// Canonical order: cardinality first, then lexicographic.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Label> sorted) : vertices_(std::move(sorted)) {}

  std::vector<Label> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& x) const noexcept;
};

/**
 * A finite set of simplices closed under taking nonempty subsets. The empty
 * complex is legal (it plays the role of the (-1)-sphere).
 *
 * Values are immutable after construction.
 */
class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex() = default;

  /// Builds a complex from its complete element list (any order, duplicates
  /// ignored). Throws NotSubsetClosed if some face of an element is missing.
  static SimplicialComplex from_elements(std::vector<Simplex> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  /// Maximal dimension; nullopt for the empty complex.
  std::optional<int> dimension() const;

  const std::vector<Simplex>& elements() const noexcept { return elements_; }
  const Simplex& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::optional<std::size_t> index_of(const Simplex& x) const;
  bool contains(const Simplex& x) const { return index_.contains(x); }
  /// Index of x; throws NotAnElement.
  std::size_t require(const Simplex& x) const;

  /// Labels of the 0-dimensional elements, ascending.
  std::vector<Label> vertex_labels() const;
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Largest vertex label, 0 for the empty complex.
  Label max_label() const noexcept;
  /// Index range [first, last) of the k-dimensional elements.
  std::pair<std::size_t, std::size_t> dimension_range(int k) const;

  /// Inclusion-maximal elements in canonical order.
  std::vector<Simplex> facets() const;

  /// Elements that contain vertex v (empty bits if v is not a vertex).
  const ElementBits& elements_containing(Label v) const;
  /// Elements of odd dimension.
  const ElementBits& odd_elements() const noexcept { return odd_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.elements_ == b.elements_;
  }

 private:
  struct Trusted {};
  SimplicialComplex(Trusted, std::vector<Simplex> sorted_unique);

  std::vector<Simplex> elements_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  std::unordered_map<Label, ElementBits> containing_;
  ElementBits odd_;
  ElementBits none_;
  std::size_t vertex_count_ = 0;
};

/**
 * A subset of the elements of a host complex, not necessarily closed. This is
 * a view: the host must outlive it.
 */
class SimplexSet {
 public:
  SimplexSet(const SimplicialComplex& host, ElementBits members);
  /// The empty subset of host.
  explicit SimplexSet(const SimplicialComplex& host);

  const SimplicialComplex& host() const noexcept { return *host_; }
  const ElementBits& bits() const noexcept { return bits_; }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(const Simplex& x) const;
  bool contains_index(std::size_t i) const { return bits_.test(i); }
  /// Members in canonical order.
  std::vector<Simplex> members() const;
  std::vector<std::size_t> indices() const;

  /// True iff every nonempty subset of every member is a member.
  bool is_closed() const;

  SimplexSet operator|(const SimplexSet& other) const;
  SimplexSet operator&(const SimplexSet& other) const;
  /// Set difference.
  SimplexSet operator-(const SimplexSet& other) const;

  friend bool operator==(const SimplexSet& a, const SimplexSet& b) {
    return a.host_ == b.host_ && a.bits_ == b.bits_;
  }

 private:
  void check_same_host(const SimplexSet& other) const;

  const SimplicialComplex* host_;
  ElementBits bits_;
};

/// Smallest complex containing all the given faces.
SimplicialComplex closure(std::span<const Simplex> faces);
SimplicialComplex closure(std::initializer_list<Simplex> faces);
/// Closure of a vector of label lists; convenience for literals and parsers.
SimplicialComplex closure(const std::vector<std::vector<Label>>& faces);

/// Σ w(x) over the elements.
std::int64_t euler_characteristic(const SimplicialComplex& g);
std::int64_t euler_characteristic(const SimplexSet& a);

/// U(x) = {y in G : x ⊆ y}
SimplexSet star(const SimplicialComplex& g, const Simplex& x);
/// K(x) = nonempty subsets of x
SimplexSet core(const SimplicialComplex& g, const Simplex& x);
/// B(x), the closure of U(x) inside G
SimplexSet unit_ball(const SimplicialComplex& g, const Simplex& x);
/// S(x) = B(x) \ U(x)
SimplexSet unit_sphere(const SimplicialComplex& g, const Simplex& x);

/// Reifies a closed simplex set as a standalone complex with the same labels.
/// Throws NotSubsetClosed.
SimplicialComplex subcomplex(const SimplexSet& s);

/// All stars and unit spheres of G at once, indexed by canonical order.
struct LocalSets {
  std::vector<ElementBits> stars;
  std::vector<ElementBits> spheres;
};
LocalSets local_sets(const SimplicialComplex& g);

}  // namespace simplex_forge

#endif

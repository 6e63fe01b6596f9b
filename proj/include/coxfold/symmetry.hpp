#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coxfold/graph.hpp"

namespace coxfold {

/// Permutation of vertex positions. Composition follows function notation:
/// (a * b)(x) = a(b(x)).
class Symmetry {
 public:
  Symmetry() = default;
  /// Throws SymmetryError unless `images` is a bijection of {0, ..., n-1}.
  explicit Symmetry(std::vector<int> images);
  static Symmetry identity(int n);

  int operator()(int position) const { return images_[static_cast<size_t>(position)]; }
  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  Symmetry inverse() const;
  bool is_identity() const;
  bool has_fixed_point() const;
  int order() const;

  friend Symmetry operator*(const Symmetry& a, const Symmetry& b);
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
  friend auto operator<=>(const Symmetry&, const Symmetry&) = default;

 private:
  std::vector<int> images_;
};

/// Checks that `perm` is a label-preserving bijection of the graph. Throws SymmetryError
/// naming the offending pair otherwise.
Symmetry validate_symmetry(const CoxeterGraph& graph, const std::vector<int>& perm);
/// Same, with the permutation given on vertex ids. Vertices absent from the map are fixed.
Symmetry validate_symmetry(const CoxeterGraph& graph, const std::map<VertexId, VertexId>& perm);

/// Cycle notation over vertex ids, e.g. "(1 6)(3 5)"; "()" for the identity.
std::string cycle_string(const CoxeterGraph& graph, const Symmetry& g);

struct NamedSymmetry {
  std::string name;
  Symmetry symmetry;
};

/// Finite group of graph symmetries, closed eagerly at construction.
class SymmetryGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  SymmetryGroup() = default;
  /// Validates every generator against `graph` and closes under composition. Throws
  /// CapExceeded when the closure outgrows `cap`. Positions in `infinite` mark vertices
  /// whose orbit under the ambient infinite group is infinite.
  SymmetryGroup(const CoxeterGraph& graph, std::vector<NamedSymmetry> generators,
                std::size_t cap = kDefaultCap, std::vector<int> infinite = {});
  static SymmetryGroup trivial(const CoxeterGraph& graph);

  int degree() const { return degree_; }
  const std::vector<NamedSymmetry>& generators() const { return generators_; }
  /// Identity first, then breadth-first discovery order over the generators.
  const std::vector<Symmetry>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(const Symmetry& g) const;
  const std::vector<int>& infinite_positions() const { return infinite_; }

 private:
  int degree_ = 0;
  std::vector<NamedSymmetry> generators_;
  std::vector<Symmetry> elements_;
  std::vector<int> infinite_;
};

/// Vertex orbits, each a sorted position list, ordered by smallest member.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;
  std::vector<int> index;     // position -> orbit number
  std::vector<bool> finite;   // per orbit
};

OrbitPartition vertex_orbits(const SymmetryGroup& group);

struct SymmetricGraph {
  CoxeterGraph graph;
  SymmetryGroup group;
};

/// Restriction of `group` to the G-stable position set `positions` of `graph`, acting on
/// `graph.induced(positions)`. Elements that do not stabilize the set are dropped first,
/// so the result is the stabilizer restricted.
SymmetricGraph restrict_pair(const CoxeterGraph& graph, const SymmetryGroup& group,
                             const std::vector<int>& positions);

/// Full subgraph on the union of finite orbits with the induced group.
SymmetricGraph restrict_to_finite_orbits(const CoxeterGraph& graph, const SymmetryGroup& group);

/// Connected components, each with the restriction of its stabilizer in G.
std::vector<SymmetricGraph> connected_components(const CoxeterGraph& graph,
                                                 const SymmetryGroup& group);

}  // namespace coxfold

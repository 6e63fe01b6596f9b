#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coxfold {

using VertexId = int;

/// Coxeter label m(s,t): an integer >= 1 or infinity. The value 1 only ever appears
/// on the diagonal.
class Label {
 public:
  explicit Label(int m);
  static Label infinity() { return Label(); }

  bool is_infinite() const { return m_ == 0; }
  int value() const;
  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;

 private:
  Label() = default;
  int m_ = 0;  // 0 encodes infinity
};

struct Edge {
  VertexId u;
  VertexId v;
  Label label;
};

/// Finite window of an infinite graph family (A_inf, iAi, Dinf).
struct Truncation {
  std::string family;
  int size = 0;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Immutable Coxeter graph. Vertices are kept in ascending id order; a vertex's
/// position in that order indexes every matrix and permutation in the library.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  /// Edges with label 2 are accepted and dropped. Throws Error on duplicate or unknown
  /// vertices, self loops, labels below 2 and contradictory repeated edges.
  CoxeterGraph(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
               std::string name = {});

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& vertices() const { return ids_; }
  VertexId id(int position) const { return ids_.at(static_cast<size_t>(position)); }
  int position(VertexId v) const;
  bool contains(VertexId v) const;

  Label label(int i, int j) const { return labels_[static_cast<size_t>(i * size() + j)]; }
  Label label_of(VertexId u, VertexId v) const { return label(position(u), position(v)); }
  const std::vector<int>& neighbors(int i) const { return adjacency_.at(static_cast<size_t>(i)); }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  /// Stored edges (label >= 3) as position-ordered id pairs.
  std::vector<Edge> edges() const;

  const std::string& name() const { return name_; }
  CoxeterGraph renamed(std::string name) const;
  const std::optional<Truncation>& truncation() const { return truncation_; }
  CoxeterGraph with_truncation(Truncation t) const;

  /// Full subgraph on the given positions; ids are preserved.
  CoxeterGraph induced(const std::vector<int>& positions) const;
  /// Connected components as sorted position lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
  bool connected() const { return components().size() <= 1; }
  /// Shortest path between two positions, both endpoints included; empty if none.
  std::vector<int> shortest_path(int from, int to) const;

  /// Same ids and labels (names are ignored).
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b);

 private:
  std::vector<VertexId> ids_;
  std::vector<Label> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::string name_;
  std::optional<Truncation> truncation_;
};

/// Label-preserving bijections from `from` to `to`, as position maps, up to `limit`.
std::vector<std::vector<int>> isomorphisms(const CoxeterGraph& from, const CoxeterGraph& to,
                                           size_t limit = SIZE_MAX);

inline std::vector<std::vector<int>> automorphisms(const CoxeterGraph& g) {
  return isomorphisms(g, g);
}

}  // namespace coxfold

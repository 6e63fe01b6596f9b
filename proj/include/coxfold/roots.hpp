#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxfold/graph.hpp"
#include "coxfold/linalg.hpp"

namespace coxfold {

/// -2cos(pi/m) for m in {2, 3, 4, 5, 6, inf}; throws UnsupportedLabel otherwise.
Surd form_value(Label m);

/// Canonical symmetric bilinear form on the span of the simple roots.
class FormMatrix {
 public:
  explicit FormMatrix(const CoxeterGraph& graph);
  const Matrix& matrix() const { return entries_; }
  const Surd& operator()(int i, int j) const { return entries_(i, j); }
  int size() const { return static_cast<int>(entries_.rows()); }

 private:
  Matrix entries_;
};

/// x^T B y, exactly. Throws DimensionMismatch.
Surd bilinear(const Matrix& form, const Vector& x, const Vector& y);
inline Surd bilinear(const FormMatrix& form, const Vector& x, const Vector& y) {
  return bilinear(form.matrix(), x, y);
}

Vector unit_vector(int n, int position);

struct GeneratorTag {
  enum class Kind { simple, folded };
  Kind kind = Kind::simple;
  int index = 0;  // vertex position, or folded generator number

  static GeneratorTag simple(int position) { return {Kind::simple, position}; }
  static GeneratorTag folded(int k) { return {Kind::folded, k}; }
  friend bool operator==(const GeneratorTag&, const GeneratorTag&) = default;
  friend auto operator<=>(const GeneratorTag&, const GeneratorTag&) = default;
};

/// Generator sequence, leftmost factor first: [a, b] denotes the element a*b.
using Word = std::vector<GeneratorTag>;

/// A group element as a witness word together with its exact action on V. Equality is
/// equality of matrices; the word is only a witness.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Word word, Matrix matrix, Matrix inverse);
  static GroupElement identity(int n);

  const Word& word() const { return word_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse_matrix() const { return inverse_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }

  GroupElement inverse() const;
  Vector apply(const Vector& x) const;
  bool is_identity() const { return coxfold::is_identity(matrix_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  Word word_;
  Matrix matrix_;
  Matrix inverse_;
};

/// Action of a generator stored as the rows where it differs from the identity.
class SparseAction {
 public:
  SparseAction() = default;
  explicit SparseAction(const Matrix& m);
  Vector apply(const Vector& x) const;

 private:
  struct Row {
    int index;
    std::vector<std::pair<int, Surd>> terms;
  };
  std::vector<Row> rows_;
};

/// Geometric representation of W on the span of the simple roots.
class CanonicalRepresentation {
 public:
  explicit CanonicalRepresentation(const CoxeterGraph& graph);

  const CoxeterGraph& graph() const { return graph_; }
  const FormMatrix& form() const { return form_; }
  int dimension() const { return graph_.size(); }
  const GroupElement& simple_reflection(int position) const {
    return reflections_.at(static_cast<size_t>(position));
  }
  const SparseAction& simple_action(int position) const {
    return actions_.at(static_cast<size_t>(position));
  }
  Vector simple_root(int position) const { return unit_vector(dimension(), position); }
  /// Product of simple reflections; folded tags are rejected.
  GroupElement element(const Word& word) const;

 private:
  CoxeterGraph graph_;
  FormMatrix form_;
  std::vector<GroupElement> reflections_;
  std::vector<SparseAction> actions_;
};

/// sigma_s as a group element; throws UnsupportedLabel when a label in the row of s has no
/// exact form value.
GroupElement simple_reflection_matrix(const CoxeterGraph& graph, int position);

/// How a root was reached: root = word(start vector number `start`).
struct RootWitness {
  Word word;
  int start = 0;
};

struct Root {
  Vector coords;
  int depth = 0;  // -1 when not known
  Sign sign = Sign::positive;
};

/// Positive roots found by breadth-first search, keyed by exact coordinates.
class RootSet {
 public:
  struct Entry {
    Vector coords;
    int depth = 0;
    std::vector<RootWitness> witnesses;  // at most two, distinct words
  };

  RootSet() = default;
  RootSet(int dimension, std::vector<Entry> entries, int depth_reached, bool complete);

  int dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  std::optional<std::size_t> find(const Vector& coords) const;
  bool contains(const Vector& coords) const { return find(coords).has_value(); }
  int depth_reached() const { return depth_reached_; }
  bool complete() const { return complete_; }
  /// Indices ordered by (depth, lexicographic coordinates).
  std::vector<std::size_t> sorted_order() const;
  Root root(std::size_t i) const { return {entries_[i].coords, entries_[i].depth, Sign::positive}; }

 private:
  int dimension_ = 0;
  std::vector<Entry> entries_;
  std::map<Vector, std::size_t, VectorLess> index_;
  int depth_reached_ = 0;
  bool complete_ = false;
};

struct Generator {
  GeneratorTag tag;
  SparseAction action;
};

struct SearchLimits {
  int max_depth = 12;
  std::size_t node_cap = 2'000'000;
};

/// Layered search from `starts` keeping positive images only. A layer beyond max_depth is
/// probed to decide completeness and then discarded. Throws InvariantViolation when an
/// image has mixed signs and CapExceeded past the node cap.
RootSet positive_orbit_search(int dimension, const std::vector<Vector>& starts,
                              const std::vector<Generator>& generators, const SearchLimits& limits);

RootSet enumerate_positive_roots(const CanonicalRepresentation& rep, int max_depth,
                                 std::size_t node_cap = SearchLimits{}.node_cap);

/// The reflection w s w^{-1} attached to entry i through its first witness.
GroupElement reflection_of(const CanonicalRepresentation& rep, const RootSet& roots, std::size_t i,
                           std::size_t witness = 0);
/// The same reflection from the formula x -> x - <alpha, x> alpha.
Matrix reflection_matrix(const FormMatrix& form, const Vector& alpha);

/// Roots supported inside the position set X.
RootSet restrict_to_subset(const RootSet& roots, const std::vector<int>& positions);

/// w(root) with recomputed sign and unknown depth; throws InvariantViolation on mixed signs.
Root act(const GroupElement& w, const Root& root);

/// Coordinates of g.x for a vertex permutation g: (g.x)[g(s)] = x[s].
Vector permute(const std::vector<int>& images, const Vector& x);

/// Positions of nonzero coordinates.
std::vector<int> support(const Vector& x);

}  // namespace coxfold

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxfold/catalog.hpp"
#include "coxfold/graph.hpp"
#include "coxfold/symmetry.hpp"

namespace coxfold {

/// Recognized type of a connected Coxeter graph.
struct GraphType {
  Family family = Family::unknown;
  int rank = 0;  // I2(p): p; infinite families: truncation size
  /// relabeling[k] = input position of the vertex at catalog position k. Empty when the
  /// family is unknown.
  std::vector<int> relabeling;

  std::string name() const { return family_name(family, rank); }
  bool known() const { return family != Family::unknown; }
};

/// Decision tree over cycles, valences, branch lengths and labels, followed by an
/// isomorphism onto the catalog representative. Graphs carrying truncation metadata are
/// reported as their infinite family. Throws Error on a disconnected graph.
GraphType recognize(const CoxeterGraph& graph);

/// Every relabeling onto the catalog representative (one per automorphism).
std::vector<std::vector<int>> all_relabelings(const CoxeterGraph& graph, const GraphType& type);

/// True when every connected component of the full subgraph on `positions` is of
/// spherical type.
bool spherical_check(const CoxeterGraph& graph, const std::vector<int>& positions);

enum class PairCase { i = 1, ii, iii, iv, v, vi, vii, viii, ix, x };
std::string case_tag(PairCase c);

struct ClassificationVerdict {
  std::optional<PairCase> match;
  int parameter = 0;        // the m of the matched case
  bool trivial_group = false;
  std::string graph_name;
  std::string folded_name;  // expected folded graph, when matched
  std::string reason;       // why no case matched

  /// Matched a listed pair, or the group is trivial.
  bool admissible() const { return match.has_value() || trivial_group; }
};

/// Membership in the list of admissible pairs for a connected graph whose vertex orbits
/// are all finite. A trivial group is reported as admissible without a case tag.
ClassificationVerdict classify_pair(const CoxeterGraph& graph, const SymmetryGroup& group);

/// classify_pair after dropping infinite orbits and splitting into components; the
/// result is admissible iff every component with a nontrivial group matches.
struct ReducedClassification {
  std::vector<ClassificationVerdict> components;
  bool admissible() const;
};
ReducedClassification classify_reduced(const CoxeterGraph& graph, const SymmetryGroup& group);

}  // namespace coxfold

#pragma once

#include <cstddef>
#include <vector>

#include "coxfold/graph.hpp"
#include "coxfold/linalg.hpp"

// Reference computations that share no code with the root, folding or verification
// modules. Tests and the acceptance run compare against them.
namespace coxfold::oracle {

/// Transpositions in S_{n+1}, counted by walking every permutation. These are the
/// reflections of W(A_n), so the count equals |Phi+(A_n)|.
std::size_t symmetric_group_transpositions(int n);

/// Order of W(F4) and its number of reflections, by closing the standard rational
/// realization of the four generators.
struct GroupCount {
  std::size_t order = 0;
  std::size_t reflections = 0;
};
GroupCount f4_reflection_group();

/// Dihedral group of order 2m as pairs (rotation k, flip): the reflections are the m
/// flipped elements and the longest element has length m.
GroupCount dihedral_group(int m);

/// Positive definiteness of the Gram matrix by leading principal minors, computed
/// exactly by elimination. Labels must have exact form values.
bool gram_positive_definite(const CoxeterGraph& graph);

/// Label-preservation scan of a position map over every vertex pair.
bool preserves_labels(const CoxeterGraph& graph, const std::vector<int>& images);

/// Orbit of each position under the group generated by `generators`, by repeated
/// application until nothing new appears.
std::vector<std::vector<int>> brute_orbits(int n, const std::vector<std::vector<int>>& generators);

}  // namespace coxfold::oracle

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxfold/roots.hpp"
#include "coxfold/symmetry.hpp"

namespace coxfold {

/// Longest element of the parabolic subgroup W_X by greedy ascent: right-multiply by any
/// s in X with w(alpha_s) > 0 until none is left. The result is checked to be an
/// involution sending every positive root of W_X to a negative one. Throws Error when X
/// is not spherical.
GroupElement longest_element(const CanonicalRepresentation& rep, const std::vector<int>& X);

/// One generator u_X of the fixed subgroup W^G.
struct FoldedGenerator {
  std::vector<int> orbit;  // positions of X
  GroupElement longest;    // u_X as a word over simple reflections
  Vector alpha_hat;        // sum of alpha_s over X
  SparseAction action;
};

struct OrderPaths {
  std::optional<Label> from_form;    // normalized form value test
  std::optional<Label> from_powers;  // first k with (u_X u_Y)^k = 1, up to the cap
};

/// Both ways of computing the order of u_X u_Y. The power iteration is skipped when
/// the form value already shows the order is infinite.
OrderPaths folded_order_paths(const FormMatrix& form, const FoldedGenerator& x,
                              const FoldedGenerator& y, int cap);

/// Order of u_X u_Y. Throws InvariantViolation if the two paths disagree and
/// CapExceeded if neither resolves.
Label folded_order(const FormMatrix& form, const FoldedGenerator& x, const FoldedGenerator& y,
                   int cap = 1000);

struct FoldedSystem {
  OrbitPartition orbits;
  std::vector<FoldedGenerator> generators;  // one per spherical finite orbit, in orbit order
  std::vector<std::vector<int>> non_spherical;  // finite orbits left out, as positions
  std::vector<std::vector<Label>> folded_matrix;
  CoxeterGraph folded_graph;  // vertex k+1 stands for generators[k]
  std::string folded_name;    // recognized type, components joined by " + "
};

FoldedSystem fold(const CanonicalRepresentation& rep, const SymmetryGroup& group,
                  int order_cap = 1000);

/// Positive folded roots by search from the alpha_hat vectors under the u_X actions, in
/// the coordinates of V. Witness words use folded generator tags.
RootSet enumerate_folded_roots(const FoldedSystem& folded, const SearchLimits& limits);

/// One G-orbit of positive roots, as indices into a RootSet.
struct RootOrbit {
  std::vector<std::size_t> members;
  std::size_t representative = 0;  // lexicographically least member
};

struct OrbitDecomposition {
  std::vector<RootOrbit> orbits;  // ordered by (depth, coordinates) of the representative
  std::vector<std::size_t> orbit_of;  // root index -> orbit number
};

OrbitDecomposition root_orbits(const RootSet& roots, const SymmetryGroup& group);

/// w(x) for a word whose letters are folded generator tags.
Vector apply_folded_word(const FoldedSystem& folded, const Word& word, const Vector& x);

/// The map F sending a folded root w(alpha_hat_X) to the orbit of w(alpha_s).
struct FMap {
  std::vector<std::optional<std::size_t>> image;  // per folded root; empty when w(alpha_s)
                                                  // lies beyond the enumerated roots
  std::size_t unresolved = 0;
  std::size_t witness_checks = 0;  // second witnesses compared against the first
  std::vector<std::size_t> missed_orbits;  // orbits outside the image
  bool surjective() const { return missed_orbits.empty(); }
};

/// Throws InvariantViolation if two witnesses of one folded root disagree, if the images
/// of alpha_s over X fall in different orbits, or if F is not injective.
FMap compute_F(const FoldedSystem& folded, const RootSet& folded_roots, const RootSet& roots,
               const OrbitDecomposition& orbits);

}  // namespace coxfold

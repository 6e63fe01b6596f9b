#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfold/folding.hpp"
#include "coxfold/roots.hpp"
#include "coxfold/symmetry.hpp"

namespace coxfold {

struct Budget {
  int root_depth = 12;
  int orbit_depth = 16;
  std::size_t closure_cap = SymmetryGroup::kDefaultCap;
  int order_cap = 1000;
  std::size_t node_cap = 2'000'000;
};

/// Pair of vertices in one G-orbit joined by an edge.
struct CommutationViolation {
  int s = 0;
  int t = 0;  // t = g(s)
  Symmetry g;
};

/// First s and g with g(s) != s and m(s, g(s)) != 2, scanning s then the group elements.
std::optional<CommutationViolation> check_orbit_commutation(const CoxeterGraph& graph,
                                                            const SymmetryGroup& group);

/// First group element without a fixed vertex.
std::optional<Symmetry> check_fixed_vertex(const SymmetryGroup& group);

/// A root that refutes the basis property.
struct FailureWitness {
  enum class Kind {
    orbit_pairing,      // g(alpha) != alpha and <alpha, g(alpha)> != 0
    fixed_propagation,  // g(alpha) = alpha, <alpha, beta> not in {0, 1, -1}, g(beta) != beta
  };
  Kind kind = Kind::orbit_pairing;
  Vector root;
  Symmetry g;
  Surd pairing;             // <alpha, g(alpha)>, or <alpha, beta> for fixed_propagation
  std::optional<Vector> other;  // beta for fixed_propagation
  std::string source;       // which probe produced it
};

/// Re-checks the defining conditions of a witness from scratch.
bool witness_is_valid(const FormMatrix& form, const FailureWitness& w);

/// Seeds are tried first, in order, then the enumerated roots by (depth, coordinates).
/// Group elements are scanned in closure order.
std::optional<FailureWitness> witness_search(const FormMatrix& form, const SymmetryGroup& group,
                                             const RootSet& roots,
                                             const std::vector<Vector>& seeds = {});

/// Fixed root alpha and beta with <alpha, beta> not in {0, 1, -1} and g(beta) != beta.
std::optional<FailureWitness> propagation_search(const FormMatrix& form,
                                                 const SymmetryGroup& group, const RootSet& roots);

/// Real-root test by descent: reflect in any s with <alpha_s, x> > 0 until a simple root
/// is reached. Gives up (false) after `step_cap` reflections.
bool is_real_root(const CanonicalRepresentation& rep, const Vector& x, int step_cap = 100000);

/// Seed roots for a fixed-point-free g: sums of simple roots along a shortest path from s
/// to g(s), for each s.
std::vector<Vector> path_seeds(const CoxeterGraph& graph, const Symmetry& g);

/// Word mixing simple and folded tags, expanded to a group element over V.
GroupElement evaluate_word(const CanonicalRepresentation& rep, const FoldedSystem& folded,
                           const Word& word);

/// W^G-orbit of alpha_s, both signs, by breadth-first search over the u_X actions.
struct OrbitSearch {
  struct Reached {
    Word word;  // folded tags
    int depth = 0;
  };
  int start = 0;
  std::map<Vector, Reached, VectorLess> reached;
  bool closed = false;  // no new vectors past the last layer
};

OrbitSearch orbit_search(const FoldedSystem& folded, int dimension, int start, int max_depth,
                         std::size_t node_cap);

struct CoverageEvidence {
  struct Entry {
    Vector root;  // positive root; its negative is checked too
    int start = 0;
    Word word;
    int negative_start = 0;
    Word negative_word;
  };
  std::vector<Entry> covered;
  std::vector<Vector> uncovered;  // positive roots with alpha or -alpha unreached
  bool roots_complete = false;
  int depth_covered = -1;     // every root of depth <= this is covered
  std::size_t discrepancies = 0;  // re-verification failures of covered entries
  bool by_definition = false;     // trivial group
  bool f_bijective = false;       // dual route through F, when the roots are complete
};

/// Orbit coverage of the enumerated positive roots and their negatives, with every
/// witness re-verified by exact matrix application.
CoverageEvidence coverage_check(const CanonicalRepresentation& rep, const SymmetryGroup& group,
                                const FoldedSystem& folded, const RootSet& roots,
                                const Budget& budget);

/// Connected components of the relation <alpha, beta> not in {0, 1, -1} on Phi+ and -Phi+.
struct EquivClasses {
  std::vector<Vector> members;  // positives in RootSet order, then their negatives
  std::vector<std::size_t> class_of;
  std::size_t count = 0;
  bool definitive = false;  // computed on a complete root set
};

EquivClasses equiv_classes(const RootSet& roots, const FormMatrix& form);

struct AffineCertificate {
  struct Translation {
    int s = 0;              // simple root translated
    int part = 1;           // 1: alpha_s + delta in W^G alpha_s; 2: paired with alpha_0
    Word word;              // w with w(alpha_s) = alpha_s + delta, or w(alpha_0) = alpha_s + delta
    Word back_word;         // part 2 only: w' with w'(alpha_s) = alpha_0 + delta
    bool verified = false;  // exact matrix check of the equations, w(delta) = delta and powers
  };
  std::string family;
  Vector delta;
  Vector beta;
  int zero_vertex = 0;    // input position of the affine vertex
  std::vector<int> covering;  // Y, positions of the finite part
  std::vector<Translation> translations;
  bool null_checks = false;  // <alpha_s, delta> = 0 for every s and <alpha_0, beta> = -2

  bool valid() const;
};

/// For tA, tD and tE graphs whose group fixes the affine vertex under some relabeling.
/// Returns nothing when the shape does not apply or a translation is not found.
std::optional<AffineCertificate> affine_certificate(const CanonicalRepresentation& rep,
                                                    const SymmetryGroup& group,
                                                    const FoldedSystem& folded,
                                                    const Budget& budget);

/// w^k(x) = x + k y for k in [-3, 3].
bool power_law_holds(const GroupElement& w, const Vector& x, const Vector& y);

enum class Status { holds, fails, verified_to_depth, certified_affine };
std::string status_name(Status s);

struct ComponentVerdict {
  Status status = Status::holds;
  std::string graph;          // recognized type or vertex list
  std::vector<VertexId> vertices;
  std::size_t group_order = 1;
  std::optional<FailureWitness> witness;
  std::optional<CoverageEvidence> coverage;
  std::optional<AffineCertificate> certificate;
  std::vector<std::vector<int>> folded_orbits;  // orbit of each folded tag in the words above
  int depth = 0;                  // for verified_to_depth
  bool budget_exhausted = false;  // verified_to_depth for lack of budget, not by truncation
  std::vector<std::string> notes;
  std::size_t positive_roots = 0;
  bool roots_complete = false;
};

struct Verdict {
  Status status = Status::holds;
  bool budget_exhausted = false;
  std::vector<VertexId> dropped;  // vertices in infinite orbits
  std::vector<ComponentVerdict> components;
};

ComponentVerdict decide_component(const CoxeterGraph& graph, const SymmetryGroup& group,
                                  const Budget& budget, const std::vector<Vector>& seeds = {});

/// Restricts to finite orbits, splits into components and combines the component
/// verdicts: fails dominates, then depth-bounded, then certified_affine, then holds.
/// Seeds are given over the positions of `graph`; each is passed to the component that
/// contains its support.
Verdict decide(const CoxeterGraph& graph, const SymmetryGroup& group, const Budget& budget = {},
               const std::vector<Vector>& seeds = {});

bool is_positive(Status s);

}  // namespace coxfold

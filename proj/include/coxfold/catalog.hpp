#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxfold/graph.hpp"
#include "coxfold/linalg.hpp"
#include "coxfold/symmetry.hpp"

namespace coxfold {

enum class Family { A, B, D, E, F, G, H, I2, tA, tB, tC, tD, tE, tF, tG, Ainf, iAi, Dinf, unknown };

/// Display name such as "E6", "tD4", "I2(5)", "iAi4".
std::string family_name(Family f, int rank);
bool is_spherical_family(Family f);
bool is_affine_family(Family f);
bool is_infinite_family(Family f);

/// A catalog graph in Bourbaki numbering (affine vertex 0) with its named symmetries.
struct CatalogEntry {
  Family family = Family::unknown;
  int rank = 0;
  CoxeterGraph graph;
  std::vector<NamedSymmetry> symmetries;

  const NamedSymmetry& symmetry(const std::string& name) const;
  std::string name() const { return family_name(family, rank); }
};

/// Throws CatalogError for out-of-range parameters. For the infinite families `rank` is the
/// truncation size.
CatalogEntry catalog_graph(Family f, int rank);
/// Accepts compact tokens ("E6", "tD4", "I2(5)", "iAi4", "Dinf8") and the long forms
/// "tilde-D 4" and "D-infinity, truncation 8".
CatalogEntry catalog_graph(const std::string& name);

struct ParsedToken {
  Family family = Family::unknown;
  int rank = 0;
  std::string symmetry;  // suffix after ':', empty for the trivial group
};
ParsedToken parse_catalog_token(const std::string& token);

/// A catalog graph with the group generated by the symmetries named in the suffix.
/// "g1g2" selects g1 and g2, "gg" selects g and its conjugate g'.
SymmetricGraph catalog_pair(const std::string& token);

/// Greatest root of A_n, D_n, E6, E7, E8 in catalog numbering; throws CatalogError for
/// other families.
Vector highest_root(Family f, int rank);

/// delta = alpha_0 + beta for tA, tD, tE, indexed by position in the affine catalog graph
/// (vertex 0 first).
Vector null_root(Family f, int rank);

/// Finite family obtained by deleting vertex 0 from an affine family (tA_n -> A_n, ...).
Family finite_part(Family affine);

}  // namespace coxfold

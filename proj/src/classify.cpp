#include <algorithm>
#include <set>

#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

struct ListedGroup {
  PairCase tag;
  int parameter;
  std::vector<std::string> generators;
  std::string folded;
};

std::vector<ListedGroup> listed_groups(Family f, int n) {
  switch (f) {
    case Family::A:
      if (n >= 3 && n % 2 == 1) {
        const int m = (n - 1) / 2;
        return {{PairCase::i, m, {"g"}, family_name(Family::B, m + 1)}};
      }
      return {};
    case Family::D: {
      std::vector<ListedGroup> out{{PairCase::ii, n, {"g"}, family_name(Family::B, n - 1)}};
      if (n == 4) {
        out.push_back({PairCase::iii, 4, {"g1"}, family_name(Family::G, 2)});
        out.push_back({PairCase::iii, 4, {"g1", "g2"}, family_name(Family::G, 2)});
      }
      return out;
    }
    case Family::E:
      if (n == 6) return {{PairCase::iv, 6, {"g"}, family_name(Family::F, 4)}};
      return {};
    case Family::tA:
      if (n >= 3 && n % 2 == 1) {
        const int m = (n - 1) / 2;
        return {{PairCase::v, m, {"g"},
                 m >= 2 ? family_name(Family::tC, m + 1) : family_name(Family::tB, 2)}};
      }
      return {};
    case Family::tD: {
      std::vector<ListedGroup> out{{PairCase::vi, n, {"g"}, family_name(Family::tB, n - 1)}};
      if (n == 4) {
        out.push_back({PairCase::vii, 4, {"g1"}, family_name(Family::tG, 2)});
        out.push_back({PairCase::vii, 4, {"g1", "g2"}, family_name(Family::tG, 2)});
      }
      return out;
    }
    case Family::tE:
      if (n == 6) return {{PairCase::viii, 6, {"g"}, family_name(Family::tF, 4)}};
      return {};
    case Family::iAi:
      return {{PairCase::ix, n, {"g"}, "Binf"}};
    case Family::Dinf:
      return {{PairCase::x, n, {"g"}, "Binf"}};
    default:
      return {};
  }
}

std::set<Symmetry> element_set(const SymmetryGroup& g) {
  return {g.elements().begin(), g.elements().end()};
}

}  // namespace

std::string case_tag(PairCase c) {
  static const char* tags[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
  return tags[static_cast<int>(c) - 1];
}

ClassificationVerdict classify_pair(const CoxeterGraph& graph, const SymmetryGroup& group) {
  ClassificationVerdict out;
  const GraphType type = recognize(graph);
  out.graph_name = type.name();
  if (group.is_trivial()) {
    out.trivial_group = true;
    out.reason = "trivial group";
    return out;
  }
  const OrbitPartition orbits = vertex_orbits(group);
  for (bool finite : orbits.finite)
    if (!finite) {
      out.reason = "group has infinite vertex orbits";
      return out;
    }
  const auto listed = listed_groups(type.family, type.rank);
  if (listed.empty()) {
    out.reason = type.known() ? out.graph_name + " admits no admissible symmetry group"
                              : "graph type not recognized";
    return out;
  }

  const CatalogEntry entry = catalog_graph(type.family, type.rank);
  std::vector<std::set<Symmetry>> candidates;
  for (const ListedGroup& lg : listed) {
    std::vector<NamedSymmetry> gens;
    for (const auto& name : lg.generators) gens.push_back(entry.symmetry(name));
    candidates.push_back(element_set(SymmetryGroup(entry.graph, gens)));
  }

  // Conjugating by every relabeling onto the catalog graph realizes "up to isomorphism".
  for (const auto& r : all_relabelings(graph, type)) {
    std::vector<int> r_inv(r.size());
    for (size_t k = 0; k < r.size(); ++k) r_inv[static_cast<size_t>(r[k])] = static_cast<int>(k);
    std::set<Symmetry> conjugated;
    for (const Symmetry& g : group.elements()) {
      std::vector<int> images(r.size());
      for (size_t k = 0; k < r.size(); ++k) images[k] = r_inv[static_cast<size_t>(g(r[k]))];
      conjugated.insert(Symmetry(std::move(images)));
    }
    for (size_t c = 0; c < candidates.size(); ++c)
      if (conjugated == candidates[c]) {
        out.match = listed[c].tag;
        out.parameter = listed[c].parameter;
        out.folded_name = listed[c].folded;
        out.reason.clear();
        return out;
      }
  }
  out.reason = "group is not conjugate to an admissible group on " + out.graph_name;
  return out;
}

bool ReducedClassification::admissible() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ClassificationVerdict& v) { return v.admissible(); });
}

ReducedClassification classify_reduced(const CoxeterGraph& graph, const SymmetryGroup& group) {
  const SymmetricGraph finite = restrict_to_finite_orbits(graph, group);
  ReducedClassification out;
  for (const auto& piece : connected_components(finite.graph, finite.group))
    out.components.push_back(classify_pair(piece.graph, piece.group));
  return out;
}

}  // namespace coxfold

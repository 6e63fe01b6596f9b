#include "coxfold/report.hpp"

#include <sstream>

namespace coxfold {

namespace {

Json ids_json(const CoxeterGraph& graph, const std::vector<int>& positions) {
  Json out = Json::array();
  for (int p : positions) out.push_back(graph.id(p));
  return out;
}

Json symmetry_json(const CoxeterGraph& graph, const Symmetry& g) { return cycle_string(graph, g); }

std::string orbit_string(const CoxeterGraph& graph, const std::vector<int>& positions) {
  std::string out = "{";
  for (size_t i = 0; i < positions.size(); ++i)
    out += (i ? "," : "") + std::to_string(graph.id(positions[i]));
  return out + "}";
}

Json coverage_json(const CoxeterGraph& graph, const GeneratorOrbits& orbits, const CoverageEvidence& ev) {
  Json out;
  out["by_definition"] = ev.by_definition;
  out["roots_complete"] = ev.roots_complete;
  out["covered"] = ev.covered.size();
  out["uncovered"] = Json::array();
  for (const Vector& x : ev.uncovered) out["uncovered"].push_back(vector_json(x));
  out["depth_covered"] = ev.depth_covered;
  out["discrepancies"] = ev.discrepancies;
  out["f_bijective"] = ev.f_bijective;
  Json witnesses = Json::array();
  for (const auto& e : ev.covered) {
    Json w;
    w["root"] = vector_json(e.root);
    w["start"] = graph.id(e.start);
    w["word"] = word_json(graph, orbits, e.word);
    w["negative_start"] = graph.id(e.negative_start);
    w["negative_word"] = word_json(graph, orbits, e.negative_word);
    witnesses.push_back(std::move(w));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json certificate_json(const CoxeterGraph& graph, const GeneratorOrbits& orbits,
                      const AffineCertificate& c) {
  Json out;
  out["family"] = c.family;
  out["delta"] = vector_json(c.delta);
  out["beta"] = vector_json(c.beta);
  out["affine_vertex"] = graph.id(c.zero_vertex);
  out["null_checks"] = c.null_checks;
  out["covering"] = ids_json(graph, c.covering);
  Json translations = Json::array();
  for (const auto& t : c.translations) {
    Json j;
    j["vertex"] = graph.id(t.s);
    j["part"] = t.part;
    j["word"] = word_json(graph, orbits, t.word);
    if (t.part == 2) j["back_word"] = word_json(graph, orbits, t.back_word);
    j["verified"] = t.verified;
    translations.push_back(std::move(j));
  }
  out["translations"] = std::move(translations);
  out["valid"] = c.valid();
  return out;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        os << pad << key << ":\n";
        render(os, value, indent + 1);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        os << pad << "-\n";
        render(os, value, indent + 1);
      } else {
        os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

Json envelope(const RunInfo& info, Json result) {
  Json out;
  out["tool"] = "coxfold";
  out["version"] = kVersion;
  Json config;
  config["command"] = info.command;
  config["input"] = info.input;
  config["format"] = info.format;
  config["depth"] = info.budget.root_depth;
  config["orbit_depth"] = info.budget.orbit_depth;
  config["cap_closure"] = info.budget.closure_cap;
  config["cap_order"] = info.budget.order_cap;
  config["cap_nodes"] = info.budget.node_cap;
  out["config"] = std::move(config);
  out["result"] = std::move(result);
  return out;
}

GeneratorOrbits generator_orbits(const FoldedSystem& folded) {
  GeneratorOrbits out;
  for (const auto& g : folded.generators) out.push_back(g.orbit);
  return out;
}

std::string tag_string(const CoxeterGraph& graph, const GeneratorOrbits& orbits, const GeneratorTag& tag) {
  if (tag.kind == GeneratorTag::Kind::simple) return "s" + std::to_string(graph.id(tag.index));
  return "u" + orbit_string(graph, orbits.at(static_cast<size_t>(tag.index)));
}

Json word_json(const CoxeterGraph& graph, const GeneratorOrbits& orbits, const Word& word) {
  Json out = Json::array();
  for (const auto& tag : word) out.push_back(tag_string(graph, orbits, tag));
  return out;
}

Json vector_json(const Vector& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x(i).to_string());
  return out;
}

Json roots_json(const CoxeterGraph& graph, const RootSet& roots) {
  Json out;
  out["graph"] = graph.name();
  out["vertices"] = graph.vertices();
  out["count"] = roots.size();
  out["complete"] = roots.complete();
  out["depth_reached"] = roots.depth_reached();
  Json list = Json::array();
  for (std::size_t i : roots.sorted_order()) {
    Json r;
    r["coords"] = vector_json(roots[i].coords);
    r["depth"] = roots[i].depth;
    list.push_back(std::move(r));
  }
  out["roots"] = std::move(list);
  return out;
}

Json fold_json(const CoxeterGraph& graph, const FoldedSystem& folded, const RootSet& folded_roots) {
  Json out;
  out["graph"] = graph.name();
  out["vertices"] = graph.vertices();
  Json orbits = Json::array();
  for (size_t k = 0; k < folded.orbits.orbits.size(); ++k) {
    Json o;
    o["vertices"] = ids_json(graph, folded.orbits.orbits[k]);
    o["finite"] = static_cast<bool>(folded.orbits.finite[k]);
    orbits.push_back(std::move(o));
  }
  out["orbits"] = std::move(orbits);
  Json gens = Json::array();
  for (const auto& g : folded.generators) {
    Json j;
    j["orbit"] = ids_json(graph, g.orbit);
    j["longest_word"] = word_json(graph, {}, g.longest.word());
    j["alpha_hat"] = vector_json(g.alpha_hat);
    gens.push_back(std::move(j));
  }
  out["generators"] = std::move(gens);
  Json skipped = Json::array();
  for (const auto& X : folded.non_spherical) skipped.push_back(ids_json(graph, X));
  out["non_spherical_orbits"] = std::move(skipped);
  Json matrix = Json::array();
  for (const auto& row : folded.folded_matrix) {
    Json r = Json::array();
    for (const Label& l : row) r.push_back(l.to_string());
    matrix.push_back(std::move(r));
  }
  out["folded_matrix"] = std::move(matrix);
  out["folded_graph"] = folded.folded_name;
  out["folded_roots"] = folded_roots.size();
  out["folded_roots_complete"] = folded_roots.complete();
  return out;
}

Json orbits_json(const CoxeterGraph& graph, const RootSet& roots, const OrbitDecomposition& orbits,
                 const std::optional<FMap>& f) {
  Json out;
  out["graph"] = graph.name();
  out["vertices"] = graph.vertices();
  out["positive_roots"] = roots.size();
  out["complete"] = roots.complete();
  out["orbit_count"] = orbits.orbits.size();
  Json list = Json::array();
  for (const auto& o : orbits.orbits) {
    Json j;
    j["representative"] = vector_json(roots[o.representative].coords);
    j["size"] = o.members.size();
    list.push_back(std::move(j));
  }
  out["orbits"] = std::move(list);
  if (f) {
    Json fj;
    fj["folded_roots"] = f->image.size();
    fj["unresolved"] = f->unresolved;
    fj["witness_checks"] = f->witness_checks;
    fj["missed_orbits"] = f->missed_orbits.size();
    fj["injective"] = true;
    fj["surjective"] = f->surjective();
    out["F"] = std::move(fj);
  }
  return out;
}

Json witness_json(const CoxeterGraph& graph, const FailureWitness& w) {
  Json out;
  out["kind"] = w.kind == FailureWitness::Kind::orbit_pairing ? "orbit_pairing" : "fixed_propagation";
  out["root"] = vector_json(w.root);
  out["g"] = symmetry_json(graph, w.g);
  out["pairing"] = w.pairing.to_string();
  if (w.other) out["other"] = vector_json(*w.other);
  out["source"] = w.source;
  return out;
}

Json verdict_json(const CoxeterGraph& graph, const SymmetryGroup& group, const Verdict& v) {
  Json out;
  out["graph"] = graph.name();
  out["vertices"] = graph.vertices();
  out["group_order"] = group.order();
  out["status"] = status_name(v.status);
  out["budget_exhausted"] = v.budget_exhausted;
  out["dropped_vertices"] = v.dropped;
  Json comps = Json::array();
  for (const auto& c : v.components) {
    const CoxeterGraph local(c.vertices, {});  // ids only, for rendering
    Json j;
    j["graph"] = c.graph;
    j["vertices"] = c.vertices;
    j["group_order"] = c.group_order;
    j["status"] = status_name(c.status);
    if (c.status == Status::verified_to_depth) {
      j["depth"] = c.depth;
      j["budget_exhausted"] = c.budget_exhausted;
    }
    j["positive_roots"] = c.positive_roots;
    j["roots_complete"] = c.roots_complete;
    if (c.witness) j["witness"] = witness_json(local, *c.witness);
    if (c.coverage) j["coverage"] = coverage_json(local, c.folded_orbits, *c.coverage);
    if (c.certificate) j["certificate"] = certificate_json(local, c.folded_orbits, *c.certificate);
    j["notes"] = c.notes;
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  return out;
}

Json classification_json(const ReducedClassification& c) {
  Json out;
  out["admissible"] = c.admissible();
  Json comps = Json::array();
  for (const auto& v : c.components) {
    Json j;
    j["graph"] = v.graph_name;
    j["trivial_group"] = v.trivial_group;
    if (v.match) {
      j["case"] = case_tag(*v.match);
      j["parameter"] = v.parameter;
      j["folded"] = v.folded_name;
    } else if (!v.trivial_group) {
      j["reason"] = v.reason;
    }
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace coxfold

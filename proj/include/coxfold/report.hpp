#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "coxfold/classify.hpp"
#include "coxfold/folding.hpp"
#include "coxfold/verify.hpp"

namespace coxfold {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// The configuration echoed into every report.
struct RunInfo {
  std::string command;
  std::string input;
  std::string format = "json";
  Budget budget;
};

/// {"tool", "version", "config", "result"}; byte-identical for identical inputs.
Json envelope(const RunInfo& info, Json result);

/// Orbits of the folded generators, in generator order.
using GeneratorOrbits = std::vector<std::vector<int>>;
GeneratorOrbits generator_orbits(const FoldedSystem& folded);

/// "s3" for a simple tag (vertex id), "u{1,6}" for a folded tag (orbit ids).
std::string tag_string(const CoxeterGraph& graph, const GeneratorOrbits& orbits, const GeneratorTag& tag);
Json word_json(const CoxeterGraph& graph, const GeneratorOrbits& orbits, const Word& word);
Json vector_json(const Vector& x);

Json roots_json(const CoxeterGraph& graph, const RootSet& roots);
Json fold_json(const CoxeterGraph& graph, const FoldedSystem& folded, const RootSet& folded_roots);
Json orbits_json(const CoxeterGraph& graph, const RootSet& roots, const OrbitDecomposition& orbits,
                 const std::optional<FMap>& f);
Json witness_json(const CoxeterGraph& graph, const FailureWitness& w);
Json verdict_json(const CoxeterGraph& graph, const SymmetryGroup& group, const Verdict& v);
Json classification_json(const ReducedClassification& c);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace coxfold

#include <doctest.h>

#include "coxfold/catalog.hpp"
#include "coxfold/report.hpp"

using namespace coxfold;

namespace {

std::string check_report(const std::string& token) {
  const SymmetricGraph p = catalog_pair(token);
  const Verdict v = decide(p.graph, p.group);
  return envelope({"check", token, "json", {}}, verdict_json(p.graph, p.group, v)).dump(2);
}

}  // namespace

TEST_CASE("identical configurations give byte-identical reports") {
  for (const char* token : {"E6:g", "tD4:g1", "tE6:rot3", "Dinf6:g"}) {
    CAPTURE(token);
    CHECK(check_report(token) == check_report(token));
  }
}

TEST_CASE("the envelope embeds the configuration") {
  Budget b;
  b.root_depth = 7;
  const Json j = envelope({"roots", "D4", "text", b}, Json::object());
  CHECK(j["tool"] == "coxfold");
  CHECK(j["version"] == kVersion);
  CHECK(j["config"]["depth"] == 7);
  CHECK(j["config"]["input"] == "D4");
  const std::string first_key = j.begin().key();
  CHECK(first_key == "tool");
}

TEST_CASE("root report") {
  const CoxeterGraph d4 = catalog_graph("D4").graph;
  const Json j = roots_json(d4, enumerate_positive_roots(CanonicalRepresentation(d4), 99));
  CHECK(j["count"] == 12);
  CHECK(j["complete"] == true);
  CHECK(j["roots"][0]["coords"] == Json::array({"0", "0", "0", "1"}));
}

TEST_CASE("words render with vertex ids") {
  const SymmetricGraph p = catalog_pair("E6:g");
  const FoldedSystem f = fold(CanonicalRepresentation(p.graph), p.group);
  const GeneratorOrbits orbits = generator_orbits(f);
  CHECK(tag_string(p.graph, orbits, GeneratorTag::simple(2)) == "s3");
  CHECK(tag_string(p.graph, orbits, GeneratorTag::folded(0)) == "u{1,6}");
}

TEST_CASE("text rendering") {
  Json j;
  j["a"] = 1;
  j["b"]["c"] = "x";
  j["d"] = Json::array({1, 2});
  CHECK(render_text(j) == "a: 1\nb:\n  c: x\nd:\n  - 1\n  - 2\n");
}

TEST_CASE("witness report for a rejected pair") {
  const SymmetricGraph p = catalog_pair("tD4:rot4");
  const Verdict v = decide(p.graph, p.group);
  const Json j = verdict_json(p.graph, p.group, v);
  CHECK(j["status"] == "fails");
  CHECK(j["components"][0]["witness"]["pairing"] == "-2");
}

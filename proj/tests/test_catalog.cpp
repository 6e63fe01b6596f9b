#include <doctest.h>

#include "coxfold/catalog.hpp"
#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/roots.hpp"
#include "generators.hpp"

using namespace coxfold;
using coxfold::testing::seeded;

TEST_CASE("token parsing") {
  const ParsedToken t = parse_catalog_token("tD4:g1g2");
  CHECK(t.family == Family::tD);
  CHECK(t.rank == 4);
  CHECK(t.symmetry == "g1g2");
  CHECK(parse_catalog_token("I2(5)").rank == 5);
  CHECK(catalog_graph("tilde-D 4").graph == catalog_graph("tD4").graph);
  CHECK(catalog_graph("D-infinity, truncation 8").graph == catalog_graph("Dinf8").graph);
  CHECK_THROWS_AS(catalog_graph("E9"), CatalogError);
  CHECK_THROWS_AS(catalog_graph("D3"), CatalogError);
  CHECK_THROWS_AS(catalog_pair("E6:h"), CatalogError);
}

TEST_CASE("recognition of every catalog graph") {
  const char* names[] = {"A1",  "A7",  "B2",  "B5",  "D4",    "D7",    "E6",  "E7",  "E8",  "F4",
                         "G2",  "H3",  "H4",  "I2(5)", "tA1", "tA2",   "tA6", "tB2", "tB4", "tC3",
                         "tC5", "tD4", "tD7", "tE6", "tE7",   "tE8",   "tF4", "tG2", "iAi3", "Dinf6"};
  for (const char* name : names) {
    CAPTURE(name);
    const CatalogEntry e = catalog_graph(name);
    const GraphType t = recognize(e.graph);
    CHECK(t.name() == e.name());
    CHECK(t.relabeling.size() == static_cast<size_t>(e.graph.size()));
  }
}

TEST_CASE("recognition is independent of vertex ids") {
  auto rng = seeded(40);
  for (const char* name : {"A6", "B4", "D6", "E7", "F4", "H4", "tA4", "tB3", "tC4", "tD6", "tE7", "tG2"}) {
    for (int trial = 0; trial < 3; ++trial) {
      CAPTURE(name);
      const CoxeterGraph g = coxfold::testing::shuffled(rng, catalog_graph(name).graph);
      CHECK(recognize(g).name() == name);
    }
  }
}

TEST_CASE("unknown graphs") {
  const CoxeterGraph star({1, 2, 3, 4, 5, 6},
                          {{1, 2, Label(3)}, {1, 3, Label(3)}, {1, 4, Label(3)}, {1, 5, Label(3)}, {1, 6, Label(3)}});
  CHECK_FALSE(recognize(star).known());
  CHECK_THROWS_AS(recognize(CoxeterGraph({1, 2}, {})), Error);
}

TEST_CASE("spherical check") {
  const CoxeterGraph g = catalog_graph("tD4").graph;
  CHECK(spherical_check(g, {1, 2, 3, 4}));
  CHECK_FALSE(spherical_check(g, {0, 1, 2, 3, 4}));
  CHECK(spherical_check(g, {0, 1}));
}

TEST_CASE("highest and null roots") {
  const CoxeterGraph e6 = catalog_graph("E6").graph;
  const Vector h = highest_root(Family::E, 6);
  CHECK(bilinear(FormMatrix(e6), h, h) == Surd(2));
  const Vector d = null_root(Family::tE, 6);
  Vector expected(7);
  expected << Surd(1), Surd(1), Surd(2), Surd(2), Surd(3), Surd(2), Surd(1);
  CHECK(d == expected);
  CHECK_THROWS_AS(highest_root(Family::B, 3), CatalogError);
}

TEST_CASE("classification of listed pairs") {
  const std::pair<const char*, const char*> cases[] = {
      {"A5:g", "i"},     {"D5:g", "ii"},   {"D4:g1g2", "iii"}, {"E6:g", "iv"},   {"tA5:g", "v"},
      {"tD5:g", "vi"},   {"tD4:g1", "vii"}, {"tE6:g", "viii"}, {"iAi3:g", "ix"}, {"Dinf6:g", "x"}};
  for (const auto& [token, tag] : cases) {
    CAPTURE(token);
    const SymmetricGraph p = catalog_pair(token);
    const ClassificationVerdict v = classify_pair(p.graph, p.group);
    REQUIRE(v.match);
    CHECK(case_tag(*v.match) == tag);
  }
}

TEST_CASE("classification rejects unlisted pairs") {
  for (const char* token : {"A4:g", "tA4:g", "tA3:rot", "tD4:ends", "tD6:rev", "tD4:rot4", "tE6:rot3", "tE7:g"}) {
    CAPTURE(token);
    const SymmetricGraph p = catalog_pair(token);
    const ClassificationVerdict v = classify_pair(p.graph, p.group);
    CHECK_FALSE(v.admissible());
    CHECK_FALSE(v.reason.empty());
  }
  const SymmetricGraph e8 = catalog_pair("E8");
  CHECK(classify_pair(e8.graph, e8.group).admissible());
  CHECK(classify_pair(e8.graph, e8.group).trivial_group);
}

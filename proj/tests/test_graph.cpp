#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxfold/catalog.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/graph.hpp"
#include "coxfold/oracles.hpp"
#include "coxfold/symmetry.hpp"
#include "generators.hpp"

using namespace coxfold;
using coxfold::testing::seeded;
using coxfold::testing::uniform;

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(CoxeterGraph({1, 1}, {}), Error);
  CHECK_THROWS_AS(CoxeterGraph({1, 2}, {{1, 3, Label(3)}}), Error);
  CHECK_THROWS_AS(CoxeterGraph({1, 2}, {{1, 1, Label(3)}}), Error);
  CHECK_THROWS_AS(CoxeterGraph({1, 2}, {{1, 2, Label(3)}, {2, 1, Label(4)}}), Error);
  CHECK_THROWS_AS(Label(0), Error);
  CHECK_NOTHROW(CoxeterGraph({1, 2}, {{1, 2, Label(3)}, {2, 1, Label(3)}}));
}

TEST_CASE("label 2 edges are dropped and ids are sorted") {
  const CoxeterGraph g({5, -1, 3}, {{5, -1, Label(2)}, {3, 5, Label::infinity()}});
  CHECK(g.vertices() == std::vector<VertexId>{-1, 3, 5});
  CHECK(g.edges().size() == 1);
  CHECK(g.label_of(3, 5).is_infinite());
  CHECK(g.label_of(-1, 5) == Label(2));
  CHECK(g.label_of(3, 3) == Label(1));
}

TEST_CASE("components and paths") {
  const CoxeterGraph g({1, 2, 3, 4, 5}, {{1, 2, Label(3)}, {2, 3, Label(3)}, {4, 5, Label(4)}});
  CHECK(g.components() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
  CHECK_FALSE(g.connected());
  CHECK(g.shortest_path(0, 2) == std::vector<int>{0, 1, 2});
  CHECK(g.shortest_path(0, 4).empty());
  const CoxeterGraph sub = g.induced({3, 4});
  CHECK(sub.vertices() == std::vector<VertexId>{4, 5});
  CHECK(sub.label_of(4, 5) == Label(4));
}

TEST_CASE("automorphism counts of catalog graphs") {
  CHECK(automorphisms(catalog_graph("A5").graph).size() == 2);
  CHECK(automorphisms(catalog_graph("D4").graph).size() == 6);
  CHECK(automorphisms(catalog_graph("D5").graph).size() == 2);
  CHECK(automorphisms(catalog_graph("E6").graph).size() == 2);
  CHECK(automorphisms(catalog_graph("E7").graph).size() == 1);
  CHECK(automorphisms(catalog_graph("tD4").graph).size() == 24);
  CHECK(automorphisms(catalog_graph("tA5").graph).size() == 12);
  CHECK(automorphisms(catalog_graph("tE6").graph).size() == 6);
  CHECK(automorphisms(catalog_graph("B3").graph).size() == 1);
}

TEST_CASE("automorphisms preserve labels by the oracle scan") {
  auto rng = seeded(10);
  for (int trial = 0; trial < 40; ++trial) {
    const CoxeterGraph g = coxfold::testing::random_graph(rng, uniform(rng, 2, 7));
    for (const auto& a : automorphisms(g)) CHECK(oracle::preserves_labels(g, a));
  }
}

TEST_CASE("symmetry validation") {
  const CoxeterGraph a3 = catalog_graph("A3").graph;
  CHECK_NOTHROW(validate_symmetry(a3, std::map<VertexId, VertexId>{{1, 3}, {3, 1}}));
  CHECK_THROWS_AS(validate_symmetry(a3, std::map<VertexId, VertexId>{{1, 2}, {2, 1}}), SymmetryError);
  CHECK_THROWS_AS(validate_symmetry(a3, std::vector<int>{0, 0, 1}), SymmetryError);
  const CoxeterGraph b3 = catalog_graph("B3").graph;
  CHECK_THROWS_AS(validate_symmetry(b3, std::map<VertexId, VertexId>{{1, 3}, {3, 1}}), SymmetryError);
}

TEST_CASE("symmetry algebra") {
  const Symmetry a(std::vector<int>{1, 2, 0});
  const Symmetry b(std::vector<int>{1, 0, 2});
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK_FALSE(a.has_fixed_point());
  CHECK(b.has_fixed_point());
  CHECK_THROWS_AS(Symmetry(std::vector<int>{0, 2}), SymmetryError);
}

TEST_CASE("group closure orders") {
  CHECK(catalog_pair("D4:g1").group.order() == 3);
  CHECK(catalog_pair("D4:g1g2").group.order() == 6);
  CHECK(catalog_pair("tD4:rot4").group.order() == 4);
  CHECK(catalog_pair("tE6:rot3").group.order() == 3);
  CHECK(catalog_pair("E6").group.is_trivial());
  const SymmetricGraph p = catalog_pair("tD4:g1g2");
  CHECK_THROWS_AS(SymmetryGroup(p.graph, p.group.generators(), 5), CapExceeded);
}

TEST_CASE("closure order against a brute permutation count") {
  auto rng = seeded(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = uniform(rng, 3, 7);
    const CoxeterGraph g = coxfold::testing::random_graph(rng, n, true);
    const auto autos = automorphisms(g);
    std::vector<NamedSymmetry> gens;
    for (const auto& a : autos) gens.push_back({"a", Symmetry(a)});
    const SymmetryGroup full(g, gens);
    CHECK(full.order() == autos.size());
  }
}

TEST_CASE("vertex orbits against the brute oracle") {
  auto rng = seeded(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform(rng, 3, 8);
    const CoxeterGraph g = coxfold::testing::random_graph(rng, n, trial % 2 == 0);
    auto autos = automorphisms(g);
    std::shuffle(autos.begin(), autos.end(), rng);
    autos.resize(std::min<std::size_t>(autos.size(), 2));
    std::vector<NamedSymmetry> gens;
    for (const auto& a : autos) gens.push_back({"a", Symmetry(a)});
    const SymmetryGroup group(g, gens);
    const OrbitPartition orbits = vertex_orbits(group);
    const auto brute = oracle::brute_orbits(n, autos);
    for (int p = 0; p < n; ++p) CHECK(orbits.orbits[static_cast<size_t>(orbits.index[static_cast<size_t>(p)])] == brute[static_cast<size_t>(p)]);
    std::set<int> all;
    for (const auto& o : orbits.orbits) all.insert(o.begin(), o.end());
    CHECK(all.size() == static_cast<size_t>(n));
  }
}

TEST_CASE("finite orbit restriction") {
  const SymmetricGraph e6 = catalog_pair("E6:g");
  const SymmetricGraph same = restrict_to_finite_orbits(e6.graph, e6.group);
  CHECK(same.graph == e6.graph);
  CHECK(same.group.order() == 2);

  const CoxeterGraph g({1, 2, 3, 4}, {{1, 2, Label(3)}, {2, 3, Label(3)}, {3, 4, Label(3)}});
  const SymmetryGroup group(g, {}, SymmetryGroup::kDefaultCap, {3});
  const SymmetricGraph r = restrict_to_finite_orbits(g, group);
  CHECK(r.graph.vertices() == std::vector<VertexId>{1, 2, 3});
  const SymmetricGraph again = restrict_to_finite_orbits(r.graph, r.group);
  CHECK(again.graph == r.graph);
}

TEST_CASE("components carry their stabilizers") {
  const CoxeterGraph g({1, 2, 3, 4, 5, 6}, {{1, 2, Label(3)}, {2, 3, Label(3)}, {4, 5, Label(3)}, {5, 6, Label(3)}});
  const Symmetry flip = validate_symmetry(g, std::map<VertexId, VertexId>{{1, 3}, {3, 1}});
  const SymmetryGroup group(g, {{"f", flip}});
  const auto parts = connected_components(g, group);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].group.order() == 2);
  CHECK(parts[1].group.order() == 1);
}

TEST_CASE("cycle strings") {
  const SymmetricGraph e6 = catalog_pair("E6:g");
  CHECK(cycle_string(e6.graph, e6.group.generators()[0].symmetry) == "(1 6)(3 5)");
  CHECK(cycle_string(e6.graph, Symmetry::identity(6)) == "()");
}

#include <doctest.h>

#include "coxfold/catalog.hpp"
#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/folding.hpp"
#include "coxfold/oracles.hpp"

using namespace coxfold;

TEST_CASE("longest element length equals the number of parabolic positive roots") {
  for (const char* name : {"A4", "B3", "D4", "E6", "F4", "H3", "G2"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name).graph;
    const CanonicalRepresentation rep(g);
    std::vector<int> all;
    for (int p = 0; p < g.size(); ++p) all.push_back(p);
    const GroupElement u = longest_element(rep, all);
    CHECK(u.word().size() == enumerate_positive_roots(rep, 1000).size());
    CHECK(is_identity(mul(u.matrix(), u.matrix())));
  }
}

TEST_CASE("longest element of a non-spherical set throws") {
  const CanonicalRepresentation rep(catalog_graph("tA2").graph);
  CHECK_THROWS_AS(longest_element(rep, {0, 1, 2}), Error);
}

TEST_CASE("folded orders agree on both paths") {
  const std::pair<const char*, const char*> cases[] = {{"E6:g", "F4"}, {"D4:g1g2", "G2"}, {"A5:g", "B3"},
                                                       {"tA5:g", "tC3"}, {"tD4:g1g2", "tG2"}};
  for (const auto& [token, expected] : cases) {
    CAPTURE(token);
    const SymmetricGraph p = catalog_pair(token);
    const CanonicalRepresentation rep(p.graph);
    const FoldedSystem f = fold(rep, p.group);
    CHECK(f.folded_name == expected);
    for (size_t i = 0; i < f.generators.size(); ++i)
      for (size_t j = i + 1; j < f.generators.size(); ++j) {
        const OrderPaths paths = folded_order_paths(rep.form(), f.generators[i], f.generators[j], 1000);
        REQUIRE(paths.from_form);
        if (!paths.from_form->is_infinite()) {
          REQUIRE(paths.from_powers);
          CHECK(*paths.from_powers == *paths.from_form);
        }
      }
  }
}

TEST_CASE("E6 folding has a 4 in the folded matrix") {
  const SymmetricGraph p = catalog_pair("E6:g");
  const FoldedSystem f = fold(CanonicalRepresentation(p.graph), p.group);
  int fours = 0;
  for (const auto& row : f.folded_matrix)
    for (const Label& l : row) fours += l == Label(4);
  CHECK(fours == 2);
  CHECK(f.orbits.orbits.size() == 4);
}

TEST_CASE("infinite folded bond") {
  const SymmetricGraph p = catalog_pair("tA3:g");
  const FoldedSystem f = fold(CanonicalRepresentation(p.graph), p.group);
  CHECK(f.folded_name == "tB2");
}

TEST_CASE("non-spherical orbits are reported and skipped") {
  const SymmetricGraph p = catalog_pair("tA3:rot");
  const FoldedSystem f = fold(CanonicalRepresentation(p.graph), p.group);
  CHECK(f.generators.empty());
  CHECK(f.non_spherical.size() == 1);
}

TEST_CASE("folded root counts match the folded type") {
  const std::pair<const char*, std::size_t> cases[] = {{"A3:g", 4}, {"A5:g", 9}, {"D4:g", 9}, {"D5:g", 16},
                                                       {"D4:g1g2", 6}, {"E6:g", 24}};
  for (const auto& [token, count] : cases) {
    CAPTURE(token);
    const SymmetricGraph p = catalog_pair(token);
    const FoldedSystem f = fold(CanonicalRepresentation(p.graph), p.group);
    const RootSet folded = enumerate_folded_roots(f, {1000, 100000});
    CHECK(folded.complete());
    CHECK(folded.size() == count);
  }
}

TEST_CASE("F is a bijection on every positive spherical case") {
  for (const char* token : {"A3:g", "A5:g", "A7:g", "D4:g", "D5:g", "D6:g", "D4:g1", "D4:g1g2", "E6:g"}) {
    CAPTURE(token);
    const SymmetricGraph p = catalog_pair(token);
    const CanonicalRepresentation rep(p.graph);
    const RootSet roots = enumerate_positive_roots(rep, 1000);
    const OrbitDecomposition orbits = root_orbits(roots, p.group);
    const FoldedSystem f = fold(rep, p.group);
    const RootSet folded = enumerate_folded_roots(f, {1000, 100000});
    const FMap map = compute_F(f, folded, roots, orbits);
    CHECK(map.unresolved == 0);
    CHECK(map.surjective());
    CHECK(folded.size() == orbits.orbits.size());
  }
}

TEST_CASE("F misses orbits when the property fails") {
  const SymmetricGraph p = catalog_pair("A4:g");
  const CanonicalRepresentation rep(p.graph);
  const RootSet roots = enumerate_positive_roots(rep, 1000);
  const FoldedSystem f = fold(rep, p.group);
  const FMap map = compute_F(f, enumerate_folded_roots(f, {1000, 100000}), roots, root_orbits(roots, p.group));
  CHECK_FALSE(map.surjective());
}

TEST_CASE("root orbits are deterministic and cover every root") {
  const SymmetricGraph p = catalog_pair("D4:g1g2");
  const RootSet roots = enumerate_positive_roots(CanonicalRepresentation(p.graph), 1000);
  const OrbitDecomposition a = root_orbits(roots, p.group);
  const OrbitDecomposition b = root_orbits(roots, p.group);
  CHECK(a.orbit_of == b.orbit_of);
  std::size_t total = 0;
  for (const auto& o : a.orbits) total += o.members.size();
  CHECK(total == roots.size());
}

TEST_CASE("F4 and dihedral oracles") {
  const oracle::GroupCount f4 = oracle::f4_reflection_group();
  CHECK(f4.order == 1152);
  CHECK(f4.reflections == 24);
  CHECK(oracle::dihedral_group(4).order == 8);
  CHECK(oracle::dihedral_group(6).reflections == 6);
}

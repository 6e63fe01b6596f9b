#include <doctest.h>

#include "coxfold/catalog.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/oracles.hpp"
#include "coxfold/roots.hpp"
#include "generators.hpp"

using namespace coxfold;
using coxfold::testing::seeded;
using coxfold::testing::uniform;

namespace {

RootSet roots_of(const std::string& name, int depth = 1000) {
  return enumerate_positive_roots(CanonicalRepresentation(catalog_graph(name).graph), depth);
}

}  // namespace

TEST_CASE("positive root counts of spherical types") {
  const std::pair<const char*, std::size_t> table[] = {
      {"A1", 1},  {"A4", 10}, {"B2", 4},  {"B3", 9},   {"B4", 16}, {"D4", 12},   {"D5", 20},   {"E6", 36},
      {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6},  {"H3", 15}, {"H4", 60},  {"I2(5)", 5}, {"I2(6)", 6}};
  for (const auto& [name, count] : table) {
    CAPTURE(name);
    const RootSet r = roots_of(name);
    CHECK(r.complete());
    CHECK(r.size() == count);
  }
}

TEST_CASE("affine and hyperbolic enumerations stay incomplete") {
  for (const char* name : {"tA3", "tD4", "tE6", "tB3"}) {
    const RootSet r = roots_of(name, 6);
    CHECK_FALSE(r.complete());
    CHECK(r.depth_reached() == 6);
  }
}

TEST_CASE("depth probe decides completeness at the boundary") {
  // Greatest root of A3 has depth 2 from a simple root.
  CHECK(roots_of("A3", 2).complete());
  CHECK_FALSE(roots_of("A3", 1).complete());
}

TEST_CASE("positive definiteness matches completeness") {
  for (const char* name : {"A5", "B4", "D5", "E6", "F4", "H3", "G2", "tA3", "tC3", "tG2", "tF4"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name).graph;
    CHECK(oracle::gram_positive_definite(g) == enumerate_positive_roots(CanonicalRepresentation(g), 40).complete());
  }
}

TEST_CASE("simple reflections are involutions preserving the form") {
  auto rng = seeded(20);
  for (int trial = 0; trial < 20; ++trial) {
    const CoxeterGraph g = coxfold::testing::random_graph(rng, uniform(rng, 2, 6));
    const CanonicalRepresentation rep(g);
    for (int s = 0; s < g.size(); ++s) {
      const Matrix& m = rep.simple_reflection(s).matrix();
      CHECK(is_identity(mul(m, m)));
      CHECK(Matrix(mul(mul(Matrix(m.transpose()), rep.form().matrix()), m)) == rep.form().matrix());
      CHECK(rep.simple_reflection(s).apply(rep.simple_root(s)) == Vector(-rep.simple_root(s)));
    }
  }
}

TEST_CASE("reflection does not depend on the witness") {
  for (const char* name : {"D5", "E6", "F4", "H3", "B4"}) {
    const CanonicalRepresentation rep(catalog_graph(name).graph);
    const RootSet roots = enumerate_positive_roots(rep, 1000);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Matrix formula = reflection_matrix(rep.form(), roots[i].coords);
      for (std::size_t w = 0; w < roots[i].witnesses.size(); ++w) CHECK(reflection_of(rep, roots, i, w).matrix() == formula);
    }
  }
}

TEST_CASE("random words send roots to roots of one sign") {
  auto rng = seeded(21);
  for (const char* name : {"E6", "F4", "H4", "tD5"}) {
    const CanonicalRepresentation rep(catalog_graph(name).graph);
    const RootSet roots = enumerate_positive_roots(rep, 8);
    for (int trial = 0; trial < 50; ++trial) {
      Word w;
      const int len = uniform(rng, 1, 10);
      for (int k = 0; k < len; ++k) w.push_back(GeneratorTag::simple(uniform(rng, 0, rep.dimension() - 1)));
      const GroupElement g = rep.element(w);
      const Root r = roots.root(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(roots.size()) - 1)));
      const Root image = act(g, r);
      CHECK(image.sign != Sign::zero);
      CHECK(bilinear(rep.form(), image.coords, image.coords) == Surd(2));
      if (roots.complete()) CHECK(roots.contains(image.sign == Sign::positive ? image.coords : Vector(-image.coords)));
      CHECK(mul(g.inverse_matrix(), g.matrix()) == Matrix(Matrix::Identity(rep.dimension(), rep.dimension())));
    }
  }
}

TEST_CASE("folded tags are rejected by the plain representation") {
  const CanonicalRepresentation rep(catalog_graph("A2").graph);
  CHECK_THROWS_AS(rep.element({GeneratorTag::folded(0)}), Error);
}

TEST_CASE("permutation action on coordinates") {
  Vector x(3);
  x << Surd(1), Surd(2), Surd(3);
  const Vector y = permute({1, 2, 0}, x);
  CHECK(y(1) == Surd(1));
  CHECK(y(2) == Surd(2));
  CHECK(y(0) == Surd(3));
  CHECK(support(unit_vector(4, 2)) == std::vector<int>{2});
}

TEST_CASE("restriction to a parabolic subset") {
  const RootSet roots = roots_of("D5");
  const RootSet a3 = restrict_to_subset(roots, {0, 1, 2});
  CHECK(a3.size() == 6);
}

TEST_CASE("unsupported labels are reported") {
  const CoxeterGraph g({1, 2}, {{1, 2, Label(7)}});
  CHECK_THROWS_AS(CanonicalRepresentation{g}, UnsupportedLabel);
}

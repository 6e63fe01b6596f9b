#include <doctest.h>

#include "coxfold/acceptance.hpp"
#include "coxfold/catalog.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/verify.hpp"
#include "generators.hpp"

using namespace coxfold;
using coxfold::testing::seeded;
using coxfold::testing::uniform;

namespace {

Verdict check(const std::string& token, const Budget& budget = {}) {
  const SymmetricGraph p = catalog_pair(token);
  return decide(p.graph, p.group, budget);
}

}  // namespace

TEST_CASE("orbit commutation probe") {
  const SymmetricGraph a4 = catalog_pair("A4:g");
  const auto v = check_orbit_commutation(a4.graph, a4.group);
  REQUIRE(v);
  CHECK(a4.graph.id(v->s) == 2);
  CHECK(a4.graph.id(v->t) == 3);
  const SymmetricGraph a5 = catalog_pair("A5:g");
  CHECK_FALSE(check_orbit_commutation(a5.graph, a5.group));
}

TEST_CASE("fixed vertex probe") {
  CHECK(check_fixed_vertex(catalog_pair("tA3:rot").group));
  CHECK_FALSE(check_fixed_vertex(catalog_pair("tD4:rot4").group));
  CHECK_FALSE(check_fixed_vertex(catalog_pair("D4:g1g2").group));
}

TEST_CASE("witness validity rejects altered witnesses") {
  const SymmetricGraph p = catalog_pair("tD4:rot4");
  const Verdict v = decide(p.graph, p.group);
  REQUIRE(v.components.size() == 1);
  REQUIRE(v.components[0].witness);
  const FormMatrix form(p.graph);
  FailureWitness w = *v.components[0].witness;
  CHECK(witness_is_valid(form, w));
  w.pairing = Surd(0);
  CHECK_FALSE(witness_is_valid(form, w));
  w = *v.components[0].witness;
  w.g = Symmetry::identity(p.graph.size());
  CHECK_FALSE(witness_is_valid(form, w));
}

TEST_CASE("real root test") {
  const CanonicalRepresentation rep(catalog_graph("tD4").graph);
  Vector x = Vector::Zero(5);
  x << Surd(1), Surd(1), Surd(2), Surd(1), Surd(1);  // delta, imaginary
  CHECK_FALSE(is_real_root(rep, x, 1000));
  x(2) = Surd(3);  // alpha_2 + delta
  CHECK(is_real_root(rep, x));
  x << Surd(1), Surd(0), Surd(0), Surd(1), Surd(0);  // disconnected support
  CHECK_FALSE(is_real_root(rep, x));
}

TEST_CASE("path seeds are real roots") {
  const SymmetricGraph p = catalog_pair("tE6:rot3");
  const CanonicalRepresentation rep(p.graph);
  const auto seeds = path_seeds(p.graph, p.group.generators()[0].symmetry);
  CHECK_FALSE(seeds.empty());
  for (const Vector& s : seeds) CHECK(is_real_root(rep, s));
}

TEST_CASE("verdicts on the catalog") {
  CHECK(check("B3").status == Status::holds);
  CHECK(check("E8").components.at(0).coverage->by_definition);
  CHECK(check("D4:g").status == Status::holds);
  CHECK(check("tD4:g").status == Status::certified_affine);
  CHECK(check("tE7:g").status == Status::fails);
  CHECK(check("A6:g").status == Status::fails);
  const Verdict inf = check("Dinf6:g");
  CHECK(inf.status == Status::verified_to_depth);
  CHECK_FALSE(inf.budget_exhausted);
  CHECK(inf.components.at(0).depth == 6);
}

TEST_CASE("a starved budget reports exhaustion instead of a verdict") {
  Budget b;
  b.root_depth = 2;
  b.orbit_depth = 1;
  const Verdict v = check("tD4:g", b);
  CHECK(v.status == Status::verified_to_depth);
  CHECK(v.budget_exhausted);
}

TEST_CASE("node cap raises") {
  Budget b;
  b.node_cap = 10;
  CHECK_THROWS_AS(check("E6:g", b), CapExceeded);
}

TEST_CASE("certificate structure on tE6") {
  const SymmetricGraph p = catalog_pair("tE6:g");
  const ComponentVerdict cv = decide_component(p.graph, p.group, {});
  REQUIRE(cv.certificate);
  const AffineCertificate& c = *cv.certificate;
  CHECK(c.family == "tE6");
  CHECK(p.graph.id(c.zero_vertex) == 0);
  CHECK(c.null_checks);
  CHECK(c.valid());
  CHECK_FALSE(c.covering.empty());
  CHECK(c.translations.size() == c.covering.size());
}

TEST_CASE("power law detects a non-translation") {
  const CanonicalRepresentation rep(catalog_graph("tA1").graph);
  const GroupElement s0 = rep.simple_reflection(0);
  const GroupElement s1 = rep.simple_reflection(1);
  Vector delta(2);
  delta << Surd(1), Surd(1);
  // s0 s1 translates alpha_0 by 2 delta.
  CHECK(power_law_holds(s0 * s1, rep.simple_root(0), Surd(2) * delta));
  CHECK_FALSE(power_law_holds(s0, rep.simple_root(0), delta));
}

TEST_CASE("equivalence classes") {
  const CoxeterGraph a3 = catalog_graph("A3").graph;
  const RootSet roots = enumerate_positive_roots(CanonicalRepresentation(a3), 100);
  const EquivClasses c = equiv_classes(roots, FormMatrix(a3));
  CHECK(c.definitive);
  CHECK(c.members.size() == 12);
  // Simply laced: pairings of distinct roots lie in {0, 1, -1} except alpha with -alpha.
  CHECK(c.count == 6);
}

TEST_CASE("fault injection into the null root data fails the affine criterion") {
  AcceptanceOptions options;
  options.only = {"affine"};
  options.corrupt_beta = [](const std::string& family, const Vector& beta) {
    if (family != "tD5") return beta;
    Vector out = beta;
    out(1) += Surd(1);
    return out;
  };
  const auto results = run_acceptance(options);
  REQUIRE(results.size() == 1);
  CHECK(results[0].number == 6);
  CHECK_FALSE(results[0].passed);
  bool named = false;
  for (const auto& d : results[0].detail) named = named || d.rfind("tD5:", 0) == 0;
  CHECK(named);
}

TEST_CASE("unknown acceptance tag") {
  AcceptanceOptions options;
  options.only = {"nope"};
  CHECK_THROWS_AS(run_acceptance(options), Error);
}

TEST_CASE("decide is invariant under relabeling the vertex ids") {
  auto rng = seeded(30);
  for (const char* token : {"A5:g", "D4:g1", "tD4:ends", "tA3:g", "E6:g"}) {
    const SymmetricGraph p = catalog_pair(token);
    std::vector<VertexId> ids;
    const CoxeterGraph g = coxfold::testing::shuffled(rng, p.graph, &ids);
    std::vector<NamedSymmetry> gens;
    for (const NamedSymmetry& ns : p.group.generators()) {
      std::map<VertexId, VertexId> perm;
      for (int q = 0; q < p.graph.size(); ++q)
        perm[ids[static_cast<size_t>(q)]] = ids[static_cast<size_t>(ns.symmetry(q))];
      gens.push_back({ns.name, validate_symmetry(g, perm)});
    }
    const Verdict a = decide(p.graph, p.group);
    const Verdict b = decide(g, SymmetryGroup(g, gens));
    CAPTURE(token);
    CHECK(a.status == b.status);
  }
}

TEST_CASE("random simply laced pairs: fails comes with a valid witness, holds with full coverage") {
  auto rng = seeded(31);
  int decided = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const CoxeterGraph g = coxfold::testing::random_graph(rng, uniform(rng, 3, 6), true);
    const auto autos = automorphisms(g);
    const auto& pick = autos[static_cast<size_t>(uniform(rng, 0, static_cast<int>(autos.size()) - 1))];
    const SymmetryGroup group(g, {{"a", Symmetry(pick)}});
    Budget b;
    b.root_depth = 8;
    const Verdict v = decide(g, group, b);
    const FormMatrix form(g);
    for (const ComponentVerdict& c : v.components) {
      if (c.status == Status::fails) {
        REQUIRE(c.witness);
        CHECK(witness_is_valid(form, *c.witness));
        ++decided;
      }
      if (c.status == Status::holds && c.coverage && !c.coverage->by_definition) {
        CHECK(c.coverage->uncovered.empty());
        CHECK(c.coverage->discrepancies == 0);
        ++decided;
      }
    }
  }
  CHECK(decided > 0);
}

#include "coxfold/acceptance.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coxfold/catalog.hpp"
#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/folding.hpp"
#include "coxfold/oracles.hpp"
#include "coxfold/verify.hpp"

namespace coxfold {

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void fail(const std::string& what) { check(false, what); }

  CriterionResult result(int number, std::string tag, std::string title) const {
    CriterionResult r;
    r.number = number;
    r.tag = std::move(tag);
    r.title = std::move(title);
    r.passed = failures_.empty() && checks_ > 0;
    r.detail = failures_;
    r.detail.push_back(std::to_string(checks_) + " checks, " + std::to_string(failures_.size()) +
                       " failed");
    return r;
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

/// Runs `body`, turning a library error into a recorded failure.
template <typename F>
void guarded(Tally& tally, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.fail(label + ": " + e.what());
  }
}

std::string str(const Vector& x) { return to_string(x); }

/// Vector over the positions of `graph` from (id, coefficient) pairs.
Vector combo(const CoxeterGraph& graph, std::initializer_list<std::pair<VertexId, int>> terms) {
  Vector x = Vector::Zero(graph.size());
  for (auto [id, c] : terms) x(graph.position(id)) += Surd(c);
  return x;
}

Vector simple(const CoxeterGraph& graph, VertexId id) { return unit_vector(graph.size(), graph.position(id)); }

/// Folded tag of the generator whose orbit is exactly `ids`.
GeneratorTag folded_tag(const CoxeterGraph& graph, const FoldedSystem& folded, std::vector<VertexId> ids) {
  std::vector<int> positions;
  for (VertexId v : ids) positions.push_back(graph.position(v));
  std::sort(positions.begin(), positions.end());
  for (size_t k = 0; k < folded.generators.size(); ++k)
    if (folded.generators[k].orbit == positions) return GeneratorTag::folded(static_cast<int>(k));
  throw Error("no folded generator for the requested orbit");
}

/// Matrix of a mixed word built from reflection formulas only, as a second route to
/// evaluate_word.
Matrix expand(const FormMatrix& form, const FoldedSystem& folded, const Word& word) {
  const int n = form.size();
  auto reflection = [&](int p) { return reflection_matrix(form, unit_vector(n, p)); };
  Matrix out = Matrix::Identity(n, n);
  for (const GeneratorTag& tag : word) {
    if (tag.kind == GeneratorTag::Kind::simple) {
      out = mul(out, reflection(tag.index));
    } else {
      for (const GeneratorTag& s : folded.generators.at(static_cast<size_t>(tag.index)).longest.word())
        out = mul(out, reflection(s.index));
    }
  }
  return out;
}

bool positive_outcome(const Verdict& v) {
  return is_positive(v.status) || (v.status == Status::verified_to_depth && !v.budget_exhausted);
}

Vector embed_finite(const Vector& finite, int affine_size) {
  Vector x = Vector::Zero(affine_size);
  for (Eigen::Index k = 0; k < finite.size(); ++k) x(k + 1) = finite(k);
  return x;
}

Surd height(const Vector& x) {
  Surd h(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) h += x(i);
  return h;
}

// 1. Root counts.

CriterionResult root_counts() {
  Tally t;
  auto expect_count = [&](const std::string& name, std::size_t expected) {
    guarded(t, name, [&] {
      const CoxeterGraph graph = catalog_graph(name).graph;
      const RootSet roots = enumerate_positive_roots(CanonicalRepresentation(graph), 1000);
      t.check(roots.complete(), name + ": enumeration incomplete");
      t.check(roots.size() == expected, name + ": " + std::to_string(roots.size()) + " positive roots, expected " +
                                            std::to_string(expected));
    });
  };
  expect_count("D4", 12);
  expect_count("E6", 36);
  for (int n = 1; n <= 6; ++n) {
    const std::size_t oracle = oracle::symmetric_group_transpositions(n);
    t.check(oracle == static_cast<std::size_t>(n * (n + 1) / 2),
            "A" + std::to_string(n) + ": transposition oracle gives " + std::to_string(oracle));
    expect_count("A" + std::to_string(n), oracle);
  }
  return t.result(1, "roots", "Positive root counts");
}

// 2. Folding dictionary.

CriterionResult folding_dictionary() {
  Tally t;
  auto expect_fold = [&](const std::string& token, const std::string& expected) {
    guarded(t, token, [&] {
      const SymmetricGraph pair = catalog_pair(token);
      const FoldedSystem folded = fold(CanonicalRepresentation(pair.graph), pair.group);
      t.check(folded.folded_name == expected, token + " folds to " + folded.folded_name + ", expected " + expected);
      const CoxeterGraph target = catalog_graph(expected).graph;
      t.check(!isomorphisms(folded.folded_graph, target, 1).empty(),
              token + ": folded matrix is not isomorphic to the " + expected + " graph");
    });
  };
  for (int m = 1; m <= 8; ++m) expect_fold("A" + std::to_string(2 * m + 1) + ":g", "B" + std::to_string(m + 1));
  for (int m = 4; m <= 8; ++m) expect_fold("D" + std::to_string(m) + ":g", "B" + std::to_string(m - 1));
  expect_fold("D4:g1", "G2");
  expect_fold("D4:g1g2", "G2");
  expect_fold("E6:g", "F4");
  for (int m = 1; m <= 8; ++m)
    expect_fold("tA" + std::to_string(2 * m + 1) + ":g", m == 1 ? "tB2" : "tC" + std::to_string(m + 1));
  for (int m = 4; m <= 8; ++m) expect_fold("tD" + std::to_string(m) + ":g", "tB" + std::to_string(m - 1));
  expect_fold("tD4:g1g2", "tG2");
  expect_fold("tE6:g", "tF4");
  return t.result(2, "folding", "Folding dictionary");
}

// 3. Positive verdicts.

void reverify_component(Tally& t, const std::string& token, const SymmetricGraph& pair, const ComponentVerdict& cv) {
  const CanonicalRepresentation rep(pair.graph);
  const FoldedSystem folded = fold(rep, pair.group);
  const int n = pair.graph.size();
  if (cv.coverage) {
    t.check(cv.coverage->discrepancies == 0, token + ": coverage reported discrepancies");
    std::size_t bad = 0;
    for (const auto& e : cv.coverage->covered) {
      if (mul(expand(rep.form(), folded, e.word), unit_vector(n, e.start)) != e.root) ++bad;
      if (mul(expand(rep.form(), folded, e.negative_word), unit_vector(n, e.negative_start)) != Vector(-e.root))
        ++bad;
    }
    t.check(bad == 0, token + ": " + std::to_string(bad) + " coverage equations fail on re-verification");
  }
  if (cv.certificate) {
    const AffineCertificate& c = *cv.certificate;
    t.check(c.null_checks, token + ": null root checks fail");
    for (const auto& tr : c.translations) {
      const Matrix w = expand(rep.form(), folded, tr.word);
      const Vector a_s = unit_vector(n, tr.s);
      const Vector a_z = unit_vector(n, c.zero_vertex);
      bool ok = tr.verified && mul(w, c.delta) == c.delta;
      if (tr.part == 1) {
        ok = ok && mul(w, a_s) == Vector(a_s + c.delta);
      } else {
        const Matrix back = expand(rep.form(), folded, tr.back_word);
        ok = ok && mul(w, a_z) == Vector(a_s + c.delta) && mul(back, a_s) == Vector(a_z + c.delta);
      }
      t.check(ok, token + ": translation of vertex " + std::to_string(pair.graph.id(tr.s)) + " fails");
    }
  }
}

CriterionResult positive_verdicts() {
  Tally t;
  auto expect = [&](const std::string& token, Status status) {
    guarded(t, token, [&] {
      const SymmetricGraph pair = catalog_pair(token);
      const Verdict v = decide(pair.graph, pair.group);
      t.check(v.status == status, token + ": " + status_name(v.status) + ", expected " + status_name(status));
      t.check(v.components.size() == 1, token + ": expected one component");
      for (const auto& cv : v.components) {
        if (status == Status::holds)
          t.check(cv.coverage && cv.coverage->uncovered.empty() && cv.coverage->f_bijective,
                  token + ": coverage incomplete under holds");
        if (status == Status::certified_affine)
          t.check(cv.certificate && cv.certificate->valid(), token + ": certificate missing or invalid");
        reverify_component(t, token, pair, cv);
      }
    });
  };
  for (const char* token : {"A3:g", "A5:g", "A7:g", "A9:g", "D4:g", "D5:g", "D4:g1", "D4:g1g2", "E6:g"})
    expect(token, Status::holds);
  for (const char* token : {"tA3:g", "tA5:g", "tA7:g", "tA9:g", "tD4:g", "tD5:g", "tD4:g1", "tD4:g1g2", "tE6:g"})
    expect(token, Status::certified_affine);
  return t.result(3, "positive", "Positive verdicts with re-verified coverage");
}

// 4. Negative verdicts.

CriterionResult negative_verdicts() {
  Tally t;
  struct Case {
    const char* token;
    std::initializer_list<std::pair<VertexId, int>> seed;
    int pairing;
  };
  const Case cases[] = {
      {"tD4:ends", {{1, 1}, {2, 1}, {3, 1}}, -2},
      {"tD6:rev", {{0, 1}, {1, 1}, {2, 2}, {3, 1}}, -2},
      {"tD4:rot4", {{0, 1}, {2, 1}, {3, 1}}, -2},
      {"tE6:rot3", {{0, 1}, {2, 1}, {4, 1}, {5, 1}}, -1},
      {"tE7:g", {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 1}, {7, 1}}, -2},
  };
  for (const Case& c : cases) {
    guarded(t, c.token, [&] {
      const SymmetricGraph pair = catalog_pair(c.token);
      const FormMatrix form(pair.graph);
      const Vector seed = combo(pair.graph, c.seed);
      t.check(is_real_root(CanonicalRepresentation(pair.graph), seed), std::string(c.token) + ": seed is not a root");

      const Verdict seeded = decide(pair.graph, pair.group, {}, {seed});
      t.check(seeded.status == Status::fails, std::string(c.token) + ": seeded run gives " + status_name(seeded.status));
      for (const auto& cv : seeded.components) {
        if (!cv.witness) continue;
        t.check(cv.witness->root == seed, std::string(c.token) + ": witness " + str(cv.witness->root) + " is not the seed");
        t.check(cv.witness->pairing == Surd(c.pairing),
                std::string(c.token) + ": pairing " + cv.witness->pairing.to_string() + ", expected " +
                    std::to_string(c.pairing));
        t.check(witness_is_valid(form, *cv.witness),
                std::string(c.token) + ": seeded witness invalid");
      }

      const Verdict free = decide(pair.graph, pair.group);
      t.check(free.status == Status::fails, std::string(c.token) + ": unseeded run gives " + status_name(free.status));
      for (const auto& cv : free.components) {
        if (!cv.witness) continue;
        const FailureWitness& w = *cv.witness;
        bool ok = witness_is_valid(form, w);
        if (w.kind == FailureWitness::Kind::orbit_pairing) {
          const Vector image = permute(w.g.images(), w.root);
          ok = ok && image != w.root && !bilinear(form, w.root, image).is_zero();
        }
        t.check(ok, std::string(c.token) + ": independently found witness fails its conditions");
      }
    });
  }
  return t.result(4, "negative", "Negative verdicts and failure witnesses");
}

// 5. F-map bijection.

std::size_t brute_root_orbits(const RootSet& roots, const SymmetryGroup& group) {
  std::set<Vector, VectorLess> canonical;
  for (const auto& e : roots.entries()) {
    Vector least = e.coords;
    for (const Symmetry& g : group.elements()) {
      const Vector image = permute(g.images(), e.coords);
      if (VectorLess{}(image, least)) least = image;
    }
    canonical.insert(least);
  }
  return canonical.size();
}

CriterionResult fmap_bijection() {
  Tally t;
  auto run = [&](const std::string& token, std::size_t expected, std::size_t singletons, std::size_t oracle_count) {
    guarded(t, token, [&] {
      const SymmetricGraph pair = catalog_pair(token);
      const CanonicalRepresentation rep(pair.graph);
      const RootSet roots = enumerate_positive_roots(rep, 1000);
      const OrbitDecomposition orbits = root_orbits(roots, pair.group);
      const FoldedSystem folded = fold(rep, pair.group);
      const RootSet folded_roots = enumerate_folded_roots(folded, {1000, SearchLimits{}.node_cap});
      const FMap f = compute_F(folded, folded_roots, roots, orbits);

      t.check(folded_roots.complete() && folded_roots.size() == expected,
              token + ": " + std::to_string(folded_roots.size()) + " folded roots");
      t.check(orbits.orbits.size() == expected, token + ": " + std::to_string(orbits.orbits.size()) + " root orbits");
      t.check(brute_root_orbits(roots, pair.group) == expected, token + ": brute-force orbit count differs");
      const auto ones = static_cast<std::size_t>(std::count_if(
          orbits.orbits.begin(), orbits.orbits.end(), [](const RootOrbit& o) { return o.members.size() == 1; }));
      t.check(ones == singletons, token + ": " + std::to_string(ones) + " singleton orbits");
      t.check(f.unresolved == 0 && f.surjective(), token + ": F is not surjective");
      std::set<std::size_t> images;
      for (const auto& im : f.image)
        if (im) images.insert(*im);
      t.check(images.size() == f.image.size(), token + ": F is not injective");
      t.check(oracle_count == expected, token + ": reflection oracle gives " + std::to_string(oracle_count));
    });
  };
  const oracle::GroupCount f4 = oracle::f4_reflection_group();
  t.check(f4.order == 1152, "F4 oracle order " + std::to_string(f4.order));
  run("E6:g", 24, 12, f4.reflections);
  run("A3:g", 4, 2, oracle::dihedral_group(4).reflections);
  return t.result(5, "fmap", "Folded roots biject onto root orbits");
}

// 6. Affine certificates.

struct WordContext {
  SymmetricGraph pair;
  CanonicalRepresentation rep;
  FoldedSystem folded;
  Vector delta;

  explicit WordContext(const std::string& token)
      : pair(catalog_pair(token)), rep(pair.graph), folded(fold(rep, pair.group)) {
    const GraphType type = recognize(pair.graph);
    delta = null_root(type.family, type.rank);
  }
  GeneratorTag s(VertexId id) const { return GeneratorTag::simple(pair.graph.position(id)); }
  GeneratorTag u(std::vector<VertexId> ids) const { return folded_tag(pair.graph, folded, std::move(ids)); }
  Vector a(VertexId id) const { return simple(pair.graph, id); }
  GroupElement element(const Word& w) const { return evaluate_word(rep, folded, w); }
};

/// w(x) = y by both routes, and w(delta) = delta.
void check_word(Tally& t, const WordContext& c, const std::string& label, const Word& w, const Vector& x,
                const Vector& y) {
  const GroupElement g = c.element(w);
  t.check(g.apply(x) == y, label + ": word gives " + str(g.apply(x)) + ", expected " + str(y));
  t.check(mul(expand(c.rep.form(), c.folded, w), x) == y, label + ": reflection route disagrees");
  t.check(g.apply(c.delta) == c.delta, label + ": word moves delta");
}

void null_root_data(Tally& t, const AcceptanceOptions& options) {
  std::vector<std::pair<Family, int>> affine;
  for (int n = 1; n <= 8; ++n) affine.emplace_back(Family::tA, n);
  for (int n = 4; n <= 8; ++n) affine.emplace_back(Family::tD, n);
  for (int n = 6; n <= 8; ++n) affine.emplace_back(Family::tE, n);
  for (auto [family, rank] : affine) {
    const std::string name = family_name(family, rank);
    guarded(t, name, [&] {
      const CoxeterGraph graph = catalog_graph(family, rank).graph;
      const int n = graph.size();
      Vector beta = embed_finite(highest_root(finite_part(family), rank), n);
      if (options.corrupt_beta) beta = options.corrupt_beta(name, beta);
      const Vector alpha0 = unit_vector(n, 0);
      const Vector delta = alpha0 + beta;
      const FormMatrix form(graph);
      t.check(is_zero(mul(form.matrix(), delta)), name + ": B delta is not zero for beta " + str(beta));
      t.check(bilinear(form, alpha0, beta) == Surd(-2), name + ": <alpha_0, beta> is not -2");
      t.check(delta == null_root(family, rank), name + ": alpha_0 + beta differs from the stored null root");

      const CoxeterGraph finite = catalog_graph(finite_part(family), rank).graph;
      const RootSet roots = enumerate_positive_roots(CanonicalRepresentation(finite), 1000);
      std::size_t top = 0;
      for (std::size_t i = 1; i < roots.size(); ++i)
        if (height(roots[i].coords) > height(roots[top].coords)) top = i;
      t.check(roots.complete() && embed_finite(roots[top].coords, n) == beta,
              name + ": beta is not the highest root of the finite part");
    });
  }
}

void explicit_words(Tally& t) {
  // Reversal on tA_{2m+1}; X_i = {i, 2m+2-i}.
  for (int m = 1; m <= 4; ++m) {
    const std::string token = "tA" + std::to_string(2 * m + 1) + ":g";
    guarded(t, token, [&] {
      const WordContext c(token);
      std::vector<GeneratorTag> up, down;
      for (int i = 1; i <= m; ++i) up.push_back(c.u({i, 2 * m + 2 - i}));
      down.assign(up.rbegin(), up.rend());

      Word to_zero{c.s(0)};
      to_zero.insert(to_zero.end(), up.begin(), up.end());
      check_word(t, c, token + " alpha_0 + delta", to_zero, c.a(m + 1), c.a(0) + c.delta);

      Word to_mid{c.s(m + 1)};
      to_mid.insert(to_mid.end(), down.begin(), down.end());
      check_word(t, c, token + " alpha_" + std::to_string(m + 1) + " + delta", to_mid, c.a(0), c.a(m + 1) + c.delta);

      Word own = down;
      own.push_back(c.s(0));
      own.insert(own.end(), up.begin(), up.end());
      own.push_back(c.s(m + 1));
      check_word(t, c, token + " alpha_" + std::to_string(m) + " + delta", own, c.a(m), c.a(m) + c.delta);
      t.check(power_law_holds(c.element(own), c.a(m), c.delta), token + ": power law on alpha_m");

      const GroupElement round = c.element(to_zero) * c.element(to_mid);
      t.check(power_law_holds(round, c.a(0), Surd(2) * c.delta), token + ": power law on the paired words");
    });
  }

  // tD_m with the end swap; X = {m-1, m}.
  for (int m = 4; m <= 6; ++m) {
    const std::string token = "tD" + std::to_string(m) + ":g";
    guarded(t, token, [&] {
      const WordContext c(token);
      const GeneratorTag uX = c.u({m - 1, m});
      Word w1{c.s(m - 2)};
      for (int i = m - 3; i >= 2; --i) w1.push_back(c.s(i));
      w1.insert(w1.end(), {c.s(0), uX, c.s(1)});
      for (int i = 2; i <= m - 3; ++i) w1.push_back(c.s(i));
      check_word(t, c, token + " alpha_" + std::to_string(m - 2) + " + delta", w1, c.a(m - 2), c.a(m - 2) + c.delta);
      t.check(power_law_holds(c.element(w1), c.a(m - 2), c.delta), token + ": power law on alpha_{m-2}");

      Word w2{uX};
      for (int i = m - 2; i >= 2; --i) w2.push_back(c.s(i));
      w2.insert(w2.end(), {c.s(0), uX, c.s(1)});
      for (int i = 2; i <= m - 2; ++i) w2.push_back(c.s(i));
      check_word(t, c, token + " alpha_" + std::to_string(m) + " + delta", w2, c.a(m), c.a(m) + c.delta);
      t.check(power_law_holds(c.element(w2), c.a(m), c.delta), token + ": power law on alpha_m");
    });
  }

  // tD4 with the order three rotation; X = {1, 3, 4}.
  for (const char* token : {"tD4:g1", "tD4:g1g2"}) {
    guarded(t, token, [&] {
      const WordContext c(token);
      const GeneratorTag uX = c.u({1, 3, 4});
      const Word w1{uX, c.s(2), c.s(0), uX, c.s(2)};
      check_word(t, c, std::string(token) + " alpha_1 + delta", w1, c.a(1), c.a(1) + c.delta);
      const Word w2{c.s(2), c.s(0), uX};
      check_word(t, c, std::string(token) + " alpha_2 + delta", w2, c.a(2), c.a(2) + c.delta);
      t.check(power_law_holds(c.element(w2), c.a(2), c.delta), std::string(token) + ": power law on alpha_2");
    });
  }

  // tE6 with the diagram flip; X = {1, 6}, Y = {3, 5}.
  guarded(t, "tE6:g", [&] {
    const WordContext c("tE6:g");
    const CoxeterGraph& g = c.pair.graph;
    const GeneratorTag uY = c.u({3, 5});
    const Vector flipped = combo(g, {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 1}});
    const Vector gamma = combo(g, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 1}});
    const Word w3{uY, c.s(4), c.s(2), c.s(0)};
    const Word w4{c.s(4), c.s(2), c.s(0)};
    check_word(t, c, "tE6:g alpha_3 + delta", w3, flipped, c.a(3) + c.delta);
    check_word(t, c, "tE6:g alpha_4 + delta", w4, gamma, c.a(4) + c.delta);

    // Both starting vectors lie in the fixed-subgroup orbit of the simple root.
    const int n = g.size();
    const OrbitSearch from3 = orbit_search(c.folded, n, g.position(3), 16, SearchLimits{}.node_cap);
    const OrbitSearch from4 = orbit_search(c.folded, n, g.position(4), 16, SearchLimits{}.node_cap);
    const auto it3 = from3.reached.find(flipped);
    const auto it4 = from4.reached.find(gamma);
    t.check(it3 != from3.reached.end(), "tE6:g: flipped vector not reached from alpha_3");
    t.check(it4 != from4.reached.end(), "tE6:g: gamma not reached from alpha_4");
    if (it3 != from3.reached.end()) {
      const GroupElement w = c.element(w3) * c.element(it3->second.word);
      t.check(w.apply(c.a(3)) == Vector(c.a(3) + c.delta), "tE6:g: composed word misses alpha_3 + delta");
      t.check(power_law_holds(w, c.a(3), c.delta), "tE6:g: power law on alpha_3");
    }
    if (it4 != from4.reached.end()) {
      const GroupElement w = c.element(w4) * c.element(it4->second.word);
      t.check(power_law_holds(w, c.a(4), c.delta), "tE6:g: power law on alpha_4");
    }
  });
}

void stored_power_laws(Tally& t) {
  for (const char* token : {"tA3:g", "tA5:g", "tD4:g", "tD5:g", "tD4:g1", "tE6:g"}) {
    guarded(t, token, [&] {
      const SymmetricGraph pair = catalog_pair(token);
      const ComponentVerdict cv = decide_component(pair.graph, pair.group, {});
      if (!cv.certificate) {
        t.fail(std::string(token) + ": no certificate");
        return;
      }
      const CanonicalRepresentation rep(pair.graph);
      const FoldedSystem folded = fold(rep, pair.group);
      const AffineCertificate& c = *cv.certificate;
      const Vector a_z = unit_vector(pair.graph.size(), c.zero_vertex);
      for (const auto& tr : c.translations) {
        const GroupElement w = evaluate_word(rep, folded, tr.word);
        const bool ok = tr.part == 1
                            ? power_law_holds(w, unit_vector(pair.graph.size(), tr.s), c.delta)
                            : power_law_holds(evaluate_word(rep, folded, tr.back_word) * w, a_z, Surd(2) * c.delta);
        t.check(ok, std::string(token) + ": power law fails on the stored word for vertex " +
                        std::to_string(pair.graph.id(tr.s)));
      }
    });
  }
}

CriterionResult affine_certificates(const AcceptanceOptions& options) {
  Tally t;
  null_root_data(t, options);
  explicit_words(t);
  stored_power_laws(t);
  return t.result(6, "affine", "Null root data and translation words");
}

// 7. Property suites.

void holds_properties(Tally& t, const std::string& token) {
  const SymmetricGraph pair = catalog_pair(token);
  const CanonicalRepresentation rep(pair.graph);
  const FormMatrix& form = rep.form();
  const RootSet roots = enumerate_positive_roots(rep, 1000);
  std::size_t orthogonality = 0, propagation = 0;
  for (const auto& a : roots.entries()) {
    for (const Symmetry& g : pair.group.elements()) {
      const Vector ga = permute(g.images(), a.coords);
      if (ga != a.coords && !bilinear(form, a.coords, ga).is_zero()) ++orthogonality;
      if (ga != a.coords) continue;
      for (const auto& b : roots.entries()) {
        const Surd p = bilinear(form, a.coords, b.coords);
        if (p.is_zero() || p == Surd(1) || p == Surd(-1)) continue;
        if (permute(g.images(), b.coords) != b.coords) ++propagation;
      }
    }
  }
  t.check(orthogonality == 0, token + ": " + std::to_string(orthogonality) + " orbit orthogonality violations");
  t.check(propagation == 0, token + ": " + std::to_string(propagation) + " fixedness propagation violations");
  const EquivClasses classes = equiv_classes(roots, form);
  t.check(classes.definitive && classes.count >= 2,
          token + ": " + std::to_string(classes.count) + " equivalence classes under holds");
}

void negatives_reached(Tally& t, const std::string& token) {
  const SymmetricGraph pair = catalog_pair(token);
  const FoldedSystem folded = fold(CanonicalRepresentation(pair.graph), pair.group);
  const int n = pair.graph.size();
  for (int s = 0; s < n; ++s) {
    const OrbitSearch o = orbit_search(folded, n, s, 16, SearchLimits{}.node_cap);
    t.check(o.reached.count(Vector(-unit_vector(n, s))) == 1,
            token + ": -alpha_" + std::to_string(pair.graph.id(s)) + " not in its orbit");
  }
}

void reflection_properties(Tally& t, const std::string& name) {
  const CoxeterGraph graph = catalog_graph(name).graph;
  const CanonicalRepresentation rep(graph);
  const RootSet roots = enumerate_positive_roots(rep, 1000);
  t.check(roots.complete(), name + ": enumeration incomplete");
  std::vector<Matrix> reflections;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Matrix formula = reflection_matrix(rep.form(), roots[i].coords);
    for (std::size_t w = 0; w < roots[i].witnesses.size(); ++w)
      if (reflection_of(rep, roots, i, w).matrix() != formula) ++disagreements;
    reflections.push_back(formula);
  }
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < reflections.size(); ++i)
    for (std::size_t j = i + 1; j < reflections.size(); ++j) collisions += reflections[i] == reflections[j];
  t.check(disagreements == 0, name + ": " + std::to_string(disagreements) + " witness-dependent reflections");
  t.check(collisions == 0, name + ": " + std::to_string(collisions) + " roots share a reflection");
}

CriterionResult property_suites() {
  Tally t;
  for (const char* token : {"A3:g", "A5:g", "A7:g", "D4:g", "D5:g", "D4:g1", "D4:g1g2", "E6:g"})
    guarded(t, token, [&] { holds_properties(t, token); });
  for (const char* token : {"A3:g", "A5:g", "D4:g", "D4:g1g2", "E6:g", "tA3:g", "tD4:g", "tD4:g1", "tE6:g"})
    guarded(t, token, [&] { negatives_reached(t, token); });
  for (const char* name : {"B2", "G2"}) {
    guarded(t, name, [&] {
      const CoxeterGraph graph = catalog_graph(name).graph;
      const RootSet roots = enumerate_positive_roots(CanonicalRepresentation(graph), 1000);
      const EquivClasses classes = equiv_classes(roots, FormMatrix(graph));
      t.check(classes.definitive && classes.count == 1,
              std::string(name) + ": " + std::to_string(classes.count) + " equivalence classes");
    });
  }
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "D6", "E6", "E7",
                           "E8", "F4", "G2", "H3", "H4", "I2(5)", "I2(6)"})
    guarded(t, name, [&] { reflection_properties(t, name); });
  return t.result(7, "properties", "Invariant suites");
}

// 8. Reductions.

/// Disjoint union of catalog pairs with ids shifted by 100 per block; each block keeps its
/// own generators.
SymmetricGraph disjoint_union(const std::vector<SymmetricGraph>& blocks) {
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int shift = 100 * static_cast<int>(b);
    for (VertexId v : blocks[b].graph.vertices()) ids.push_back(v + shift);
    for (const Edge& e : blocks[b].graph.edges()) edges.push_back({e.u + shift, e.v + shift, e.label});
  }
  const CoxeterGraph graph(ids, edges);
  std::vector<NamedSymmetry> gens;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int shift = 100 * static_cast<int>(b);
    const CoxeterGraph& g = blocks[b].graph;
    for (const NamedSymmetry& ns : blocks[b].group.generators()) {
      std::map<VertexId, VertexId> perm;
      for (int p = 0; p < g.size(); ++p) perm[g.id(p) + shift] = g.id(ns.symmetry(p)) + shift;
      gens.push_back({ns.name + "@" + std::to_string(b), validate_symmetry(graph, perm)});
    }
  }
  return {graph, SymmetryGroup(graph, gens)};
}

Status conjunction(const std::vector<Status>& parts) {
  auto has = [&](Status s) { return std::find(parts.begin(), parts.end(), s) != parts.end(); };
  if (has(Status::fails)) return Status::fails;
  if (has(Status::verified_to_depth)) return Status::verified_to_depth;
  if (has(Status::certified_affine)) return Status::certified_affine;
  return Status::holds;
}

CriterionResult reductions() {
  Tally t;
  const std::vector<std::string> pool = {"A3:g", "A4:g", "A5:g", "D4:g", "D4:g1", "B3", "E6:g",
                                         "tA3:g", "tA3:rot", "tD4:g", "tD4:ends", "A2:g"};
  std::map<std::string, Verdict> alone;
  for (const std::string& token : pool) {
    guarded(t, token, [&] {
      const SymmetricGraph p = catalog_pair(token);
      alone.emplace(token, decide(p.graph, p.group));
    });
  }

  std::mt19937 rng(20240611u);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::string> tokens;
    const std::size_t count = 2 + pick(2);
    for (std::size_t i = 0; i < count; ++i) tokens.push_back(pool[pick(pool.size())]);
    std::string label = "union";
    for (const auto& tok : tokens) label += " " + tok;
    guarded(t, label, [&] {
      std::vector<SymmetricGraph> blocks;
      std::vector<Status> parts;
      for (const auto& tok : tokens) {
        blocks.push_back(catalog_pair(tok));
        parts.push_back(alone.at(tok).status);
      }
      const SymmetricGraph u = disjoint_union(blocks);
      const Verdict v = decide(u.graph, u.group);
      t.check(v.status == conjunction(parts), label + ": " + status_name(v.status) + " against conjunction " +
                                                  status_name(conjunction(parts)));
      bool per_component = v.components.size() == parts.size();
      for (size_t i = 0; per_component && i < parts.size(); ++i)
        per_component = v.components[i].status == parts[i];
      t.check(per_component, label + ": component verdicts differ from the blocks decided alone");
    });
  }

  for (int trial = 0; trial < 12; ++trial) {
    const std::string token = pool[pick(pool.size())];
    const std::string label = "mixed " + token + " #" + std::to_string(trial);
    guarded(t, label, [&] {
      const SymmetricGraph base = catalog_pair(token);
      const OrbitPartition orbits = vertex_orbits(base.group);
      const int extra = 1 + static_cast<int>(pick(3));
      std::vector<VertexId> ids = base.graph.vertices();
      std::vector<Edge> edges = base.graph.edges();
      std::vector<VertexId> added;
      for (int k = 0; k < extra; ++k) {
        const VertexId v = 1000 + k;
        ids.push_back(v);
        added.push_back(v);
        for (int p : orbits.orbits[pick(orbits.orbits.size())]) edges.push_back({v, base.graph.id(p), Label(3)});
        if (k > 0) edges.push_back({v - 1, v, pick(2) ? Label(3) : Label::infinity()});
      }
      const CoxeterGraph graph(ids, edges);
      std::vector<NamedSymmetry> gens;
      for (const NamedSymmetry& ns : base.group.generators()) {
        std::map<VertexId, VertexId> perm;
        for (int p = 0; p < base.graph.size(); ++p) perm[base.graph.id(p)] = base.graph.id(ns.symmetry(p));
        gens.push_back({ns.name, validate_symmetry(graph, perm)});
      }
      std::vector<int> infinite;
      for (VertexId v : added) infinite.push_back(graph.position(v));
      const SymmetryGroup group(graph, gens, SymmetryGroup::kDefaultCap, infinite);

      const Verdict mixed = decide(graph, group);
      const Verdict& reference = alone.at(token);
      t.check(mixed.status == reference.status && mixed.budget_exhausted == reference.budget_exhausted,
              label + ": " + status_name(mixed.status) + " against " + status_name(reference.status));
      t.check(mixed.dropped == added, label + ": dropped vertices differ from the infinite orbits");
    });
  }
  return t.result(8, "reductions", "Reductions to components and finite orbits");
}

// 9. Cross-validation.

CriterionResult cross_validation() {
  Tally t;
  const std::vector<std::string> matrix = {
      "A3:g",   "A5:g",    "A7:g",     "D4:g",     "D5:g",     "D6:g",     "D4:g1",   "D4:g1g2", "E6:g",
      "tA3:g",  "tA5:g",   "tA7:g",    "tD4:g",    "tD5:g",    "tD6:g",    "tD4:g1",  "tD4:g1g2", "tE6:g",
      "iAi3:g", "iAi5:g",  "Dinf6:g",  "Dinf8:g",  "E8",       "tD4:ends", "tD5:ends", "tD6:rev", "tD8:rev",
      "tD4:rot4", "tE6:rot3", "tE7:g", "tA3:rot",  "tA3:gg",   "tA5:rot",  "A4:g",    "A6:g",    "tA4:g",
      "tA3:edge", "tD4:rev"};
  std::size_t agreements = 0;
  for (const std::string& token : matrix) {
    guarded(t, token, [&] {
      const SymmetricGraph pair = catalog_pair(token);
      const bool listed = classify_reduced(pair.graph, pair.group).admissible();
      const Verdict v = decide(pair.graph, pair.group);
      t.check(!v.budget_exhausted, token + ": budget exhausted");
      const bool positive = positive_outcome(v);
      t.check(listed == positive, token + ": classification " + (listed ? "admits" : "rejects") + ", decision " +
                                      status_name(v.status));
      agreements += listed == positive;
    });
  }
  t.check(agreements >= 25, "only " + std::to_string(agreements) + " agreeing pairs");
  return t.result(9, "crossval", "Classification agrees with decision");
}

}  // namespace

std::vector<std::string> acceptance_tags() {
  return {"roots", "folding", "positive", "negative", "fmap", "affine", "properties", "reductions", "crossval"};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const std::vector<std::string> tags = acceptance_tags();
  for (const std::string& tag : options.only)
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw Error("unknown criterion tag '" + tag + "'");
  auto wanted = [&](const std::string& tag) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), tag) != options.only.end();
  };

  std::vector<CriterionResult> out;
  if (wanted("roots")) out.push_back(root_counts());
  if (wanted("folding")) out.push_back(folding_dictionary());
  if (wanted("positive")) out.push_back(positive_verdicts());
  if (wanted("negative")) out.push_back(negative_verdicts());
  if (wanted("fmap")) out.push_back(fmap_bijection());
  if (wanted("affine")) out.push_back(affine_certificates(options));
  if (wanted("properties")) out.push_back(property_suites());
  if (wanted("reductions")) out.push_back(reductions());
  if (wanted("crossval")) out.push_back(cross_validation());
  return out;
}

}  // namespace coxfold

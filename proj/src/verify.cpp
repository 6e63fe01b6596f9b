#include "coxfold/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coxfold/catalog.hpp"
#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

Vector form_times(const FormMatrix& form, const Vector& x) { return mul(form.matrix(), x); }

Surd dot(const Vector& a, const Vector& b) {
  Surd total;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero() && !b(i).is_zero()) total += a(i) * b(i);
  return total;
}

bool outside_unit_set(const Surd& c) { return !(c.is_zero() || c == Surd(1) || c == Surd(-1)); }

std::string vertex_list(const CoxeterGraph& g) {
  std::string out = "{";
  for (int i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g.id(i));
  return out + "}";
}

std::optional<FailureWitness> pairing_witness(const FormMatrix& form, const SymmetryGroup& group,
                                              const Vector& alpha, const std::string& source) {
  const Vector b_alpha = form_times(form, alpha);
  for (const Symmetry& g : group.elements()) {
    if (g.is_identity()) continue;
    const Vector image = permute(g.images(), alpha);
    if (image == alpha) continue;
    const Surd p = dot(b_alpha, image);
    if (!p.is_zero()) return FailureWitness{FailureWitness::Kind::orbit_pairing, alpha, g, p, {}, source};
  }
  return std::nullopt;
}

}  // namespace

std::optional<CommutationViolation> check_orbit_commutation(const CoxeterGraph& graph,
                                                            const SymmetryGroup& group) {
  for (int s = 0; s < graph.size(); ++s)
    for (const Symmetry& g : group.elements()) {
      const int t = g(s);
      if (t != s && !(graph.label(s, t) == Label(2))) return CommutationViolation{s, t, g};
    }
  return std::nullopt;
}

std::optional<Symmetry> check_fixed_vertex(const SymmetryGroup& group) {
  for (const Symmetry& g : group.elements())
    if (!g.has_fixed_point()) return g;
  return std::nullopt;
}

bool witness_is_valid(const FormMatrix& form, const FailureWitness& w) {
  const Vector image = permute(w.g.images(), w.root);
  if (w.kind == FailureWitness::Kind::orbit_pairing)
    return image != w.root && !bilinear(form, w.root, image).is_zero() &&
           bilinear(form, w.root, image) == w.pairing;
  if (!w.other) return false;
  const Surd p = bilinear(form, w.root, *w.other);
  return image == w.root && permute(w.g.images(), *w.other) != *w.other && outside_unit_set(p) &&
         p == w.pairing;
}

std::optional<FailureWitness> witness_search(const FormMatrix& form, const SymmetryGroup& group,
                                             const RootSet& roots, const std::vector<Vector>& seeds) {
  for (const Vector& seed : seeds)
    if (auto w = pairing_witness(form, group, seed, "seeded root")) return w;
  for (std::size_t i : roots.sorted_order())
    if (auto w = pairing_witness(form, group, roots[i].coords, "root search")) return w;
  return std::nullopt;
}

std::optional<FailureWitness> propagation_search(const FormMatrix& form, const SymmetryGroup& group,
                                                 const RootSet& roots) {
  const auto order = roots.sorted_order();
  std::vector<Vector> b;
  b.reserve(order.size());
  for (std::size_t i : order) b.push_back(form_times(form, roots[i].coords));
  for (const Symmetry& g : group.elements()) {
    if (g.is_identity()) continue;
    std::vector<bool> fixed;
    for (std::size_t i : order) fixed.push_back(permute(g.images(), roots[i].coords) == roots[i].coords);
    for (std::size_t a = 0; a < order.size(); ++a) {
      if (!fixed[a]) continue;
      for (std::size_t c = 0; c < order.size(); ++c) {
        if (fixed[c]) continue;
        const Surd p = dot(b[a], roots[order[c]].coords);
        if (outside_unit_set(p))
          return FailureWitness{FailureWitness::Kind::fixed_propagation, roots[order[a]].coords, g, p,
                                roots[order[c]].coords, "fixed-root propagation"};
      }
    }
  }
  return std::nullopt;
}

bool is_real_root(const CanonicalRepresentation& rep, const Vector& x, int step_cap) {
  const Sign sign = uniform_sign(x);
  if (sign == Sign::zero || x.size() != rep.dimension()) return false;
  Vector y = sign == Sign::positive ? x : Vector(-x);
  for (int step = 0; step < step_cap; ++step) {
    const auto supp = support(y);
    if (supp.size() == 1 && y(supp.front()) == Surd(1)) return true;
    const Vector by = form_times(rep.form(), y);
    int s = -1;
    for (int i = 0; i < rep.dimension() && s < 0; ++i)
      if (by(i).sign() == Sign::positive) s = i;
    if (s < 0) return false;
    y(s) -= by(s);
    if (uniform_sign(y) != Sign::positive) return false;
  }
  return false;
}

std::vector<Vector> path_seeds(const CoxeterGraph& graph, const Symmetry& g) {
  std::vector<Vector> out;
  for (int s = 0; s < graph.size(); ++s) {
    if (g(s) == s) continue;
    const auto path = graph.shortest_path(s, g(s));
    if (path.empty()) continue;
    Vector v = Vector::Zero(graph.size());
    for (int p : path) v(p) = Surd(1);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

GroupElement evaluate_word(const CanonicalRepresentation& rep, const FoldedSystem& folded,
                           const Word& word) {
  GroupElement w = GroupElement::identity(rep.dimension());
  for (const GeneratorTag& tag : word) {
    if (tag.kind == GeneratorTag::Kind::simple)
      w = w * rep.simple_reflection(tag.index);
    else
      w = w * folded.generators.at(static_cast<size_t>(tag.index)).longest;
  }
  return w;
}

OrbitSearch orbit_search(const FoldedSystem& folded, int dimension, int start, int max_depth,
                         std::size_t node_cap) {
  OrbitSearch out;
  out.start = start;
  const Vector origin = unit_vector(dimension, start);
  out.reached.emplace(origin, OrbitSearch::Reached{{}, 0});
  std::vector<Vector> layer{origin};
  for (int depth = 1; depth <= max_depth + 1 && !layer.empty(); ++depth) {
    std::vector<Vector> next;
    for (const Vector& x : layer) {
      const Word& parent = out.reached.at(x).word;
      for (size_t k = 0; k < folded.generators.size(); ++k) {
        Vector y = folded.generators[k].action.apply(x);
        if (out.reached.count(y)) continue;
        if (depth > max_depth) return out;  // probe layer found something new
        Word word{GeneratorTag::folded(static_cast<int>(k))};
        word.insert(word.end(), parent.begin(), parent.end());
        out.reached.emplace(y, OrbitSearch::Reached{std::move(word), depth});
        next.push_back(std::move(y));
        if (out.reached.size() > node_cap)
          throw CapExceeded("orbit search exceeded " + std::to_string(node_cap) + " vectors");
      }
    }
    layer = std::move(next);
  }
  out.closed = true;
  return out;
}

CoverageEvidence coverage_check(const CanonicalRepresentation& rep, const SymmetryGroup& group,
                                const FoldedSystem& folded, const RootSet& roots,
                                const Budget& budget) {
  CoverageEvidence ev;
  ev.roots_complete = roots.complete();
  const int n = rep.dimension();
  std::vector<OrbitSearch> searches;
  for (int s = 0; s < n; ++s) {
    const Vector alpha = unit_vector(n, s);
    const bool seen = std::any_of(searches.begin(), searches.end(),
                                  [&](const OrbitSearch& o) { return o.reached.count(alpha) > 0; });
    if (!seen) searches.push_back(orbit_search(folded, n, s, budget.orbit_depth, budget.node_cap));
  }
  auto locate = [&](const Vector& x) -> const OrbitSearch* {
    for (const OrbitSearch& o : searches)
      if (o.reached.count(x)) return &o;
    return nullptr;
  };

  int first_gap = roots.depth_reached() + 1;
  for (std::size_t i : roots.sorted_order()) {
    const Vector& alpha = roots[i].coords;
    const Vector minus = -alpha;
    const OrbitSearch* pos = locate(alpha);
    const OrbitSearch* neg = locate(minus);
    if (!pos || !neg) {
      ev.uncovered.push_back(alpha);
      first_gap = std::min(first_gap, roots[i].depth);
      continue;
    }
    CoverageEvidence::Entry e{alpha, pos->start, pos->reached.at(alpha).word, neg->start,
                              neg->reached.at(minus).word};
    if (evaluate_word(rep, folded, e.word).apply(unit_vector(n, e.start)) != alpha) ++ev.discrepancies;
    if (evaluate_word(rep, folded, e.negative_word).apply(unit_vector(n, e.negative_start)) != minus)
      ++ev.discrepancies;
    ev.covered.push_back(std::move(e));
  }
  ev.depth_covered = first_gap - 1;

  if (roots.complete()) {
    SearchLimits limits{static_cast<int>(roots.size()) + 1, budget.node_cap};
    const RootSet folded_roots = enumerate_folded_roots(folded, limits);
    const FMap f = compute_F(folded, folded_roots, roots, root_orbits(roots, group));
    ev.f_bijective = folded_roots.complete() && f.unresolved == 0 && f.surjective();
  }
  return ev;
}

EquivClasses equiv_classes(const RootSet& roots, const FormMatrix& form) {
  EquivClasses out;
  out.definitive = roots.complete();
  for (const auto& e : roots.entries()) out.members.push_back(e.coords);
  for (const auto& e : roots.entries()) out.members.push_back(-e.coords);
  const std::size_t m = out.members.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Vector> b;
  for (const Vector& x : out.members) b.push_back(form_times(form, x));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (outside_unit_set(dot(b[i], out.members[j]))) parent[find(i)] = find(j);
  std::map<std::size_t, std::size_t> label;
  out.class_of.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [it, fresh] = label.emplace(find(i), label.size());
    out.class_of[i] = it->second;
  }
  out.count = label.size();
  return out;
}

bool power_law_holds(const GroupElement& w, const Vector& x, const Vector& y) {
  Vector forward = x;
  Vector backward = x;
  for (int k = 1; k <= 3; ++k) {
    forward = w.apply(forward);
    backward = mul(w.inverse_matrix(), backward);
    if (forward != Vector(x + Surd(k) * y) || backward != Vector(x - Surd(k) * y)) return false;
  }
  return true;
}

bool AffineCertificate::valid() const {
  return null_checks && !translations.empty() &&
         std::all_of(translations.begin(), translations.end(),
                     [](const Translation& t) { return t.verified; });
}

std::optional<AffineCertificate> affine_certificate(const CanonicalRepresentation& rep,
                                                    const SymmetryGroup& group,
                                                    const FoldedSystem& folded,
                                                    const Budget& budget) {
  const CoxeterGraph& graph = rep.graph();
  const int n = graph.size();
  const GraphType type = recognize(graph);
  if (type.family != Family::tA && type.family != Family::tD && type.family != Family::tE)
    return std::nullopt;

  std::optional<std::vector<int>> relabel;
  for (const auto& r : all_relabelings(graph, type)) {
    const int z = r[0];
    if (std::all_of(group.elements().begin(), group.elements().end(),
                    [&](const Symmetry& g) { return g(z) == z; })) {
      relabel = r;
      break;
    }
  }
  if (!relabel) return std::nullopt;

  AffineCertificate cert;
  cert.family = type.name();
  cert.zero_vertex = (*relabel)[0];
  const int z = cert.zero_vertex;
  const Vector catalog_delta = null_root(type.family, type.rank);
  cert.delta = Vector::Zero(n);
  for (int k = 0; k < n; ++k) cert.delta((*relabel)[static_cast<size_t>(k)]) = catalog_delta(k);
  const Vector alpha_z = unit_vector(n, z);
  cert.beta = cert.delta - alpha_z;
  cert.null_checks = is_zero(form_times(rep.form(), cert.delta)) &&
                     bilinear(rep.form(), alpha_z, cert.beta) == Surd(-2);

  // Covering set of the finite part from the orbits of its fixed subgroup.
  std::vector<int> rest;
  for (int p = 0; p < n; ++p)
    if (p != z) rest.push_back(p);
  const SymmetricGraph finite = restrict_pair(graph, group, rest);
  const CanonicalRepresentation finite_rep(finite.graph);
  const FoldedSystem finite_folded = fold(finite_rep, finite.group, budget.order_cap);
  const RootSet finite_roots = enumerate_positive_roots(finite_rep, 100000, budget.node_cap);
  std::set<Vector, VectorLess> pending;
  for (const auto& e : finite_roots.entries()) {
    pending.insert(e.coords);
    pending.insert(-e.coords);
  }
  for (int local = 0; local < finite.graph.size() && !pending.empty(); ++local) {
    const OrbitSearch o =
        orbit_search(finite_folded, finite.graph.size(), local, 100000, budget.node_cap);
    bool useful = false;
    for (const auto& [x, reached] : o.reached) useful = pending.erase(x) > 0 || useful;
    if (useful) cert.covering.push_back(rest[static_cast<size_t>(local)]);
  }
  if (!pending.empty()) return std::nullopt;

  std::map<int, OrbitSearch> searches;
  auto search_from = [&](int s) -> const OrbitSearch& {
    auto it = searches.find(s);
    if (it == searches.end())
      it = searches.emplace(s, orbit_search(folded, n, s, budget.orbit_depth, budget.node_cap)).first;
    return it->second;
  };
  auto fixes_delta = [&](const GroupElement& w) { return w.apply(cert.delta) == cert.delta; };

  for (int s : cert.covering) {
    AffineCertificate::Translation t;
    t.s = s;
    const Vector alpha_s = unit_vector(n, s);
    const Vector target = alpha_s + cert.delta;
    const OrbitSearch& own = search_from(s);
    if (auto it = own.reached.find(target); it != own.reached.end()) {
      t.part = 1;
      t.word = it->second.word;
      const GroupElement w = evaluate_word(rep, folded, t.word);
      t.verified = w.apply(alpha_s) == target && fixes_delta(w) && power_law_holds(w, alpha_s, cert.delta);
    } else {
      const OrbitSearch& from_zero = search_from(z);
      const auto there = from_zero.reached.find(target);
      const auto back = own.reached.find(Vector(alpha_z + cert.delta));
      if (there == from_zero.reached.end() || back == own.reached.end()) return std::nullopt;
      t.part = 2;
      t.word = there->second.word;
      t.back_word = back->second.word;
      const GroupElement w = evaluate_word(rep, folded, t.word);
      const GroupElement w_back = evaluate_word(rep, folded, t.back_word);
      t.verified = w.apply(alpha_z) == target && w_back.apply(alpha_s) == Vector(alpha_z + cert.delta) &&
                   fixes_delta(w) && fixes_delta(w_back) &&
                   power_law_holds(w_back * w, alpha_z, Vector(Surd(2) * cert.delta));
    }
    cert.translations.push_back(std::move(t));
  }
  return cert;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::verified_to_depth:
      return "verified_to_depth";
    case Status::certified_affine:
      return "certified_affine";
  }
  return "unknown";
}

bool is_positive(Status s) { return s == Status::holds || s == Status::certified_affine; }

ComponentVerdict decide_component(const CoxeterGraph& graph, const SymmetryGroup& group,
                                  const Budget& budget, const std::vector<Vector>& seeds) {
  ComponentVerdict cv;
  cv.vertices = graph.vertices();
  cv.group_order = group.order();
  const GraphType type = recognize(graph);
  cv.graph = type.known() ? type.name() : vertex_list(graph);

  if (group.is_trivial()) {
    cv.status = Status::holds;
    CoverageEvidence ev;
    ev.by_definition = true;
    cv.coverage = std::move(ev);
    cv.notes.push_back("trivial group");
    return cv;
  }

  const CanonicalRepresentation rep(graph);
  if (auto v = check_orbit_commutation(graph, group)) {
    const Vector alpha = unit_vector(graph.size(), v->s);
    cv.status = Status::fails;
    cv.witness = FailureWitness{FailureWitness::Kind::orbit_pairing, alpha, v->g,
                                rep.form()(v->s, v->t), {}, "orbit commutation"};
    cv.notes.push_back("vertices " + std::to_string(graph.id(v->s)) + " and " +
                       std::to_string(graph.id(v->t)) + " share an orbit and are joined");
    return cv;
  }

  const RootSet roots = enumerate_positive_roots(rep, budget.root_depth, budget.node_cap);
  cv.positive_roots = roots.size();
  cv.roots_complete = roots.complete();

  std::vector<Vector> all_seeds;
  for (const Vector& s : seeds)
    if (is_real_root(rep, s)) all_seeds.push_back(s);
  if (auto g = check_fixed_vertex(group)) {
    cv.notes.push_back("element " + cycle_string(graph, *g) + " fixes no vertex");
    for (Vector& s : path_seeds(graph, *g))
      if (is_real_root(rep, s)) all_seeds.push_back(std::move(s));
  }
  if (auto w = witness_search(rep.form(), group, roots, all_seeds)) {
    cv.status = Status::fails;
    cv.witness = std::move(w);
    return cv;
  }
  if (auto w = propagation_search(rep.form(), group, roots)) {
    cv.status = Status::fails;
    cv.witness = std::move(w);
    return cv;
  }

  const FoldedSystem folded = fold(rep, group, budget.order_cap);
  for (const auto& gen : folded.generators) cv.folded_orbits.push_back(gen.orbit);
  for (const auto& X : folded.non_spherical) {
    std::string ids;
    for (int p : X) ids += (ids.empty() ? "" : ",") + std::to_string(graph.id(p));
    cv.notes.push_back("orbit {" + ids + "} is not spherical and is left out of the folding");
  }
  CoverageEvidence ev = coverage_check(rep, group, folded, roots, budget);
  const bool covered = ev.uncovered.empty();
  if (roots.complete() && covered != ev.f_bijective)
    throw InvariantViolation("orbit coverage and surjectivity of F disagree on " + cv.graph);
  const int depth_covered = ev.depth_covered;
  cv.coverage = std::move(ev);

  if (roots.complete() && covered) {
    if (graph.truncation()) {
      cv.status = Status::verified_to_depth;
      cv.depth = graph.truncation()->size;
      cv.notes.push_back("truncation of size " + std::to_string(cv.depth) +
                         " holds; the infinite graph is the union of such truncations");
    } else {
      cv.status = Status::holds;
    }
    return cv;
  }
  if (roots.complete()) cv.notes.push_back("roots complete but some are not covered and no witness was found");

  if (!roots.complete()) {
    if (auto cert = affine_certificate(rep, group, folded, budget); cert && cert->valid()) {
      cv.status = Status::certified_affine;
      cv.certificate = std::move(cert);
      return cv;
    }
  }
  cv.status = Status::verified_to_depth;
  cv.depth = depth_covered;
  cv.budget_exhausted = true;
  return cv;
}

Verdict decide(const CoxeterGraph& graph, const SymmetryGroup& group, const Budget& budget,
               const std::vector<Vector>& seeds) {
  Verdict out;
  const SymmetricGraph finite = restrict_to_finite_orbits(graph, group);
  for (VertexId v : graph.vertices())
    if (!finite.graph.contains(v)) out.dropped.push_back(v);

  for (const SymmetricGraph& piece : connected_components(finite.graph, finite.group)) {
    std::vector<Vector> local;
    for (const Vector& seed : seeds) {
      if (seed.size() != graph.size()) throw DimensionMismatch("seed root of the wrong dimension");
      Vector x = Vector::Zero(piece.graph.size());
      bool inside = true;
      for (int p : support(seed)) {
        if (!piece.graph.contains(graph.id(p))) {
          inside = false;
          break;
        }
        x(piece.graph.position(graph.id(p))) = seed(p);
      }
      if (inside) local.push_back(std::move(x));
    }
    out.components.push_back(decide_component(piece.graph, piece.group, budget, local));
  }

  auto any = [&](auto pred) { return std::any_of(out.components.begin(), out.components.end(), pred); };
  if (any([](const ComponentVerdict& c) { return c.status == Status::fails; })) {
    out.status = Status::fails;
  } else if (any([](const ComponentVerdict& c) { return c.status == Status::verified_to_depth; })) {
    out.status = Status::verified_to_depth;
    out.budget_exhausted = any([](const ComponentVerdict& c) { return c.budget_exhausted; });
  } else if (any([](const ComponentVerdict& c) { return c.status == Status::certified_affine; })) {
    out.status = Status::certified_affine;
  } else {
    out.status = Status::holds;
  }
  return out;
}

}  // namespace coxfold

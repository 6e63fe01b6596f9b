#include "coxfold/folding.hpp"

#include <algorithm>
#include <map>

#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

GroupElement longest_element(const CanonicalRepresentation& rep, const std::vector<int>& X) {
  const CoxeterGraph& graph = rep.graph();
  if (!spherical_check(graph, X)) throw Error("longest_element: W_X is infinite");

  GroupElement w = GroupElement::identity(rep.dimension());
  for (bool ascended = true; ascended;) {
    ascended = false;
    for (int s : X) {
      if (uniform_sign(w.matrix().col(s)) == Sign::positive) {
        w = w * rep.simple_reflection(s);
        ascended = true;
        break;
      }
    }
  }

  if (!coxfold::is_identity(mul(w.matrix(), w.matrix())))
    throw InvariantViolation("longest_element: u_X is not an involution");
  const CoxeterGraph sub = graph.induced(X);
  const RootSet local = enumerate_positive_roots(CanonicalRepresentation(sub), 100000);
  if (!local.complete()) throw InvariantViolation("longest_element: parabolic roots incomplete");
  for (const auto& e : local.entries()) {
    Vector x = Vector::Zero(rep.dimension());
    for (size_t k = 0; k < X.size(); ++k) x(X[k]) = e.coords(static_cast<Eigen::Index>(k));
    if (uniform_sign(w.apply(x)) != Sign::negative)
      throw InvariantViolation("longest_element: a positive root of W_X stays positive");
  }
  if (w.word().size() != local.size())
    throw InvariantViolation("longest_element: word length differs from the number of positive roots");
  return w;
}

OrderPaths folded_order_paths(const FormMatrix& form, const FoldedGenerator& x,
                              const FoldedGenerator& y, int cap) {
  OrderPaths out;
  const Surd p = bilinear(form, x.alpha_hat, y.alpha_hat);
  const Surd a = bilinear(form, x.alpha_hat, x.alpha_hat);
  const Surd b = bilinear(form, y.alpha_hat, y.alpha_hat);
  const Surd ab = a * b;
  if (p.is_zero()) {
    out.from_form = Label(2);
  } else if (p.sign() == Sign::negative && p * p >= ab) {
    out.from_form = Label::infinity();
  } else if (p.sign() == Sign::negative) {
    // 4cos^2(pi/m) for m = 3, 4, 5, 6.
    const Surd ratio = Surd(4) * p * p / ab;
    const Surd golden_square = (Surd(3) + Surd::radical(5)) * Surd(Rational(1, 2));
    const std::pair<Surd, int> table[] = {{Surd(1), 3}, {Surd(2), 4}, {golden_square, 5}, {Surd(3), 6}};
    for (const auto& [value, m] : table)
      if (ratio == value) out.from_form = Label(m);
  }
  if (out.from_form && out.from_form->is_infinite()) return out;

  const Matrix m = mul(x.longest.matrix(), y.longest.matrix());
  Matrix power = m;
  for (int k = 1; k <= cap; ++k) {
    if (coxfold::is_identity(power)) {
      out.from_powers = Label(k);
      break;
    }
    power = mul(power, m);
  }
  return out;
}

Label folded_order(const FormMatrix& form, const FoldedGenerator& x, const FoldedGenerator& y,
                   int cap) {
  const OrderPaths paths = folded_order_paths(form, x, y, cap);
  if (paths.from_form && paths.from_powers && !(*paths.from_form == *paths.from_powers))
    throw InvariantViolation("folded order: form value gives " + paths.from_form->to_string() +
                             ", matrix powers give " + paths.from_powers->to_string());
  if (paths.from_form) return *paths.from_form;
  if (paths.from_powers) return *paths.from_powers;
  throw CapExceeded("folded order unresolved after " + std::to_string(cap) + " matrix powers");
}

FoldedSystem fold(const CanonicalRepresentation& rep, const SymmetryGroup& group, int order_cap) {
  const CoxeterGraph& graph = rep.graph();
  if (group.degree() != graph.size()) throw DimensionMismatch("fold: group acts on another vertex set");
  FoldedSystem out;
  out.orbits = vertex_orbits(group);
  for (size_t k = 0; k < out.orbits.orbits.size(); ++k) {
    const auto& X = out.orbits.orbits[k];
    if (!out.orbits.finite[k]) continue;
    if (!spherical_check(graph, X)) {
      out.non_spherical.push_back(X);
      continue;
    }
    FoldedGenerator gen;
    gen.orbit = X;
    gen.longest = longest_element(rep, X);
    gen.alpha_hat = Vector::Zero(rep.dimension());
    for (int s : X) gen.alpha_hat(s) = Surd(1);
    gen.action = SparseAction(gen.longest.matrix());
    out.generators.push_back(std::move(gen));
  }

  const int k = static_cast<int>(out.generators.size());
  out.folded_matrix.assign(static_cast<size_t>(k), std::vector<Label>(static_cast<size_t>(k), Label(1)));
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    ids.push_back(i + 1);
    for (int j = i + 1; j < k; ++j) {
      const Label m = folded_order(rep.form(), out.generators[static_cast<size_t>(i)],
                                   out.generators[static_cast<size_t>(j)], order_cap);
      out.folded_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = m;
      out.folded_matrix[static_cast<size_t>(j)][static_cast<size_t>(i)] = m;
      if (!(m == Label(2))) edges.push_back({i + 1, j + 1, m});
    }
  }
  out.folded_graph = CoxeterGraph(ids, edges);
  std::string name;
  for (const auto& comp : out.folded_graph.components()) {
    if (!name.empty()) name += " + ";
    name += recognize(out.folded_graph.induced(comp)).name();
  }
  out.folded_name = name;
  out.folded_graph = out.folded_graph.renamed(name);
  return out;
}

RootSet enumerate_folded_roots(const FoldedSystem& folded, const SearchLimits& limits) {
  std::vector<Vector> starts;
  std::vector<Generator> gens;
  for (size_t k = 0; k < folded.generators.size(); ++k) {
    starts.push_back(folded.generators[k].alpha_hat);
    gens.push_back({GeneratorTag::folded(static_cast<int>(k)), folded.generators[k].action});
  }
  const int dim = folded.orbits.index.empty() ? 0 : static_cast<int>(folded.orbits.index.size());
  return positive_orbit_search(dim, starts, gens, limits);
}

OrbitDecomposition root_orbits(const RootSet& roots, const SymmetryGroup& group) {
  OrbitDecomposition out;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  out.orbit_of.assign(roots.size(), kUnassigned);
  std::vector<RootOrbit> found;
  for (std::size_t i : roots.sorted_order()) {
    if (out.orbit_of[i] != kUnassigned) continue;
    RootOrbit orbit;
    for (const Symmetry& g : group.elements()) {
      const auto j = roots.find(permute(g.images(), roots[i].coords));
      if (!j) throw InvariantViolation("root_orbits: image of an enumerated root is missing");
      if (std::find(orbit.members.begin(), orbit.members.end(), *j) == orbit.members.end())
        orbit.members.push_back(*j);
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    for (std::size_t j : orbit.members)
      if (lex_compare(roots[j].coords, roots[orbit.representative].coords) < 0) orbit.representative = j;
    for (std::size_t j : orbit.members) out.orbit_of[j] = found.size();
    found.push_back(std::move(orbit));
  }
  out.orbits = std::move(found);
  return out;
}

Vector apply_folded_word(const FoldedSystem& folded, const Word& word, const Vector& x) {
  Vector y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind != GeneratorTag::Kind::folded) throw Error("simple tag in a folded word");
    y = folded.generators.at(static_cast<size_t>(it->index)).action.apply(y);
  }
  return y;
}

FMap compute_F(const FoldedSystem& folded, const RootSet& folded_roots, const RootSet& roots,
               const OrbitDecomposition& orbits) {
  FMap out;
  const int n = roots.dimension();
  std::map<std::size_t, std::size_t> preimage;
  for (std::size_t j = 0; j < folded_roots.size(); ++j) {
    std::optional<std::size_t> first;
    bool resolved = true;
    for (size_t w = 0; w < folded_roots[j].witnesses.size() && resolved; ++w) {
      const RootWitness& wit = folded_roots[j].witnesses[w];
      const auto& X = folded.generators.at(static_cast<size_t>(wit.start)).orbit;
      for (int s : X) {
        const Vector image = apply_folded_word(folded, wit.word, unit_vector(n, s));
        if (uniform_sign(image) != Sign::positive)
          throw InvariantViolation("compute_F: w(alpha_s) is not a positive root");
        const auto idx = roots.find(image);
        if (!idx) {
          resolved = false;
          break;
        }
        const std::size_t orbit = orbits.orbit_of[*idx];
        if (!first) {
          first = orbit;
        } else if (*first != orbit) {
          throw InvariantViolation("compute_F: witnesses of folded root " +
                                   to_string(folded_roots[j].coords) + " disagree");
        }
      }
      if (resolved && w > 0) ++out.witness_checks;
    }
    if (!resolved || !first) {
      out.image.push_back(std::nullopt);
      ++out.unresolved;
      continue;
    }
    if (!preimage.emplace(*first, j).second)
      throw InvariantViolation("compute_F: two folded roots map to one orbit");
    out.image.push_back(first);
  }
  for (std::size_t k = 0; k < orbits.orbits.size(); ++k)
    if (!preimage.count(k)) out.missed_orbits.push_back(k);
  return out;
}

}  // namespace coxfold

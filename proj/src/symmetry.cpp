#include "coxfold/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "coxfold/errors.hpp"

namespace coxfold {

Symmetry::Symmetry(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[static_cast<size_t>(x)])
      throw SymmetryError("permutation is not a bijection");
    hit[static_cast<size_t>(x)] = true;
  }
}

Symmetry Symmetry::identity(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Symmetry(std::move(images));
}

Symmetry Symmetry::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) inv[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return Symmetry(std::move(inv));
}

bool Symmetry::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Symmetry::has_fixed_point() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i)) return true;
  return false;
}

int Symmetry::order() const {
  int k = 1;
  for (Symmetry p = *this; !p.is_identity(); p = p * *this) ++k;
  return k;
}

Symmetry operator*(const Symmetry& a, const Symmetry& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("composing permutations of different degree");
  std::vector<int> images(b.images_.size());
  for (size_t i = 0; i < images.size(); ++i) images[i] = a(b(static_cast<int>(i)));
  return Symmetry(std::move(images));
}

Symmetry validate_symmetry(const CoxeterGraph& graph, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != graph.size())
    throw SymmetryError("permutation has " + std::to_string(perm.size()) +
                        " entries for a graph with " + std::to_string(graph.size()) +
                        " vertices");
  Symmetry g(perm);
  for (int s = 0; s < graph.size(); ++s)
    for (int t = s + 1; t < graph.size(); ++t)
      if (!(graph.label(s, t) == graph.label(g(s), g(t))))
        throw SymmetryError("label not preserved on pair (" + std::to_string(graph.id(s)) +
                            ", " + std::to_string(graph.id(t)) + "): " +
                            graph.label(s, t).to_string() + " maps to " +
                            graph.label(g(s), g(t)).to_string());
  return g;
}

Symmetry validate_symmetry(const CoxeterGraph& graph, const std::map<VertexId, VertexId>& perm) {
  std::vector<int> images(static_cast<size_t>(graph.size()));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& [from, to] : perm) {
    if (!graph.contains(from) || !graph.contains(to))
      throw SymmetryError("permutation moves unknown vertex " +
                          std::to_string(graph.contains(from) ? to : from));
    images[static_cast<size_t>(graph.position(from))] = graph.position(to);
  }
  return validate_symmetry(graph, images);
}

std::string cycle_string(const CoxeterGraph& graph, const Symmetry& g) {
  std::string out;
  std::vector<bool> seen(static_cast<size_t>(g.degree()), false);
  for (int start = 0; start < g.degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || g(start) == start) continue;
    out += "(";
    for (int x = start; !seen[static_cast<size_t>(x)]; x = g(x)) {
      seen[static_cast<size_t>(x)] = true;
      if (x != start) out += " ";
      out += std::to_string(graph.id(x));
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

std::vector<Symmetry> close(int degree, const std::vector<NamedSymmetry>& generators,
                            std::size_t cap) {
  std::vector<Symmetry> elements{Symmetry::identity(degree)};
  std::set<Symmetry> seen{elements.front()};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Symmetry next = gen.symmetry * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw CapExceeded("symmetry group closure exceeds " + std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

SymmetryGroup::SymmetryGroup(const CoxeterGraph& graph, std::vector<NamedSymmetry> generators,
                             std::size_t cap, std::vector<int> infinite)
    : degree_(graph.size()), generators_(std::move(generators)), infinite_(std::move(infinite)) {
  for (const auto& gen : generators_) validate_symmetry(graph, gen.symmetry.images());
  std::sort(infinite_.begin(), infinite_.end());
  infinite_.erase(std::unique(infinite_.begin(), infinite_.end()), infinite_.end());
  for (int p : infinite_)
    if (p < 0 || p >= degree_) throw Error("infinite-orbit marker outside the vertex set");
  elements_ = close(degree_, generators_, cap);
}

SymmetryGroup SymmetryGroup::trivial(const CoxeterGraph& graph) { return SymmetryGroup(graph, {}); }

bool SymmetryGroup::contains(const Symmetry& g) const {
  return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

OrbitPartition vertex_orbits(const SymmetryGroup& group) {
  OrbitPartition out;
  const int n = group.degree();
  out.index.assign(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (out.index[static_cast<size_t>(s)] >= 0) continue;
    std::set<int> orbit;
    for (const auto& g : group.elements()) orbit.insert(g(s));
    const int k = static_cast<int>(out.orbits.size());
    out.orbits.emplace_back(orbit.begin(), orbit.end());
    bool finite = true;
    for (int x : orbit) {
      out.index[static_cast<size_t>(x)] = k;
      if (std::binary_search(group.infinite_positions().begin(), group.infinite_positions().end(), x))
        finite = false;
    }
    out.finite.push_back(finite);
  }
  return out;
}

SymmetricGraph restrict_pair(const CoxeterGraph& graph, const SymmetryGroup& group,
                             const std::vector<int>& positions) {
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  CoxeterGraph sub = graph.induced(sorted);
  std::vector<int> local(static_cast<size_t>(graph.size()), -1);
  for (size_t i = 0; i < sorted.size(); ++i) local[static_cast<size_t>(sorted[i])] = static_cast<int>(i);

  auto restrict = [&](const Symmetry& g) -> std::optional<Symmetry> {
    std::vector<int> images;
    for (int p : sorted) {
      const int q = local[static_cast<size_t>(g(p))];
      if (q < 0) return std::nullopt;
      images.push_back(q);
    }
    return Symmetry(std::move(images));
  };

  // Named generators that stabilize the set come first, then any stabilizer element not
  // yet generated.
  std::vector<NamedSymmetry> gens;
  std::vector<Symmetry> generated{Symmetry::identity(sub.size())};
  auto absorb = [&](const std::string& name, const Symmetry& h) {
    if (std::find(generated.begin(), generated.end(), h) != generated.end()) return;
    gens.push_back({name, h});
    generated = close(sub.size(), gens, SymmetryGroup::kDefaultCap);
  };
  for (const auto& gen : group.generators())
    if (auto h = restrict(gen.symmetry)) absorb(gen.name, *h);
  int extra = 0;
  for (const auto& g : group.elements())
    if (auto h = restrict(g)) {
      if (std::find(generated.begin(), generated.end(), *h) == generated.end())
        absorb("h" + std::to_string(++extra), *h);
    }

  std::vector<int> infinite;
  for (int p : group.infinite_positions())
    if (local[static_cast<size_t>(p)] >= 0) infinite.push_back(local[static_cast<size_t>(p)]);

  CoxeterGraph named = sub.renamed(graph.name());
  if (graph.truncation() && static_cast<int>(sorted.size()) == graph.size())
    named = named.with_truncation(*graph.truncation());
  return {named, SymmetryGroup(named, std::move(gens), SymmetryGroup::kDefaultCap, std::move(infinite))};
}

SymmetricGraph restrict_to_finite_orbits(const CoxeterGraph& graph, const SymmetryGroup& group) {
  const OrbitPartition part = vertex_orbits(group);
  std::vector<int> keep;
  for (size_t k = 0; k < part.orbits.size(); ++k)
    if (part.finite[k]) keep.insert(keep.end(), part.orbits[k].begin(), part.orbits[k].end());
  if (static_cast<int>(keep.size()) == graph.size()) return {graph, group};
  return restrict_pair(graph, group, keep);
}

std::vector<SymmetricGraph> connected_components(const CoxeterGraph& graph,
                                                 const SymmetryGroup& group) {
  const auto comps = graph.components();
  if (comps.size() == 1) return {{graph, group}};
  std::vector<SymmetricGraph> out;
  for (const auto& comp : comps) {
    SymmetricGraph piece = restrict_pair(graph, group, comp);
    out.push_back({piece.graph.renamed({}), std::move(piece.group)});
  }
  return out;
}

}  // namespace coxfold

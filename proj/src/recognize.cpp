#include <algorithm>

#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

struct Shape {
  Family family = Family::unknown;
  int rank = 0;
};

bool is3(const CoxeterGraph& g, int i, int j) { return g.label(i, j) == Label(3); }

// Vertices of a path graph in order, starting from an endpoint.
std::vector<int> path_order(const CoxeterGraph& g) {
  int start = 0;
  for (int i = 0; i < g.size(); ++i)
    if (g.degree(i) <= 1) {
      start = i;
      break;
    }
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (static_cast<int>(order.size()) < g.size()) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

Shape path_shape(const CoxeterGraph& g) {
  const int n = g.size();
  const auto order = path_order(g);
  std::vector<std::pair<int, int>> odd;  // (edge index, label)
  for (int k = 0; k + 1 < n; ++k) {
    const Label l = g.label(order[static_cast<size_t>(k)], order[static_cast<size_t>(k + 1)]);
    if (l.is_infinite()) return {};
    if (l.value() != 3) odd.emplace_back(k, l.value());
  }
  const int last = n - 2;
  if (odd.empty()) return {Family::A, n};
  if (odd.size() == 1) {
    const auto [k, m] = odd.front();
    const bool at_end = k == 0 || k == last;
    if (m == 4) {
      if (at_end) return {Family::B, n};
      if (n == 4 && k == 1) return {Family::F, 4};
      if (n == 5 && (k == 1 || k == 2)) return {Family::tF, 4};
    }
    if (m == 5 && at_end && (n == 3 || n == 4)) return {Family::H, n};
    if (m == 6 && at_end && n == 3) return {Family::tG, 2};
    return {};
  }
  if (odd.size() == 2 && odd[0] == std::make_pair(0, 4) && odd[1] == std::make_pair(last, 4))
    return n == 3 ? Shape{Family::tB, 2} : Shape{Family::tC, n - 1};
  return {};
}

// Branches hanging off `center`: vertex count and the labels read outward.
struct Branch {
  int length = 0;
  std::vector<int> labels;
};

std::vector<Branch> branches(const CoxeterGraph& g, int center) {
  std::vector<Branch> out;
  for (int first : g.neighbors(center)) {
    Branch b;
    int prev = center;
    int cur = first;
    for (;;) {
      const Label l = g.label(prev, cur);
      b.labels.push_back(l.is_infinite() ? 0 : l.value());
      ++b.length;
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0 || g.degree(cur) > 2) break;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(b));
  }
  return out;
}

Shape tree_shape(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<int> deg3, deg4;
  int max_degree = 0;
  for (int i = 0; i < n; ++i) {
    max_degree = std::max(max_degree, g.degree(i));
    if (g.degree(i) == 3) deg3.push_back(i);
    if (g.degree(i) == 4) deg4.push_back(i);
  }
  if (max_degree <= 2) return path_shape(g);

  bool all3 = true;
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) all3 = all3 && is3(g, i, j);

  if (max_degree == 4) {
    if (deg4.size() == 1 && n == 5 && all3) return {Family::tD, 4};
    return {};
  }
  if (deg3.size() == 2) {
    if (!all3) return {};
    int leaves = 0;
    for (int i = 0; i < n; ++i) leaves += g.degree(i) == 1;
    return leaves == 4 ? Shape{Family::tD, n - 1} : Shape{};
  }
  if (deg3.size() != 1) return {};

  auto bs = branches(g, deg3.front());
  std::sort(bs.begin(), bs.end(), [](const Branch& a, const Branch& b) { return a.length < b.length; });
  const int a = bs[0].length, b = bs[1].length, c = bs[2].length;
  if (all3) {
    if (a == 1 && b == 1) return {Family::D, c + 3};
    if (a == 1 && b == 2 && c >= 2 && c <= 4) return {Family::E, c + 4};
    if (a == 2 && b == 2 && c == 2) return {Family::tE, 6};
    if (a == 1 && b == 3 && c == 3) return {Family::tE, 7};
    if (a == 1 && b == 2 && c == 5) return {Family::tE, 8};
    return {};
  }
  // A single 4 on the outermost edge of one branch, the other two branches single vertices.
  int fours = 0;
  const Branch* with4 = nullptr;
  for (const Branch& br : bs)
    for (size_t k = 0; k < br.labels.size(); ++k) {
      if (br.labels[k] == 3) continue;
      if (br.labels[k] != 4 || k + 1 != br.labels.size()) return {};
      ++fours;
      with4 = &br;
    }
  if (fours != 1) return {};
  int short_branches = 0;
  for (const Branch& br : bs)
    if (&br != with4 && br.length == 1) ++short_branches;
  if (short_branches != 2) return {};
  return {Family::tB, n - 1};
}

Shape shape_of(const CoxeterGraph& g) {
  const int n = g.size();
  if (n == 1) return {Family::A, 1};
  const auto edges = g.edges();
  if (n == 2) {
    const Label l = edges.front().label;
    if (l.is_infinite()) return {Family::tA, 1};
    switch (l.value()) {
      case 3:
        return {Family::A, 2};
      case 4:
        return {Family::B, 2};
      case 6:
        return {Family::G, 2};
      default:
        return {Family::I2, l.value()};
    }
  }
  for (const Edge& e : edges)
    if (e.label.is_infinite()) return {};
  if (static_cast<int>(edges.size()) >= n) {
    bool cycle = static_cast<int>(edges.size()) == n;
    for (int i = 0; i < n && cycle; ++i) cycle = g.degree(i) == 2;
    for (const Edge& e : edges) cycle = cycle && e.label == Label(3);
    return cycle ? Shape{Family::tA, n - 1} : Shape{};
  }
  return tree_shape(g);
}

}  // namespace

GraphType recognize(const CoxeterGraph& graph) {
  if (graph.size() == 0) throw Error("recognize: empty graph");
  if (!graph.connected()) throw Error("recognize: graph is disconnected");
  Shape shape;
  if (graph.truncation()) {
    const ParsedToken t =
        parse_catalog_token(graph.truncation()->family + std::to_string(graph.truncation()->size));
    shape = {t.family, t.rank};
  } else {
    shape = shape_of(graph);
  }
  if (shape.family == Family::unknown) return {};
  const CatalogEntry rep = catalog_graph(shape.family, shape.rank);
  auto isos = isomorphisms(rep.graph, graph, 1);
  if (isos.empty()) return {};
  return {shape.family, shape.rank, std::move(isos.front())};
}

std::vector<std::vector<int>> all_relabelings(const CoxeterGraph& graph, const GraphType& type) {
  if (!type.known()) return {};
  return isomorphisms(catalog_graph(type.family, type.rank).graph, graph);
}

bool spherical_check(const CoxeterGraph& graph, const std::vector<int>& positions) {
  if (positions.empty()) return true;
  const CoxeterGraph sub = graph.induced(positions);
  for (const auto& comp : sub.components()) {
    const GraphType t = recognize(sub.induced(comp));
    if (!is_spherical_family(t.family)) return false;
  }
  return true;
}

}  // namespace coxfold

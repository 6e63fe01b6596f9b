#include "coxfold/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "coxfold/errors.hpp"

namespace coxfold {

Label::Label(int m) : m_(m) {
  if (m < 1) throw Error("label must be at least 1, got " + std::to_string(m));
}

int Label::value() const {
  if (is_infinite()) throw Error("label is infinite");
  return m_;
}

std::string Label::to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

CoxeterGraph::CoxeterGraph(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                           std::string name)
    : ids_(std::move(vertices)), name_(std::move(name)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw Error("duplicate vertex id");
  const int n = size();
  labels_.assign(static_cast<size_t>(n * n), Label(2));
  for (int i = 0; i < n; ++i) labels_[static_cast<size_t>(i * n + i)] = Label(1);
  std::vector<bool> set(static_cast<size_t>(n * n), false);
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v))
      throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " uses an unknown vertex");
    if (e.u == e.v) throw Error("self loop at vertex " + std::to_string(e.u));
    if (!e.label.is_infinite() && e.label.value() < 2)
      throw Error("label below 2 on edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    const int i = position(e.u);
    const int j = position(e.v);
    const size_t ij = static_cast<size_t>(i * n + j);
    const size_t ji = static_cast<size_t>(j * n + i);
    if (set[ij] && !(labels_[ij] == e.label))
      throw Error("conflicting labels on edge " + std::to_string(e.u) + "-" +
                  std::to_string(e.v));
    labels_[ij] = labels_[ji] = e.label;
    set[ij] = set[ji] = true;
  }
  adjacency_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !(label(i, j) == Label(2))) adjacency_[static_cast<size_t>(i)].push_back(j);
}

int CoxeterGraph::position(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw Error("unknown vertex " + std::to_string(v));
  return static_cast<int>(it - ids_.begin());
}

bool CoxeterGraph::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < size(); ++i)
    for (int j : neighbors(i))
      if (i < j) out.push_back({id(i), id(j), label(i, j)});
  return out;
}

CoxeterGraph CoxeterGraph::renamed(std::string name) const {
  CoxeterGraph out(*this);
  out.name_ = std::move(name);
  return out;
}

CoxeterGraph CoxeterGraph::with_truncation(Truncation t) const {
  CoxeterGraph out(*this);
  out.truncation_ = std::move(t);
  return out;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& positions) const {
  std::vector<VertexId> ids;
  for (int p : positions) ids.push_back(id(p));
  std::vector<Edge> kept;
  for (size_t a = 0; a < positions.size(); ++a)
    for (size_t b = a + 1; b < positions.size(); ++b) {
      const Label l = label(positions[a], positions[b]);
      if (!(l == Label(2))) kept.push_back({id(positions[a]), id(positions[b]), l});
    }
  return CoxeterGraph(std::move(ids), kept);
}

std::vector<std::vector<int>> CoxeterGraph::components() const {
  std::vector<int> comp(static_cast<size_t>(size()), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < size(); ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    comp[static_cast<size_t>(start)] = c;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (int w : neighbors(v))
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = c;
          queue.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<int> CoxeterGraph::shortest_path(int from, int to) const {
  std::vector<int> parent(static_cast<size_t>(size()), -2);
  std::deque<int> queue{from};
  parent[static_cast<size_t>(from)] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : neighbors(v))
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  if (parent[static_cast<size_t>(to)] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
  return a.ids_ == b.ids_ && a.labels_ == b.labels_;
}

namespace {

// Per-vertex invariant used to prune candidate images: degree plus the sorted list of
// incident labels.
std::vector<std::string> signatures(const CoxeterGraph& g) {
  std::vector<std::string> out;
  for (int i = 0; i < g.size(); ++i) {
    std::vector<std::string> ls;
    for (int j : g.neighbors(i)) ls.push_back(g.label(i, j).to_string());
    std::sort(ls.begin(), ls.end());
    std::string sig;
    for (const auto& l : ls) sig += l + ",";
    out.push_back(sig);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> isomorphisms(const CoxeterGraph& from, const CoxeterGraph& to,
                                           size_t limit) {
  std::vector<std::vector<int>> found;
  const int n = from.size();
  if (n != to.size() || limit == 0) return found;
  const auto sig_from = signatures(from);
  const auto sig_to = signatures(to);
  {
    auto a = sig_from, b = sig_to;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return found;
  }

  // Visit vertices so that each one after the first of its component has a visited
  // neighbor; its image is then confined to the neighbors of that neighbor's image.
  std::vector<int> order;
  std::vector<int> anchor(static_cast<size_t>(n), -1);
  for (const auto& comp : from.components()) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::deque<int> queue{comp.front()};
    seen[static_cast<size_t>(comp.front())] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : from.neighbors(v))
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          anchor[static_cast<size_t>(w)] = v;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> image(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  std::function<void(size_t)> extend = [&](size_t k) {
    if (found.size() >= limit) return;
    if (k == order.size()) {
      found.push_back(image);
      return;
    }
    const int v = order[k];
    std::vector<int> candidates;
    const int a = anchor[static_cast<size_t>(v)];
    if (a >= 0) {
      candidates = to.neighbors(image[static_cast<size_t>(a)]);
    } else {
      for (int c = 0; c < n; ++c) candidates.push_back(c);
    }
    for (int c : candidates) {
      if (used[static_cast<size_t>(c)]) continue;
      if (sig_from[static_cast<size_t>(v)] != sig_to[static_cast<size_t>(c)]) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = from.label(v, u) == to.label(c, image[static_cast<size_t>(u)]);
      }
      if (!ok) continue;
      image[static_cast<size_t>(v)] = c;
      used[static_cast<size_t>(c)] = true;
      extend(k + 1);
      used[static_cast<size_t>(c)] = false;
      image[static_cast<size_t>(v)] = -1;
    }
  };
  extend(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace coxfold

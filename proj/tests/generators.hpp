#pragma once

#include <random>
#include <vector>

#include "coxfold/graph.hpp"
#include "coxfold/surd.hpp"

namespace coxfold::testing {

inline std::mt19937 seeded(unsigned salt = 0) { return std::mt19937(0xC0FFEEu + salt); }

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random element of Q(√2, √3, √5) with small numerators and denominators; about half
/// the coordinates are zero.
inline Surd random_surd(std::mt19937& rng) {
  std::array<Rational, Surd::kDimension> c;
  for (auto& q : c) {
    if (uniform(rng, 0, 1) == 0) continue;
    q = Rational(uniform(rng, -9, 9), uniform(rng, 1, 6));
    q.canonicalize();
  }
  return Surd::from_masked(c);
}

/// Random connected Coxeter graph: a random tree plus a few extra edges, labels drawn
/// from {3, 4, 5, 6, inf}.
inline CoxeterGraph random_graph(std::mt19937& rng, int n, bool simply_laced = false) {
  std::vector<VertexId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(i + 1);
  auto label = [&] {
    if (simply_laced) return Label(3);
    const int pick = uniform(rng, 0, 9);
    if (pick < 6) return Label(3);
    if (pick == 6) return Label(4);
    if (pick == 7) return Label(5);
    if (pick == 8) return Label(6);
    return Label::infinity();
  };
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.push_back({uniform(rng, 1, v - 1), v, label()});
  const int extra = uniform(rng, 0, n / 3);
  for (int k = 0; k < extra; ++k) {
    const int u = uniform(rng, 1, n);
    const int v = uniform(rng, 1, n);
    bool present = u == v;
    for (const Edge& e : edges) present = present || (e.u == u && e.v == v) || (e.u == v && e.v == u);
    if (!present) edges.push_back({u, v, label()});
  }
  return CoxeterGraph(ids, edges);
}

/// Same graph with vertex ids replaced by a random injective relabeling into [1, 50].
inline CoxeterGraph shuffled(std::mt19937& rng, const CoxeterGraph& g, std::vector<VertexId>* new_ids = nullptr) {
  std::vector<VertexId> pool;
  for (int i = 1; i <= 50; ++i) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<VertexId> ids(pool.begin(), pool.begin() + g.size());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({ids[static_cast<size_t>(g.position(e.u))], ids[static_cast<size_t>(g.position(e.v))], e.label});
  if (new_ids) *new_ids = ids;
  return CoxeterGraph(ids, edges);
}

}  // namespace coxfold::testing

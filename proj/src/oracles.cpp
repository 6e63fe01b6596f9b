#include "coxfold/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "coxfold/errors.hpp"

namespace coxfold::oracle {

std::size_t symmetric_group_transpositions(int n) {
  std::vector<int> perm(static_cast<size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    int moved = 0;
    for (size_t i = 0; i < perm.size(); ++i) moved += perm[i] != static_cast<int>(i);
    if (moved == 2) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// 4x4 matrices with entries in (1/2)Z, stored doubled.
using Half4 = std::array<int, 16>;

Half4 multiply(const Half4& a, const Half4& b) {
  Half4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += a[static_cast<size_t>(i * 4 + k)] * b[static_cast<size_t>(k * 4 + j)];
      c[static_cast<size_t>(i * 4 + j)] = s / 2;
    }
  return c;
}

// Reflection x -> x - 2(r.x)/(r.r) r for a root given in doubled coordinates R = 2r.
// The doubled matrix entry is 2 delta_ij - 4 R_i R_j / (R.R).
Half4 reflection(const std::array<int, 4>& r) {
  int rr = 0;
  for (int v : r) rr += v * v;
  Half4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[static_cast<size_t>(i * 4 + j)] =
          (i == j ? 2 : 0) - 4 * r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)] / rr;
  return m;
}

}  // namespace

GroupCount f4_reflection_group() {
  // e2 - e3, e3 - e4, e4, (e1 - e2 - e3 - e4)/2, doubled.
  const std::array<std::array<int, 4>, 4> roots = {
      {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}};
  std::vector<Half4> gens;
  for (const auto& r : roots) gens.push_back(reflection(r));
  Half4 id{};
  for (int i = 0; i < 4; ++i) id[static_cast<size_t>(i * 5)] = 2;
  std::set<Half4> seen{id};
  std::vector<Half4> queue{id};
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Half4& g : gens) {
      Half4 next = multiply(g, queue[head]);
      if (seen.insert(next).second) queue.push_back(next);
      if (queue.size() > 5000) throw CapExceeded("F4 closure ran away");
    }
  GroupCount out;
  out.order = queue.size();
  for (const Half4& m : queue) {
    const int trace = m[0] + m[5] + m[10] + m[15];  // doubled
    if (trace == 4 && multiply(m, m) == id) ++out.reflections;
  }
  return out;
}

GroupCount dihedral_group(int m) {
  // (k, f) stands for r^k s^f with s r s = r^{-1}.
  std::set<std::pair<int, int>> elements;
  std::vector<std::pair<int, int>> queue{{0, 0}};
  elements.insert({0, 0});
  const std::pair<int, int> gens[] = {{0, 1}, {1, 1}};
  auto compose = [m](std::pair<int, int> a, std::pair<int, int> b) {
    const int k = a.second ? a.first - b.first : a.first + b.first;
    return std::make_pair(((k % m) + m) % m, a.second ^ b.second);
  };
  for (size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      const auto next = compose(g, queue[head]);
      if (elements.insert(next).second) queue.push_back(next);
    }
  GroupCount out;
  out.order = elements.size();
  for (const auto& e : elements) out.reflections += e.second;
  return out;
}

bool gram_positive_definite(const CoxeterGraph& graph) {
  const int n = graph.size();
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Label l = graph.label(i, j);
      if (i == j) {
        a(i, j) = Surd(2);
      } else if (l.is_infinite()) {
        a(i, j) = Surd(-2);
      } else {
        // 2cos(pi/m) written out from the half-angle values.
        switch (l.value()) {
          case 2: a(i, j) = Surd(0); break;
          case 3: a(i, j) = Surd(-1); break;
          case 4: a(i, j) = -Surd::radical(2); break;
          case 5: a(i, j) = -(Surd(1) + Surd::radical(5)) / Surd(2); break;
          case 6: a(i, j) = -Surd::radical(3); break;
          default: throw UnsupportedLabel("oracle: label " + l.to_string());
        }
      }
    }
  // Leading principal minors are the running products of the pivots of elimination
  // without row exchanges; all pivots positive iff all minors positive.
  for (int k = 0; k < n; ++k) {
    if (a(k, k).sign() != Sign::positive) return false;
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Surd factor = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return true;
}

bool preserves_labels(const CoxeterGraph& graph, const std::vector<int>& images) {
  const int n = graph.size();
  if (static_cast<int>(images.size()) != n) return false;
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<size_t>(i)] != i) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(graph.label(images[static_cast<size_t>(i)], images[static_cast<size_t>(j)]) == graph.label(i, j)))
        return false;
  return true;
}

std::vector<std::vector<int>> brute_orbits(int n, const std::vector<std::vector<int>>& generators) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    std::set<int> orbit{s};
    for (bool grew = true; grew;) {
      grew = false;
      for (int x : std::vector<int>(orbit.begin(), orbit.end()))
        for (const auto& g : generators) grew = orbit.insert(g[static_cast<size_t>(x)]).second || grew;
    }
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace coxfold::oracle

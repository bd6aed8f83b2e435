// Brute-force clique reference used to validate the search engine.  On
// purpose this shares nothing with the library's solver: adjacency is a
// bool matrix built from sorted point lists, and the algorithm is plain
// recursive Bron-Kerbosch with pivoting.
#pragma once

#include <algorithm>
#include <vector>

#include "benz/geometry.hpp"

namespace oracle {

struct Graph {
  int n = 0;
  std::vector<std::vector<char>> adj;
};

inline int intersect_count(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return (int)common.size();
}

inline Graph from_geometry(const benz::CircleGeometry& g, int t) {
  Graph gr;
  gr.n = g.num_circles();
  gr.adj.assign(gr.n, std::vector<char>(gr.n, 0));
  for (int i = 0; i < gr.n; ++i)
    for (int j = i + 1; j < gr.n; ++j)
      if (intersect_count(g.circles[i], g.circles[j]) >= t) gr.adj[i][j] = gr.adj[j][i] = 1;
  return gr;
}

namespace detail {
inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<std::vector<int>>& maximal) {
  if (p.empty() && x.empty()) {
    maximal.push_back(r);
    return;
  }
  int pivot = -1, deg = -1;
  auto consider = [&](int v) {
    int d = 0;
    for (int u : p) d += g.adj[v][u];
    if (d > deg) {
      deg = d;
      pivot = v;
    }
  };
  for (int v : p) consider(v);
  for (int v : x) consider(v);
  std::vector<int> branch;
  for (int v : p)
    if (!g.adj[pivot][v]) branch.push_back(v);
  for (int v : branch) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (g.adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, p2, x2, maximal);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}
}  // namespace detail

// All maximal cliques, each sorted, the list sorted.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<int> r, p, x;
  for (int v = 0; v < g.n; ++v) p.push_back(v);
  std::vector<std::vector<int>> maximal;
  detail::bron_kerbosch(g, r, p, x, maximal);
  for (auto& c : maximal) std::sort(c.begin(), c.end());
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

inline int max_clique_size(const Graph& g) {
  int best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, (int)c.size());
  return best;
}

// Every clique of the maximum size (they are all maximal).
inline std::vector<std::vector<int>> maximum_cliques(const Graph& g) {
  auto all = maximal_cliques(g);
  size_t best = 0;
  for (const auto& c : all) best = std::max(best, c.size());
  std::vector<std::vector<int>> out;
  for (const auto& c : all)
    if (c.size() == best) out.push_back(c);
  return out;
}

}  // namespace oracle

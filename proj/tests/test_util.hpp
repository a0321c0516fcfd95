#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hgs/hypergraph.hpp"

namespace hgs::oracle {

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Applies v -> perm[v] and shuffles the edge order.
inline Hypergraph relabel(const Hypergraph& g, const std::vector<Vertex>& perm, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    std::vector<Vertex> mapped;
    for (Vertex v : e) mapped.push_back(perm[v]);
    edges.emplace_back(std::move(mapped));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(g.num_vertices(), std::move(edges));
}

inline std::set<Edge> edge_set(const Hypergraph& g) { return {g.edges().begin(), g.edges().end()}; }

/// Orbits by trying every permutation of the vertex set; small n only.
inline std::vector<std::vector<Vertex>> brute_force_orbits(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  const auto edges = edge_set(g);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::set<Vertex>> reach(n);
  do {
    bool automorphism = true;
    for (const auto& e : g.edges()) {
      std::vector<Vertex> image;
      for (Vertex v : e) image.push_back(perm[v]);
      if (!edges.count(Edge(image))) {
        automorphism = false;
        break;
      }
    }
    if (automorphism)
      for (Vertex v = 0; v < n; ++v) reach[v].insert(perm[v]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < n; ++v) orbits.insert({reach[v].begin(), reach[v].end()});
  return {orbits.begin(), orbits.end()};
}

/// Isomorphism by trying every permutation; small n only.
inline bool brute_force_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const auto target = edge_set(b);
  std::vector<Vertex> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      std::vector<Vertex> image;
      for (Vertex v : e) image.push_back(perm[v]);
      if (!target.count(Edge(image))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace hgs::oracle

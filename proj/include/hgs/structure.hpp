#pragma once

#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Component id per vertex; ids are assigned in order of first appearance.
inline std::vector<std::size_t> component_ids(const Hypergraph& g) {
  detail::DisjointSets sets(g.num_vertices());
  for (const auto& e : g.edges())
    for (Vertex v : e) sets.unite(e[0], v);
  std::vector<std::size_t> root_to_id(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> ids(g.num_vertices());
  std::size_t next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto r = sets.find(v);
    if (root_to_id[r] == std::numeric_limits<std::size_t>::max()) root_to_id[r] = next++;
    ids[v] = root_to_id[r];
  }
  return ids;
}

inline std::size_t num_components(const Hypergraph& g) {
  auto ids = component_ids(g);
  std::size_t count = 0;
  for (auto id : ids) count = std::max(count, id + 1);
  return count;
}

inline bool is_connected(const Hypergraph& g) { return num_components(g) == 1; }

struct GirthLimits {
  std::size_t max_edges = 16;
};

namespace detail {

struct LooseCycleSearch {
  const Hypergraph& g;
  std::vector<std::vector<std::size_t>> overlap;
  std::vector<std::vector<Vertex>> shared;
  std::vector<std::size_t> path;
  std::vector<Vertex> joints;
  std::vector<bool> used;
  std::size_t best = std::numeric_limits<std::size_t>::max();

  explicit LooseCycleSearch(const Hypergraph& graph) : g(graph) {
    const std::size_t m = g.num_edges();
    overlap.assign(m, std::vector<std::size_t>(m, 0));
    shared.assign(m, std::vector<Vertex>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        overlap[i][j] = g.edge(i).intersection_size(g.edge(j));
        if (overlap[i][j] == 1) {
          for (Vertex v : g.edge(i))
            if (g.edge(j).contains(v)) shared[i][j] = v;
        }
      }
    }
    used.assign(m, false);
  }

  bool joint_is_new(Vertex v) const { return std::find(joints.begin(), joints.end(), v) == joints.end(); }

  // path[0] is the smallest edge index of the cycle being built.
  void extend() {
    const std::size_t len = path.size();
    if (len + 1 >= best) return;
    const std::size_t last = path.back();
    const std::size_t first = path.front();
    for (std::size_t next = first + 1; next < g.num_edges(); ++next) {
      if (used[next] || overlap[last][next] != 1) continue;
      bool clear = true;
      for (std::size_t t = 1; t + 1 < len; ++t) {
        if (overlap[path[t]][next] != 0) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      const Vertex joint = shared[last][next];
      if (!joint_is_new(joint)) continue;
      if (len >= 2 && overlap[next][first] == 1) {
        const Vertex closing = shared[next][first];
        if (closing != joint && joint_is_new(closing)) best = std::min(best, len + 1);
        continue;
      }
      if (len >= 2 && overlap[next][first] != 0) continue;
      used[next] = true;
      path.push_back(next);
      joints.push_back(joint);
      extend();
      joints.pop_back();
      path.pop_back();
      used[next] = false;
    }
  }

  std::optional<std::size_t> run() {
    for (std::size_t start = 0; start < g.num_edges(); ++start) {
      used[start] = true;
      path.assign(1, start);
      joints.clear();
      extend();
      used[start] = false;
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
  }
};

}  // namespace detail

/// Length of the shortest hypercycle: 2 when two edges share two or more
/// vertices, otherwise the shortest loose cycle (consecutive edges meet in
/// exactly one vertex, the joint vertices are distinct, non-consecutive
/// edges are disjoint). Empty when the hypergraph is acyclic.
inline std::optional<std::size_t> girth(const Hypergraph& g, GirthLimits limits = {}) {
  if (g.num_edges() > limits.max_edges) {
    throw Error(ErrorKind::SearchBudgetExceeded, "girth search limited to " + std::to_string(limits.max_edges) +
                                                     " edges, graph has " + std::to_string(g.num_edges()));
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (std::size_t j = i + 1; j < g.num_edges(); ++j)
      if (g.edge(i).intersection_size(g.edge(j)) >= 2) return 2;
  return detail::LooseCycleSearch(g).run();
}

struct StructureSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_connected = false;
  std::optional<std::size_t> uniform_k;
  // n - 1 = (k - 1) m - r, present only for connected uniform graphs
  std::optional<long long> cyclomatic_r;
  std::optional<std::size_t> girth;
};

inline StructureSummary structure_summary(const Hypergraph& g, GirthLimits limits = {}) {
  StructureSummary s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.is_connected = is_connected(g);
  s.uniform_k = uniform_size(g);
  if (s.is_connected && g.num_edges() == 0 && g.num_vertices() == 1) {
    s.cyclomatic_r = 0;
    return s;
  }
  if (s.is_connected && s.uniform_k) {
    const auto k = static_cast<long long>(*s.uniform_k);
    s.cyclomatic_r = (k - 1) * static_cast<long long>(s.m) - (static_cast<long long>(s.n) - 1);
    // connected uniform supertrees are exactly the r = 0 graphs
    if (*s.cyclomatic_r == 0) return s;
  }
  s.girth = girth(g, limits);
  return s;
}

}  // namespace hgs

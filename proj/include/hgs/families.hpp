#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/structure.hpp"

namespace hgs {

/// A k-uniform g-hypercycle with its named vertices.
///
/// Layout: edge i (1-based) owns the id block [(i-1)(k-1), i(k-1)), joint
/// first, so v_i = (i-1)(k-1) and v_{a(i,j)} = (i-1)(k-1) + j. Edge e_i is
/// that block plus v_{i+1} (v_1 for i = g) and sits at edge index i-1.
struct LabeledCycle {
  std::size_t g = 0;
  std::size_t k = 0;
  Hypergraph graph;

  Vertex joint(std::size_t i) const {
    check_index(i);
    return (i - 1) * (k - 1);
  }

  Vertex interior(std::size_t i, std::size_t j) const {
    check_index(i);
    if (j < 1 || j + 2 > k) throw Error(ErrorKind::BadParams, "interior index j=" + std::to_string(j));
    return (i - 1) * (k - 1) + j;
  }

  const Edge& cycle_edge(std::size_t i) const {
    check_index(i);
    return graph.edge(i - 1);
  }

 private:
  void check_index(std::size_t i) const {
    if (i < 1 || i > g) throw Error(ErrorKind::BadParams, "cycle index i=" + std::to_string(i));
  }
};

/// q-edge hyperpath; edge i (0-based) spans ids i(k-1) .. i(k-1)+k-1.
inline Hypergraph hyperpath(std::size_t q, std::size_t k) {
  if (q < 1 || k < 2) throw Error(ErrorKind::BadParams, "hyperpath needs q >= 1 and k >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<Vertex> e;
    for (std::size_t j = 0; j < k; ++j) e.push_back(i * (k - 1) + j);
    edges.emplace_back(std::move(e));
  }
  return Hypergraph(q * (k - 1) + 1, std::move(edges));
}

inline LabeledCycle hypercycle(std::size_t g, std::size_t k) {
  if (k < 2 || g < 2) throw Error(ErrorKind::BadParams, "hypercycle needs g >= 2 and k >= 2");
  if (g == 2 && k < 3) throw Error(ErrorKind::BadParams, "a 2-cycle needs edges of size at least 3");
  LabeledCycle c;
  c.g = g;
  c.k = k;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<Vertex> e;
    for (std::size_t j = 0; j + 1 < k; ++j) e.push_back(i * (k - 1) + j);
    e.push_back(((i + 1) % g) * (k - 1));
    edges.emplace_back(std::move(e));
  }
  c.graph = Hypergraph(g * (k - 1), std::move(edges));
  return c;
}

/// G^k: each 2-edge {u,v} gains k-2 fresh vertices. Fresh blocks follow the
/// original ids in edge order.
inline Hypergraph power_of_graph(const Hypergraph& base, std::size_t k) {
  if (k < 3) throw Error(ErrorKind::BadParams, "power needs k >= 3");
  for (const auto& e : base.edges())
    if (e.size() != 2) throw Error(ErrorKind::NotTwoUniform, "edge " + e.to_string() + " is not a 2-edge");
  std::vector<Edge> edges;
  Vertex next = base.num_vertices();
  for (const auto& e : base.edges()) {
    std::vector<Vertex> grown{e[0], e[1]};
    for (std::size_t j = 0; j + 2 < k; ++j) grown.push_back(next++);
    edges.emplace_back(std::move(grown));
  }
  return Hypergraph(next, std::move(edges));
}

/// Attaches T at any vertex of the cycle by identifying T's root with it.
/// T's other vertices get ids after the cycle block, in their order.
inline Hypergraph attach_supertree(const LabeledCycle& c, Vertex at, const Hypergraph& tree, Vertex root) {
  c.graph.check_vertex(at);
  tree.check_vertex(root);
  const auto s = structure_summary(tree);
  if (!s.is_connected || s.girth.has_value()) {
    throw Error(ErrorKind::NotSupertree, "attached graph must be connected and acyclic");
  }
  return glue(c.graph, at, tree, root).graph;
}

/// U*(n,k,g): n/(k-1) - g pendant edges at v_1, each {v_1} + k-1 fresh ids.
inline Hypergraph u_star(std::size_t n, std::size_t k, std::size_t g) {
  if (k < 3 || n % (k - 1) != 0 || n / (k - 1) < g || g < 2) {
    throw Error(ErrorKind::BadParams, "u_star needs k >= 3, (k-1) | n and n/(k-1) >= g >= 2");
  }
  const auto c = hypercycle(g, k);
  std::vector<Edge> edges = c.graph.edges();
  Vertex next = c.graph.num_vertices();
  for (std::size_t p = 0; p < n / (k - 1) - g; ++p) {
    std::vector<Vertex> e{c.joint(1)};
    for (std::size_t j = 0; j + 1 < k; ++j) e.push_back(next++);
    edges.emplace_back(std::move(e));
  }
  return Hypergraph(next, std::move(edges));
}

enum class Attachment { joint = 1, interior = 2 };

/// Cycle vertex used by variant 1 (v_1) and variant 2 (v_{a(1,1)}).
inline Vertex attachment_vertex(const LabeledCycle& c, Attachment where) {
  return where == Attachment::joint ? c.joint(1) : c.interior(1, 1);
}

inline Hypergraph hyperpath_or_point(std::size_t q, std::size_t k) {
  return q == 0 ? Hypergraph(1, {}) : hyperpath(q, k);
}

/// Lop_{g,k,s;variant}: a length-s pendant hyperpath at v_1 or v_{a(1,1)}.
/// Tail ids follow the cycle block; the tail joints are the last id of each
/// tail edge block.
inline Hypergraph lollipop(std::size_t g, std::size_t k, std::size_t s, Attachment variant) {
  if (k < 3 || g < 2) throw Error(ErrorKind::BadParams, "lollipop needs k >= 3 and g >= 2");
  const auto c = hypercycle(g, k);
  return glue(c.graph, attachment_vertex(c, variant), hyperpath_or_point(s, k), 0).graph;
}

inline Hypergraph lollipop(std::size_t g, std::size_t k, std::size_t s, int variant) {
  if (variant != 1 && variant != 2) throw Error(ErrorKind::BadParams, "lollipop variant must be 1 or 2");
  return lollipop(g, k, s, variant == 1 ? Attachment::joint : Attachment::interior);
}

/// G(Dv; p, q; wH): a pendant path of length p at v, and a path of length q
/// from v to w in H. Layout: D's ids, then the p-path's fresh ids, then the
/// q-path's fresh ids, then H's ids except w. With q = 0, w is glued onto v.
inline Hypergraph composite_dph(const Hypergraph& d, Vertex v, std::size_t p, std::size_t q, const Hypergraph& h,
                                Vertex w, std::size_t k) {
  d.check_vertex(v);
  h.check_vertex(w);
  if (k < 2 || p + q < 1) throw Error(ErrorKind::BadParams, "composite needs k >= 2 and p + q >= 1");
  Hypergraph g = d;
  if (p > 0) g = glue(g, v, hyperpath(p, k), 0).graph;
  Vertex end = v;
  if (q > 0) {
    auto glued = glue(g, v, hyperpath(q, k), 0);
    end = glued.guest_to_new.back();
    g = std::move(glued.graph);
  }
  return glue(g, end, h, w).graph;
}

/// D with a hyperpath P0 of length `trunk` at v0 and, for each entry of
/// `branches`, a hyperpath of that length hung at the next interior vertex of
/// P0's first edge. With no branches this is D plus one pendant path.
inline Hypergraph branched_path(const Hypergraph& d, Vertex v0, std::size_t trunk,
                                const std::vector<std::size_t>& branches, std::size_t k) {
  d.check_vertex(v0);
  if (k < 3 || trunk < 1) throw Error(ErrorKind::BadParams, "branched path needs k >= 3 and a trunk of length >= 1");
  if (branches.size() > k - 2) throw Error(ErrorKind::BadParams, "at most k-2 branches fit on the first trunk edge");
  auto glued = glue(d, v0, hyperpath(trunk, k), 0);
  Hypergraph g = std::move(glued.graph);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i] < 1) throw Error(ErrorKind::BadParams, "branch lengths must be >= 1");
    g = glue(g, glued.guest_to_new[i + 1], hyperpath(branches[i], k), 0).graph;
  }
  return g;
}

/// Moves edge e1 off its vertex v1 onto a fresh vertex u and joins v1 to u
/// by a new size-t edge {v1, u_1..u_{t-2}, u}. The moved edge keeps its
/// index; the new edge is appended. u gets id n, the u_j ids n+1.. .
inline Hypergraph split_joint(const Hypergraph& g, const Edge& e1, Vertex v1, std::size_t t) {
  auto idx = g.find_edge(e1);
  if (!idx) throw Error(ErrorKind::PreconditionViolated, "edge " + e1.to_string() + " is not in the graph");
  if (!e1.contains(v1)) throw Error(ErrorKind::PreconditionViolated, "vertex is not in " + e1.to_string());
  if (t < 2) throw Error(ErrorKind::BadParams, "joining edge needs size >= 2");
  const Vertex u = g.num_vertices();
  std::vector<Vertex> moved;
  for (Vertex z : e1)
    if (z != v1) moved.push_back(z);
  moved.push_back(u);
  std::vector<Vertex> bridge{v1, u};
  for (std::size_t j = 0; j + 2 < t; ++j) bridge.push_back(u + 1 + j);
  std::vector<Edge> edges = g.edges();
  edges[*idx] = Edge(std::move(moved));
  edges.emplace_back(std::move(bridge));
  return Hypergraph(u + t - 1, std::move(edges));
}

// Ordinary (2-uniform) base graphs for powers.

inline Hypergraph ordinary_cycle(std::size_t length) {
  if (length < 3) throw Error(ErrorKind::BadParams, "ordinary cycle needs length >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) edges.push_back(Edge{i, (i + 1) % length});
  return Hypergraph(length, std::move(edges));
}

inline Hypergraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  return Hypergraph(n, std::move(edges));
}

inline Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back(Edge{i, a + j});
  return Hypergraph(a + b, std::move(edges));
}

/// Common degree of a 2-uniform graph, or NotRegular / NotTwoUniform.
inline std::size_t regular_degree(const Hypergraph& g) {
  for (const auto& e : g.edges())
    if (e.size() != 2) throw Error(ErrorKind::NotTwoUniform, "edge " + e.to_string() + " is not a 2-edge");
  const auto deg = degrees(g);
  if (deg.empty()) throw Error(ErrorKind::NotRegular, "empty graph");
  for (auto d : deg)
    if (d != deg[0]) throw Error(ErrorKind::NotRegular, "degrees differ");
  return deg[0];
}

}  // namespace hgs

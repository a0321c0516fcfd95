#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

using Vertex = std::size_t;

/// A hyperedge: a set of at least two distinct vertex ids, stored sorted.
class Edge {
 public:
  Edge() = default;

  explicit Edge(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw Error(ErrorKind::RepeatedVertex, "edge " + to_string() + " lists a vertex twice");
    }
    if (vertices_.size() < 2) {
      throw Error(ErrorKind::EdgeTooSmall, "edge " + to_string() + " has fewer than two vertices");
    }
  }

  Edge(std::initializer_list<Vertex> vertices) : Edge(std::vector<Vertex>(vertices)) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex max_vertex() const { return vertices_.back(); }

  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  std::size_t intersection_size(const Edge& other) const {
    std::size_t count = 0;
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(vertices_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Finite undirected simple hypergraph on vertices 0..n-1.
///
/// The edge list keeps insertion order; operations that replace an edge keep
/// the replacement at the same index so edge positions stay meaningful.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) { validate(); }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> find_edge(const Edge& e) const {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool contains_edge(const Edge& e) const { return find_edge(e).has_value(); }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_) + "-1");
    }
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void validate() const {
    for (const auto& e : edges_) {
      if (e.size() < 2) throw Error(ErrorKind::EdgeTooSmall, "edge " + e.to_string());
      if (e.max_vertex() >= n_) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge " + e.to_string() + " exceeds vertex count " + std::to_string(n_));
      }
    }
    std::vector<const Edge*> sorted;
    sorted.reserve(edges_.size());
    for (const auto& e : edges_) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const Edge* a, const Edge* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (*sorted[i] == *sorted[i - 1]) {
        throw Error(ErrorKind::DuplicateEdge, "edge " + sorted[i]->to_string() + " appears twice");
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

inline Hypergraph new_hypergraph(std::size_t n, const std::vector<std::vector<Vertex>>& edge_lists) {
  std::vector<Edge> edges;
  edges.reserve(edge_lists.size());
  for (const auto& list : edge_lists) edges.emplace_back(list);
  return Hypergraph(n, std::move(edges));
}

inline std::size_t degree(const Hypergraph& g, Vertex v) {
  g.check_vertex(v);
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [v](const Edge& e) { return e.contains(v); }));
}

inline std::vector<std::size_t> degrees(const Hypergraph& g) {
  std::vector<std::size_t> deg(g.num_vertices(), 0);
  for (const auto& e : g.edges())
    for (Vertex v : e) ++deg[v];
  return deg;
}

/// incidence[v] = indices of the edges containing v, ascending.
inline std::vector<std::vector<std::size_t>> incidence_lists(const Hypergraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (Vertex v : g.edge(i)) inc[v].push_back(i);
  return inc;
}

inline Hypergraph add_edge(const Hypergraph& g, const Edge& e) {
  if (g.contains_edge(e)) throw Error(ErrorKind::DuplicateEdge, "edge " + e.to_string() + " already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Hypergraph(g.num_vertices(), std::move(edges));
}

inline Hypergraph remove_edge(const Hypergraph& g, const Edge& e) {
  auto idx = g.find_edge(e);
  if (!idx) throw Error(ErrorKind::MissingEdge, "edge " + e.to_string() + " not present");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*idx));
  return Hypergraph(g.num_vertices(), std::move(edges));
}

struct VertexRemoval {
  Hypergraph graph;
  // old id -> new id, empty for removed vertices
  std::vector<std::optional<Vertex>> old_to_new;
};

/// G - S: drops the vertices in S and every edge touching them, then
/// renumbers the survivors densely in their original order.
inline VertexRemoval remove_vertices(const Hypergraph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.num_vertices(), false);
  for (Vertex v : removed) {
    g.check_vertex(v);
    gone[v] = true;
  }
  VertexRemoval out;
  out.old_to_new.resize(g.num_vertices());
  Vertex next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!gone[v]) out.old_to_new[v] = next++;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return gone[v]; })) continue;
    std::vector<Vertex> mapped;
    for (Vertex v : e) mapped.push_back(*out.old_to_new[v]);
    edges.emplace_back(std::move(mapped));
  }
  out.graph = Hypergraph(next, std::move(edges));
  return out;
}

/// One relocation e_i -> (e_i \ removed) U target.
struct EdgeMove {
  Edge edge;
  std::vector<Vertex> removed;
  std::vector<Vertex> target;
};

/// Replaces every moved edge in place by its relocated version.
inline Hypergraph edge_swap(const Hypergraph& g, std::span<const EdgeMove> moves) {
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> produced;
  for (const auto& move : moves) {
    auto idx = g.find_edge(move.edge);
    if (!idx) {
      throw Error(ErrorKind::PreconditionViolated, "moved edge " + move.edge.to_string() + " is not in the graph");
    }
    if (move.removed.size() != move.target.size() || move.removed.empty()) {
      throw Error(ErrorKind::PreconditionViolated, "removed and target sets must be non-empty and of equal size");
    }
    for (Vertex v : move.removed) {
      if (!move.edge.contains(v)) {
        throw Error(ErrorKind::PreconditionViolated,
                    "removed vertex " + std::to_string(v) + " is not in " + move.edge.to_string());
      }
    }
    for (Vertex v : move.target) g.check_vertex(v);
    if (std::all_of(move.target.begin(), move.target.end(), [&](Vertex v) { return move.edge.contains(v); })) {
      throw Error(ErrorKind::PreconditionViolated, "target set is contained in " + move.edge.to_string());
    }
    std::vector<Vertex> next;
    for (Vertex v : move.edge)
      if (std::find(move.removed.begin(), move.removed.end(), v) == move.removed.end()) next.push_back(v);
    for (Vertex v : move.target) {
      if (std::find(next.begin(), next.end(), v) != next.end()) {
        throw Error(ErrorKind::PreconditionViolated,
                    "target vertex " + std::to_string(v) + " is retained in " + move.edge.to_string());
      }
      next.push_back(v);
    }
    Edge replaced(std::move(next));
    if (g.contains_edge(replaced) ||
        std::find(produced.begin(), produced.end(), replaced) != produced.end()) {
      throw Error(ErrorKind::DuplicateEdge, "relocated edge " + replaced.to_string() + " already exists");
    }
    produced.push_back(replaced);
    edges[*idx] = std::move(replaced);
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

/// Subdivides e = {u, z_1..z_{|e|-2}, v} into e1 = {u, z.., w} (kept at the
/// index of e) and e2 = {w, a_1..a_{|e|-2}, v} (inserted right after it).
/// w gets id n, the a_j get ids n+1.. in order.
inline Hypergraph subdivide_edge(const Hypergraph& g, const Edge& e, Vertex u, Vertex v) {
  auto idx = g.find_edge(e);
  if (!idx) throw Error(ErrorKind::PreconditionViolated, "edge " + e.to_string() + " is not in the graph");
  if (u == v || !e.contains(u) || !e.contains(v)) {
    throw Error(ErrorKind::PreconditionViolated, "u and v must be two distinct vertices of " + e.to_string());
  }
  const auto deg = degrees(g);
  for (Vertex z : e) {
    if (z != u && z != v && deg[z] != 1) {
      throw Error(ErrorKind::PreconditionViolated,
                  "interior vertex " + std::to_string(z) + " of " + e.to_string() + " has degree " +
                      std::to_string(deg[z]));
    }
  }
  const Vertex n = g.num_vertices();
  const Vertex w = n;
  std::vector<Vertex> first;
  for (Vertex z : e)
    if (z != v) first.push_back(z);
  first.push_back(w);
  std::vector<Vertex> second{w, v};
  for (std::size_t j = 0; j + 2 < e.size(); ++j) second.push_back(n + 1 + j);

  std::vector<Edge> edges = g.edges();
  edges[*idx] = Edge(std::move(first));
  edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(*idx) + 1, Edge(std::move(second)));
  return Hypergraph(n + e.size() - 1, std::move(edges));
}

struct Glued {
  Hypergraph graph;
  // guest id -> id in the glued graph
  std::vector<Vertex> guest_to_new;
};

/// Disjoint union of host and guest with guest's `root` identified with
/// host's `at`. Host ids are unchanged; the remaining guest vertices follow
/// in their original order.
inline Glued glue(const Hypergraph& host, Vertex at, const Hypergraph& guest, Vertex root) {
  host.check_vertex(at);
  guest.check_vertex(root);
  Glued out;
  out.guest_to_new.resize(guest.num_vertices());
  Vertex next = host.num_vertices();
  for (Vertex v = 0; v < guest.num_vertices(); ++v) out.guest_to_new[v] = (v == root) ? at : next++;
  std::vector<Edge> edges = host.edges();
  for (const auto& e : guest.edges()) {
    std::vector<Vertex> mapped;
    for (Vertex v : e) mapped.push_back(out.guest_to_new[v]);
    edges.emplace_back(std::move(mapped));
  }
  out.graph = Hypergraph(next, std::move(edges));
  return out;
}

/// Disjoint union, guest ids shifted by host's vertex count.
inline Hypergraph disjoint_union(const Hypergraph& host, const Hypergraph& guest) {
  const Vertex shift = host.num_vertices();
  std::vector<Edge> edges = host.edges();
  for (const auto& e : guest.edges()) {
    std::vector<Vertex> mapped;
    for (Vertex v : e) mapped.push_back(v + shift);
    edges.emplace_back(std::move(mapped));
  }
  return Hypergraph(shift + guest.num_vertices(), std::move(edges));
}

inline std::optional<std::size_t> uniform_size(const Hypergraph& g) {
  if (g.num_edges() == 0) return std::nullopt;
  const std::size_t k = g.edge(0).size();
  for (const auto& e : g.edges())
    if (e.size() != k) return std::nullopt;
  return k;
}

}  // namespace hgs

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

struct CanonicalLimits {
  std::size_t max_vertices = 12;
  std::size_t max_leaves = 2'000'000;
};

/// Label-invariant encoding of a (vertex-coloured) hypergraph. Two graphs
/// get equal keys exactly when some relabeling maps one onto the other.
struct CanonicalKey {
  std::size_t n = 0;
  // initial colour of the vertex at each canonical position
  std::vector<int> colors;
  // relabeled edges, each sorted, list sorted
  std::vector<std::vector<Vertex>> edges;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  /// Compact text form, e.g. "6:0-1-2|0-3-4|1-3-5".
  std::string to_string() const {
    std::string out = std::to_string(n) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) out += "|";
      for (std::size_t j = 0; j < edges[i].size(); ++j) {
        if (j) out += "-";
        out += std::to_string(edges[i][j]);
      }
    }
    bool coloured = std::any_of(colors.begin(), colors.end(), [](int c) { return c != 0; });
    if (coloured) {
      out += "#";
      for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) out += ".";
        out += std::to_string(colors[i]);
      }
    }
    return out;
  }
};

namespace detail {

// Individualization-refinement search. Colours are dense ranks; refinement
// only splits classes and keeps their relative order, so the ordered
// partition is label-invariant at every node of the search tree.
class CanonicalSearch {
 public:
  CanonicalSearch(const Hypergraph& g, std::span<const int> initial, CanonicalLimits limits)
      : g_(g), initial_(initial.begin(), initial.end()), limits_(limits), incidence_(incidence_lists(g)) {}

  CanonicalKey run() {
    std::vector<int> colors = rank(initial_with_degrees());
    search(std::move(colors));
    return best_;
  }

 private:
  std::vector<std::vector<int>> initial_with_degrees() const {
    // seed signature: (input colour, degree, sorted sizes of incident edges)
    std::vector<std::vector<int>> sig(g_.num_vertices());
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      sig[v].push_back(initial_[v]);
      sig[v].push_back(static_cast<int>(incidence_[v].size()));
      std::vector<int> sizes;
      for (auto e : incidence_[v]) sizes.push_back(static_cast<int>(g_.edge(e).size()));
      std::sort(sizes.begin(), sizes.end());
      sig[v].insert(sig[v].end(), sizes.begin(), sizes.end());
    }
    return sig;
  }

  static std::vector<int> rank(const std::vector<std::vector<int>>& signatures) {
    std::vector<std::vector<int>> distinct = signatures;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> out(signatures.size());
    for (std::size_t v = 0; v < signatures.size(); ++v) {
      out[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signatures[v]) - distinct.begin());
    }
    return out;
  }

  static int count_classes(const std::vector<int>& colors) {
    int top = -1;
    for (int c : colors) top = std::max(top, c);
    return top + 1;
  }

  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> edge_sig(g_.num_edges());
      for (std::size_t i = 0; i < g_.num_edges(); ++i) {
        for (Vertex v : g_.edge(i)) edge_sig[i].push_back(colors[v]);
        std::sort(edge_sig[i].begin(), edge_sig[i].end());
      }
      std::vector<std::vector<int>> sig(g_.num_vertices());
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        std::vector<std::vector<int>> around;
        for (auto e : incidence_[v]) around.push_back(edge_sig[e]);
        std::sort(around.begin(), around.end());
        sig[v].push_back(colors[v]);
        for (const auto& s : around) {
          sig[v].push_back(-1);
          sig[v].insert(sig[v].end(), s.begin(), s.end());
        }
      }
      colors = rank(sig);
      int next = count_classes(colors);
      if (next == classes) return;
      classes = next;
    }
  }

  bool twins(Vertex a, Vertex b) const { return initial_[a] == initial_[b] && incidence_[a] == incidence_[b]; }

  void search(std::vector<int> colors) {
    refine(colors);
    const auto n = g_.num_vertices();
    if (count_classes(colors) == static_cast<int>(n)) {
      leaf(colors);
      return;
    }
    // first non-singleton class
    std::vector<int> size(n, 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // swapping twins is an automorphism that fixes the current partition
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> sig(n);
      for (Vertex w = 0; w < n; ++w) sig[w] = {2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0)};
      search(rank(sig));
    }
  }

  void leaf(const std::vector<int>& position) {
    if (++leaves_ > limits_.max_leaves) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "canonical labeling exceeded " + std::to_string(limits_.max_leaves) + " leaves");
    }
    CanonicalKey key;
    key.n = g_.num_vertices();
    key.colors.resize(key.n);
    for (Vertex v = 0; v < key.n; ++v) key.colors[static_cast<std::size_t>(position[v])] = initial_[v];
    for (const auto& e : g_.edges()) {
      std::vector<Vertex> mapped;
      for (Vertex v : e) mapped.push_back(static_cast<Vertex>(position[v]));
      std::sort(mapped.begin(), mapped.end());
      key.edges.push_back(std::move(mapped));
    }
    std::sort(key.edges.begin(), key.edges.end());
    if (!have_best_ || key < best_) {
      best_ = std::move(key);
      have_best_ = true;
    }
  }

  const Hypergraph& g_;
  std::vector<int> initial_;
  CanonicalLimits limits_;
  std::vector<std::vector<std::size_t>> incidence_;
  CanonicalKey best_;
  bool have_best_ = false;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline CanonicalKey canonical_form(const Hypergraph& g, std::span<const int> colors, CanonicalLimits limits = {}) {
  if (g.num_vertices() > limits.max_vertices) {
    throw Error(ErrorKind::SearchBudgetExceeded, "canonical form limited to " + std::to_string(limits.max_vertices) +
                                                     " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  if (colors.size() != g.num_vertices()) {
    throw Error(ErrorKind::BadParams, "colour vector length does not match vertex count");
  }
  if (g.num_vertices() == 0) return CanonicalKey{};
  return detail::CanonicalSearch(g, colors, limits).run();
}

inline CanonicalKey canonical_form(const Hypergraph& g, CanonicalLimits limits = {}) {
  std::vector<int> plain(g.num_vertices(), 0);
  return canonical_form(g, plain, limits);
}

inline bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, CanonicalLimits limits = {}) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a, limits) == canonical_form(b, limits);
}

/// Vertex orbits of Aut(G): u and v share an orbit iff G with u marked is
/// isomorphic to G with v marked. Orbits are listed by smallest member.
inline std::vector<std::vector<Vertex>> automorphism_orbits(const Hypergraph& g, CanonicalLimits limits = {}) {
  std::map<CanonicalKey, std::vector<Vertex>> by_key;
  std::vector<int> marks(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    marks[v] = 1;
    by_key[canonical_form(g, marks, limits)].push_back(v);
    marks[v] = 0;
  }
  std::vector<std::vector<Vertex>> orbits;
  for (auto& [key, members] : by_key) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace hgs

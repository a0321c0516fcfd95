#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hgs/canonical.hpp"
#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/structure.hpp"

namespace hgs {

struct EnumerationLimits {
  // bound on C(C(n,k), n/(k-1)), the number of edge subsets examined
  std::uint64_t max_candidate_subsets = 10'000'000;
  CanonicalLimits canonical{};
};

namespace detail {

inline std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  long double acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
    if (acc > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

inline void k_subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<Vertex>& cur,
                      std::vector<Edge>& out) {
  if (cur.size() == k) {
    out.emplace_back(cur);
    return;
  }
  for (Vertex v = from; v < n; ++v) {
    cur.push_back(v);
    k_subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Edge> all_k_subsets(std::size_t n, std::size_t k) {
  std::vector<Edge> out;
  std::vector<Vertex> cur;
  if (k >= 2) detail::k_subsets(n, k, 0, cur, out);
  return out;
}

inline std::size_t unicyclic_edge_count(std::size_t n, std::size_t k) {
  if (k < 2 || n == 0 || n % (k - 1) != 0) {
    throw Error(ErrorKind::SizeNotRepresentable,
                "n=" + std::to_string(n) + " is not a multiple of k-1 for k=" + std::to_string(k));
  }
  return n / (k - 1);
}

/// Streams every connected simple k-uniform hypergraph on n labeled vertices
/// with n/(k-1) edges; by n - 1 = (k-1)m - r these are exactly the
/// unicyclic ones. Edges come out in lexicographic order.
template <class Visitor>
void for_each_unicyclic(std::size_t n, std::size_t k, Visitor&& visit, const EnumerationLimits& limits = {}) {
  const std::size_t m = unicyclic_edge_count(n, k);
  const auto pool = all_k_subsets(n, k);
  const auto candidates = detail::saturating_binomial(pool.size(), m);
  if (candidates > limits.max_candidate_subsets) {
    throw Error(ErrorKind::SearchBudgetExceeded, "enumeration at n=" + std::to_string(n) + ", k=" +
                                                     std::to_string(k) + " needs " + std::to_string(candidates) +
                                                     " subsets, budget is " +
                                                     std::to_string(limits.max_candidate_subsets));
  }
  if (m == 0 || pool.empty()) return;

  std::vector<std::size_t> chosen;
  auto recurse = [&](auto& self, std::size_t from) -> void {
    if (chosen.size() == m) {
      detail::DisjointSets sets(n);
      std::size_t merges = 0;
      for (auto i : chosen)
        for (Vertex v : pool[i]) merges += sets.unite(pool[i][0], v) ? 1 : 0;
      if (merges + 1 != n) return;
      std::vector<Edge> edges;
      edges.reserve(m);
      for (auto i : chosen) edges.push_back(pool[i]);
      visit(Hypergraph(n, std::move(edges)));
      return;
    }
    for (std::size_t i = from; i + (m - chosen.size()) <= pool.size(); ++i) {
      // the lexicographically first edge must cover vertex 0
      if (chosen.empty() && pool[i][0] != 0) break;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
}

struct IsomorphismClass {
  CanonicalKey key;
  Hypergraph representative;  // first labeled member in stream order
  std::size_t labeled_count = 0;
};

/// Groups the unicyclic stream by isomorphism class, classes in order of
/// first appearance.
inline std::vector<IsomorphismClass> unicyclic_classes(std::size_t n, std::size_t k,
                                                       const EnumerationLimits& limits = {}) {
  std::vector<IsomorphismClass> classes;
  std::map<CanonicalKey, std::size_t> index;
  for_each_unicyclic(
      n, k,
      [&](Hypergraph g) {
        auto key = canonical_form(g, limits.canonical);
        auto [it, fresh] = index.try_emplace(key, classes.size());
        if (fresh) classes.push_back({std::move(key), std::move(g), 0});
        ++classes[it->second].labeled_count;
      },
      limits);
  return classes;
}

inline std::vector<Hypergraph> enumerate_unicyclic(std::size_t n, std::size_t k, bool dedupe,
                                                   const EnumerationLimits& limits = {}) {
  std::vector<Hypergraph> out;
  if (dedupe) {
    for (auto& c : unicyclic_classes(n, k, limits)) out.push_back(std::move(c.representative));
  } else {
    for_each_unicyclic(n, k, [&](Hypergraph g) { out.push_back(std::move(g)); }, limits);
  }
  return out;
}

/// One representative per isomorphism class of k-uniform supertrees with
/// exactly `edges` edges. Every supertree with at least one edge has a
/// pendant edge, so growing by pendant edges reaches all of them.
inline std::vector<Hypergraph> enumerate_supertrees(std::size_t edges, std::size_t k,
                                                    const CanonicalLimits& limits = {}) {
  if (k < 2) throw Error(ErrorKind::BadParams, "edge size must be at least 2");
  std::vector<Hypergraph> level{Hypergraph(1, {})};
  for (std::size_t step = 0; step < edges; ++step) {
    std::vector<Hypergraph> next;
    std::map<CanonicalKey, bool> seen;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.num_vertices(); ++v) {
        std::vector<Vertex> fresh{v};
        for (std::size_t j = 0; j + 1 < k; ++j) fresh.push_back(t.num_vertices() + j);
        std::vector<Edge> grown = t.edges();
        grown.emplace_back(std::move(fresh));
        Hypergraph candidate(t.num_vertices() + k - 1, std::move(grown));
        if (seen.emplace(canonical_form(candidate, limits), true).second) next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace hgs

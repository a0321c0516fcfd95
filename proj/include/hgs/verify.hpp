#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgs/canonical.hpp"
#include "hgs/enumerate.hpp"
#include "hgs/errors.hpp"
#include "hgs/families.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/json_io.hpp"
#include "hgs/spectral.hpp"
#include "hgs/structure.hpp"

namespace hgs {

enum class Verdict { pass, fail, indistinguishable, skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indistinguishable: return "indistinguishable";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

/// One checked instance. `margin` is signed so that positive means the
/// property holds: b - a for a strict a < b, tol - |a - b| for an equality.
struct PropertyCase {
  std::string property;
  std::string params;
  double value_a = std::numeric_limits<double>::quiet_NaN();
  double value_b = std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::quiet_NaN();
  Verdict verdict = Verdict::skipped;
  double runtime_ms = 0.0;
  std::string note;
};

struct RegularPowerInstance {
  std::size_t k = 3;
  std::size_t d = 2;
  std::string base_name;
  Hypergraph base;
};

/// D at v with a pendant path of length p and a length-q path to w in H,
/// compared against the straight (0, p+q) layout.
struct PathSplitInstance {
  std::string name;
  Hypergraph d;
  Vertex v = 0;
  std::size_t p = 1;
  std::size_t q = 1;
  Hypergraph h;
  Vertex w = 0;
  std::size_t k = 3;
};

/// D at v0 with a trunk path and shorter branches on its first edge,
/// compared against one straight path of the same total length.
struct BranchInstance {
  std::string name;
  Hypergraph d;
  Vertex v0 = 0;
  std::size_t trunk = 2;
  std::vector<std::size_t> branches;
  std::size_t k = 3;
};

/// Optional restriction on the k, g and s parameters of generated cases.
struct GridFilter {
  std::optional<std::vector<std::size_t>> k;
  std::optional<std::vector<std::size_t>> g;
  std::optional<std::vector<std::size_t>> s;

  static bool in(const std::optional<std::vector<std::size_t>>& set, std::size_t x) {
    return !set || std::find(set->begin(), set->end(), x) != set->end();
  }
  bool admits_k(std::size_t x) const { return in(k, x); }
  bool admits_g(std::size_t x) const { return in(g, x); }
  bool admits_s(std::size_t x) const { return in(s, x); }
};

inline std::vector<RegularPowerInstance> default_regular_powers() {
  return {
      {3, 2, "C5", ordinary_cycle(5)},         {3, 2, "C6", ordinary_cycle(6)},
      {3, 3, "K4", complete_graph(4)},         {4, 2, "C5", ordinary_cycle(5)},
      {4, 3, "K33", complete_bipartite(3, 3)}, {5, 2, "C4", ordinary_cycle(4)},
  };
}

inline std::vector<PathSplitInstance> default_path_splits() {
  const Hypergraph point(1, {});
  return {
      {"C(6;3)@v1;h=point", hypercycle(3, 3).graph, 0, 1, 1, point, 0, 3},
      {"C(4;3)@v1;h=edge", hypercycle(2, 3).graph, 0, 2, 1, hyperpath(1, 3), 0, 3},
      {"C(6;3)@a11;h=C(4;3)@v1", hypercycle(3, 3).graph, 1, 1, 2, hypercycle(2, 3).graph, 0, 3},
      {"P(2;4)@end;h=point", hyperpath(2, 4), 0, 2, 2, point, 0, 4},
      {"edge@0;h=C(6;3)@v1", hyperpath(1, 3), 0, 1, 3, hypercycle(3, 3).graph, 0, 3},
  };
}

inline std::vector<BranchInstance> default_branchings() {
  return {
      {"edge@0", hyperpath(1, 3), 0, 2, {1}, 3},
      {"C(6;3)@v1", hypercycle(3, 3).graph, 0, 3, {1}, 3},
      {"C(6;3)@v1", hypercycle(3, 3).graph, 0, 3, {2}, 3},
      {"edge@0", hyperpath(1, 4), 0, 3, {1, 2}, 4},
      {"C(6;4)@v1", hypercycle(2, 4).graph, 0, 2, {1, 1}, 4},
  };
}

struct VerifyConfig {
  SpectralOptions spectral{};
  double eq_tol = 1e-8;
  double strict_margin = 1e-9;

  std::vector<std::size_t> ks{3, 4};
  std::vector<std::size_t> gs{2, 3, 4, 5, 6};
  std::vector<std::size_t> ss{0, 1, 2, 3, 4};
  GridFilter filter{};

  std::vector<RegularPowerInstance> regular_powers = default_regular_powers();
  std::vector<std::pair<std::size_t, std::size_t>> enumeration{{6, 3}, {8, 3}};
  std::vector<std::pair<std::size_t, std::size_t>> labeled_scan{{6, 3}};
  std::vector<std::size_t> octopus_ks{3};
  std::vector<std::size_t> octopus_gs{2, 3};
  std::size_t octopus_max_edges = 3;
  // pendant shapes hung on the cycle for the attachment, subdivision and
  // eigenvector-shape properties: every supertree up to this many edges
  std::size_t attachment_max_edges = 3;
  std::size_t subdivision_max_edges = 2;
  std::size_t shape_max_edges = 2;
  std::vector<PathSplitInstance> path_splits = default_path_splits();
  std::vector<BranchInstance> branchings = default_branchings();

  std::size_t rayleigh_samples = 100;
  std::size_t certificate_samples = 20;
  std::uint64_t seed = 20240611;
  std::size_t orbit_max_vertices = 10;
  std::size_t oracle_max_dimension = 64;
  EnumerationLimits enumeration_limits{};
  CanonicalLimits canonical{16, 2'000'000};

  /// No grids, no instances: run_all yields an empty report.
  static VerifyConfig empty() {
    VerifyConfig c;
    c.ks.clear();
    c.gs.clear();
    c.ss.clear();
    c.regular_powers.clear();
    c.enumeration.clear();
    c.labeled_scan.clear();
    c.octopus_ks.clear();
    c.octopus_gs.clear();
    c.path_splits.clear();
    c.branchings.clear();
    return c;
  }
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t indistinguishable = 0;
  std::size_t skipped = 0;
};

struct VerificationReport {
  std::vector<PropertyCase> cases;
  VerifyConfig config;

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& c : cases) {
      ++s.total;
      switch (c.verdict) {
        case Verdict::pass: ++s.pass; break;
        case Verdict::fail: ++s.fail; break;
        case Verdict::indistinguishable: ++s.indistinguishable; break;
        case Verdict::skipped: ++s.skipped; break;
      }
    }
    return s;
  }

  /// Indistinguishable margins count as failures.
  bool ok() const {
    const auto s = summary();
    return s.fail == 0 && s.indistinguishable == 0;
  }

  /// Case counts per property id, in id order.
  std::map<std::string, std::size_t> coverage() const {
    std::map<std::string, std::size_t> out;
    for (const auto& c : cases) ++out[c.property];
    return out;
  }
};

namespace detail {

/// "n:e|e|..." with each edge as dash-joined ids, in the graph's own labels.
inline std::string compact(const Hypergraph& g) {
  std::string out = std::to_string(g.num_vertices()) + ":";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i) out += "|";
    const auto& e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += "-";
      out += std::to_string(e[j]);
    }
  }
  return out;
}

inline std::string kv(const std::string& key, std::size_t value) { return key + "=" + std::to_string(value); }

template <class... Parts>
std::string params(const Parts&... parts) {
  std::string out;
  ((out += (out.empty() ? "" : ";") + std::string(parts)), ...);
  return out;
}

// A rooted pendant shape: a supertree and a root, one per root orbit.
struct RootedTree {
  Hypergraph tree;
  Vertex root = 0;
  std::string label;
};

// Symmetry and monotonicity pattern of the principal eigenvector on the
// cycle of a graph with something hung at v_1 (joint) or v_{a(1,1)}.
struct CycleShape {
  std::vector<std::pair<Vertex, Vertex>> equal;
  // (u, w) with x_u >= x_w expected
  std::vector<std::pair<Vertex, Vertex>> descending;
  std::string clause;
};

inline CycleShape cycle_shape(const LabeledCycle& c, Attachment where) {
  CycleShape shape;
  const std::size_t g = c.g;
  auto v = [&](std::size_t i) { return c.joint(i); };
  auto a = [&](std::size_t i) { return c.interior(i, 1); };
  const bool odd = g % 2 == 1;
  if (where == Attachment::joint) {
    shape.clause = odd ? "joint-odd" : "joint-even";
    const std::size_t top = odd ? (g - 1) / 2 : (g - 2) / 2;
    for (std::size_t i = 1; i <= top; ++i) {
      shape.equal.emplace_back(v(1 + i), v(g - i + 1));
      shape.equal.emplace_back(a(i), a(g - i + 1));
      shape.descending.emplace_back(v(i), v(i + 1));
    }
  } else {
    shape.clause = odd ? "interior-odd" : "interior-even";
    shape.equal.emplace_back(v(1), v(2));
    const std::size_t joint_top = odd ? (g >= 3 ? (g - 3) / 2 : 0) : (g - 2) / 2;
    const std::size_t interior_top = odd ? (g - 1) / 2 : (g - 2) / 2;
    const std::size_t desc_top = odd ? (g + 1) / 2 : g / 2;
    for (std::size_t i = 1; i <= joint_top; ++i) shape.equal.emplace_back(v(2 + i), v(g - i + 1));
    for (std::size_t i = 1; i <= interior_top; ++i) shape.equal.emplace_back(a(1 + i), a(g - i + 1));
    for (std::size_t i = 2; i <= desc_top && i + 1 <= g; ++i) shape.descending.emplace_back(v(i), v(i + 1));
  }
  return shape;
}

// Cycle edge subdivided to go from length g to g + 1: the one opposite the
// attachment point.
inline std::size_t subdivision_index(std::size_t g, Attachment where) {
  if (g % 2 == 1) return (g + 1) / 2;
  return where == Attachment::joint ? g / 2 : (g + 2) / 2;
}

}  // namespace detail

/// Caches spectra and enumerations and generates the property cases. Every
/// graph whose spectrum is requested is remembered for the cross-cutting
/// properties (oracle agreement, orbit symmetry, Rayleigh and certificate
/// checks).
class Verifier {
 public:
  struct ClassRecord {
    CanonicalKey key;
    Hypergraph graph;
    double rho = 0.0;
    std::optional<std::size_t> girth;
    std::size_t labeled_count = 0;
  };

  struct TouchedGraph {
    std::string name;
    Hypergraph graph;
  };

  explicit Verifier(VerifyConfig config = {}) : cfg_(std::move(config)) {}

  const VerifyConfig& config() const { return cfg_; }
  const std::vector<TouchedGraph>& touched() const { return touched_; }

  /// Converged spectrum of g, cached by labeled structure.
  const SpectrumResult& spectrum(const std::string& name, const Hypergraph& g) {
    const auto key = hypergraph_to_json(g);
    auto it = spectra_.find(key);
    if (it == spectra_.end()) {
      auto r = spectral_radius(g, cfg_.spectral);
      if (!r.converged) {
        throw Error(ErrorKind::NotConverged, name + ": residual " + format_double(r.residual) + " after " +
                                                 std::to_string(r.iterations) + " iterations");
      }
      it = spectra_.emplace(key, std::move(r)).first;
      touched_.push_back({name, g});
    }
    return it->second;
  }

  double rho(const std::string& name, const Hypergraph& g) { return spectrum(name, g).rho; }

  /// Unicyclic classes at (n, k) with their spectral radius and girth.
  const std::vector<ClassRecord>& classes(std::size_t n, std::size_t k) {
    auto it = class_cache_.find({n, k});
    if (it != class_cache_.end()) return it->second;
    std::vector<ClassRecord> out;
    for (auto& c : unicyclic_classes(n, k, cfg_.enumeration_limits)) {
      ClassRecord r;
      r.key = c.key;
      r.girth = girth(c.representative);
      r.rho = rho("class:" + c.key.to_string(), c.representative);
      r.labeled_count = c.labeled_count;
      r.graph = std::move(c.representative);
      out.push_back(std::move(r));
    }
    return class_cache_.emplace(std::make_pair(n, k), std::move(out)).first->second;
  }

  // -- verdict helpers ---------------------------------------------------

  void strict_less(PropertyCase& c, double a, double b) const {
    c.value_a = a;
    c.value_b = b;
    c.margin = b - a;
    c.verdict = c.margin > cfg_.strict_margin ? Verdict::pass
                : c.margin > 0.0              ? Verdict::indistinguishable
                                              : Verdict::fail;
  }

  void within(PropertyCase& c, double a, double b, double tol) const {
    c.value_a = a;
    c.value_b = b;
    c.margin = tol - std::abs(a - b);
    c.verdict = c.margin >= 0.0 ? Verdict::pass : Verdict::fail;
  }

  /// Runs one case; library errors become verdicts instead of escaping.
  PropertyCase run_case(const std::string& property, const std::string& params,
                        const std::function<void(PropertyCase&)>& body) {
    PropertyCase c;
    c.property = property;
    c.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const Error& ex) {
      c.verdict = ex.kind() == ErrorKind::SearchBudgetExceeded ? Verdict::skipped : Verdict::fail;
      c.note = ex.what();
    } catch (const std::exception& ex) {
      c.verdict = Verdict::fail;
      c.note = ex.what();
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
  }

  // -- closed forms -------------------------------------------------------

  std::vector<PropertyCase> regular_power(const std::vector<RegularPowerInstance>& grid) {
    std::vector<PropertyCase> out;
    for (const auto& inst : grid) {
      if (!cfg_.filter.admits_k(inst.k)) continue;
      const auto p = detail::params(detail::kv("k", inst.k), detail::kv("d", inst.d), "base=" + inst.base_name);
      out.push_back(run_case("regular_power_closed_form", p, [&](PropertyCase& c) {
        check_regular(inst);
        const auto g = power_of_graph(inst.base, inst.k);
        within(c, rho("power:" + p, g), regular_power_radius(inst.k, inst.d), cfg_.eq_tol);
      }));
      out.push_back(run_case("regular_power_certificate", p, [&](PropertyCase& c) {
        check_regular(inst);
        const auto g = power_of_graph(inst.base, inst.k);
        const double r = regular_power_radius(inst.k, inst.d);
        std::vector<double> y(g.num_vertices(), 1.0);
        for (Vertex v = inst.base.num_vertices(); v < g.num_vertices(); ++v)
          y[v] = regular_power_fresh_entry(inst.k, inst.d);
        const auto cert = perron_bound_check(adjacency_matrix(g), y, r, cfg_.eq_tol);
        double worst = 0.0;
        for (double s : cert.slack) worst = std::max(worst, std::abs(s));
        within(c, worst, 0.0, cfg_.eq_tol);
        c.value_b = r;
        if (!cert.tight) {
          c.verdict = Verdict::fail;
          c.note = "test vector is not a tight certificate";
        }
      }));
    }
    return out;
  }

  std::vector<PropertyCase> hypercycle_constant() {
    std::vector<PropertyCase> out;
    for (auto k : cfg_.ks) {
      if (!cfg_.filter.admits_k(k)) continue;
      for (auto g : cfg_.gs) {
        if (!cfg_.filter.admits_g(g)) continue;
        const auto p = detail::params(detail::kv("k", k), detail::kv("g", g), detail::kv("n", g * (k - 1)));
        out.push_back(run_case("hypercycle_constant", p, [&](PropertyCase& c) {
          within(c, rho("cycle:" + p, hypercycle(g, k).graph), hypercycle_radius(k), cfg_.eq_tol);
        }));
      }
    }
    return out;
  }

  // -- exhaustive enumeration ---------------------------------------------

  std::vector<PropertyCase> unicyclic_minimum(std::size_t n, std::size_t k) {
    std::vector<PropertyCase> out;
    const auto p = detail::params(detail::kv("n", n), detail::kv("k", k));
    out.push_back(run_case("unicyclic_minimum", p, [&](PropertyCase& c) {
      const auto& cls = classes(n, k);
      const auto order = by_rho(cls);
      const auto m = unicyclic_edge_count(n, k);
      const auto cycle_key = canonical_form(hypercycle(m, k).graph, cfg_.canonical);
      expect_extreme(c, cls, order, 0, cycle_key, true);
    }));
    out.push_back(run_case("unicyclic_minimum_value", p, [&](PropertyCase& c) {
      const auto& cls = classes(n, k);
      const auto order = by_rho(cls);
      if (order.empty()) throw Error(ErrorKind::PreconditionViolated, "no unicyclic graphs");
      within(c, cls[order[0]].rho, hypercycle_radius(k), cfg_.eq_tol);
    }));
    out.push_back(run_case("unicyclic_second_minimum", p, [&](PropertyCase& c) {
      const auto& cls = classes(n, k);
      const auto order = by_rho(cls);
      const auto m = unicyclic_edge_count(n, k);
      if (m < 3 || order.size() < 2) {
        c.verdict = Verdict::skipped;
        c.note = "no lollipop of this order";
        return;
      }
      const auto g = m - 1;
      c.note = "expected " + detail::params("lop", detail::kv("g", g), detail::kv("s", 1), detail::kv("v", 2));
      const auto lop_key = canonical_form(lollipop(g, k, 1, Attachment::interior), cfg_.canonical);
      expect_extreme(c, cls, order, 1, lop_key, true);
    }));
    return out;
  }

  /// Independent labeled scan: argmin over every labeled graph, no dedupe.
  std::vector<PropertyCase> unicyclic_labeled_scan(std::size_t n, std::size_t k) {
    std::vector<PropertyCase> out;
    const auto p = detail::params(detail::kv("n", n), detail::kv("k", k));
    out.push_back(run_case("unicyclic_labeled_scan", p, [&](PropertyCase& c) {
      double best = std::numeric_limits<double>::infinity();
      std::optional<Hypergraph> argmin;
      std::size_t count = 0;
      for_each_unicyclic(
          n, k,
          [&](const Hypergraph& g) {
            ++count;
            const double r = spectral_radius(g, cfg_.spectral).rho;
            if (r < best) {
              best = r;
              argmin = g;
            }
          },
          cfg_.enumeration_limits);
      const auto& cls = classes(n, k);
      const auto order = by_rho(cls);
      if (!argmin || order.empty()) throw Error(ErrorKind::PreconditionViolated, "no unicyclic graphs");
      within(c, best, cls[order[0]].rho, cfg_.eq_tol);
      c.note = std::to_string(count) + " labeled graphs";
      const auto m = unicyclic_edge_count(n, k);
      if (!are_isomorphic(*argmin, hypercycle(m, k).graph, cfg_.canonical)) {
        c.verdict = Verdict::fail;
        c.note += "; labeled argmin is not the hypercycle";
      }
    }));
    return out;
  }

  std::vector<PropertyCase> girth_maximum(std::size_t n, std::size_t k, std::size_t g) {
    std::vector<PropertyCase> out;
    const auto p = detail::params(detail::kv("n", n), detail::kv("k", k), detail::kv("g", g));
    out.push_back(run_case("girth_maximum", p, [&](PropertyCase& c) {
      const auto& cls = classes(n, k);
      std::vector<std::size_t> order;
      for (auto i : by_rho(cls))
        if (cls[i].girth == g) order.push_back(i);
      std::reverse(order.begin(), order.end());
      const auto key = canonical_form(u_star(n, k, g), cfg_.canonical);
      expect_extreme(c, cls, order, 0, key, false);
    }));
    return out;
  }

  // -- lollipop grids ------------------------------------------------------

  double lop(std::size_t g, std::size_t k, std::size_t s, Attachment v) {
    const auto name = "lop:" + detail::params(detail::kv("g", g), detail::kv("k", k), detail::kv("s", s),
                                              detail::kv("v", static_cast<std::size_t>(v)));
    return rho(name, lollipop(g, k, s, v));
  }

  std::vector<PropertyCase> lollipop_girth_monotone(std::size_t k, std::size_t s, const std::vector<std::size_t>& gs,
                                                    Attachment v) {
    std::vector<PropertyCase> out;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
      const auto g = gs[i];
      const auto p = detail::params(detail::kv("k", k), detail::kv("s", s),
                                    detail::kv("v", static_cast<std::size_t>(v)), detail::kv("g", g),
                                    detail::kv("g_next", gs[i + 1]));
      out.push_back(run_case("lollipop_girth_monotone", p, [&](PropertyCase& c) {
        if (s < 1) throw Error(ErrorKind::BadParams, "tail length must be >= 1");
        strict_less(c, lop(gs[i + 1], k, s, v), lop(g, k, s, v));
      }));
    }
    return out;
  }

  std::vector<PropertyCase> lollipop_variant_order(std::size_t k, std::size_t g, std::size_t s) {
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g), detail::kv("s", s));
    return {run_case("lollipop_variant_order", p, [&](PropertyCase& c) {
      if (s < 1) throw Error(ErrorKind::BadParams, "tail length must be >= 1");
      strict_less(c, lop(g, k, s, Attachment::interior), lop(g, k, s, Attachment::joint));
    })};
  }

  /// Checked literally: at fixed cycle length g, rho at tail s is strictly
  /// below rho at tail s - 1.
  std::vector<PropertyCase> tail_growth(std::size_t k, std::size_t g, const std::vector<std::size_t>& s_range,
                                        Attachment v) {
    std::vector<PropertyCase> out;
    for (auto s : s_range) {
      const auto p = detail::params(detail::kv("k", k), detail::kv("g", g),
                                    detail::kv("v", static_cast<std::size_t>(v)), detail::kv("s", s));
      out.push_back(run_case("lollipop_tail_growth", p, [&](PropertyCase& c) {
        if (s < 1) throw Error(ErrorKind::BadParams, "tail length must be >= 1");
        strict_less(c, lop(g, k, s, v), lop(g, k, s - 1, v));
      }));
    }
    return out;
  }

  /// Same edge budget, one tail edge moved into the cycle:
  /// rho(Lop_{g+1, s-1}) < rho(Lop_{g, s}).
  std::vector<PropertyCase> tail_budget_shift(std::size_t k, std::size_t g, const std::vector<std::size_t>& s_range,
                                              Attachment v) {
    std::vector<PropertyCase> out;
    for (auto s : s_range) {
      const auto p = detail::params(detail::kv("k", k), detail::kv("g", g),
                                    detail::kv("v", static_cast<std::size_t>(v)), detail::kv("s", s));
      out.push_back(run_case("lollipop_tail_budget_shift", p, [&](PropertyCase& c) {
        if (s < 1) throw Error(ErrorKind::BadParams, "tail length must be >= 1");
        strict_less(c, lop(g + 1, k, s - 1, v), lop(g, k, s, v));
      }));
    }
    return out;
  }

  // -- pendant shapes on a cycle ------------------------------------------

  /// Every supertree with 1..max_edges edges, once per root orbit.
  std::vector<detail::RootedTree> rooted_trees(std::size_t k, std::size_t max_edges) {
    std::vector<detail::RootedTree> out;
    for (std::size_t m = 1; m <= max_edges; ++m) {
      for (const auto& t : enumerate_supertrees(m, k, cfg_.canonical)) {
        for (const auto& orbit : automorphism_orbits(t, cfg_.canonical)) {
          out.push_back({t, orbit.front(), "tree=" + detail::compact(t) + ";root=" + std::to_string(orbit.front())});
        }
      }
    }
    return out;
  }

  std::vector<PropertyCase> attachment_position(std::size_t k, std::size_t g, const detail::RootedTree& t) {
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g), t.label);
    return {run_case("attachment_position", p, [&](PropertyCase& c) {
      if (t.tree.num_edges() < 1) throw Error(ErrorKind::BadParams, "attached graph needs an edge");
      const auto cyc = hypercycle(g, k);
      const auto g1 = attach_supertree(cyc, cyc.joint(1), t.tree, t.root);
      const auto g2 = attach_supertree(cyc, cyc.interior(1, 1), t.tree, t.root);
      strict_less(c, rho("attach:v=2;" + p, g2), rho("attach:v=1;" + p, g1));
    })};
  }

  std::vector<PropertyCase> subdivision_monotone(std::size_t k, std::size_t g, Attachment where,
                                                 const detail::RootedTree& t) {
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g),
                                  detail::kv("v", static_cast<std::size_t>(where)), t.label);
    return {run_case("subdivision_monotone", p, [&](PropertyCase& c) {
      if (t.tree.num_edges() < 1) throw Error(ErrorKind::BadParams, "attached graph needs an edge");
      const auto cyc = hypercycle(g, k);
      const auto base = attach_supertree(cyc, attachment_vertex(cyc, where), t.tree, t.root);
      const auto i = detail::subdivision_index(g, where);
      const auto next = i == g ? cyc.joint(1) : cyc.joint(i + 1);
      const auto sub = subdivide_edge(base, cyc.cycle_edge(i), cyc.joint(i), next);
      strict_less(c, rho("subdivided:" + p, sub), rho("attach:" + p, base));
    })};
  }

  /// Symmetry (equalities) and decay toward the antipode (inequalities) of
  /// the principal eigenvector along the cycle.
  std::vector<PropertyCase> cycle_eigvec_shape(std::size_t k, std::size_t g, Attachment where,
                                               const detail::RootedTree& t) {
    const auto cyc = hypercycle(g, k);
    const auto shape = detail::cycle_shape(cyc, where);
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g),
                                  detail::kv("v", static_cast<std::size_t>(where)), t.label,
                                  "clause=" + shape.clause);
    std::vector<PropertyCase> out;
    auto vector_of = [&]() {
      const auto graph = attach_supertree(cyc, attachment_vertex(cyc, where), t.tree, t.root);
      return spectrum("attach:" + p, graph).eigenvector;
    };
    out.push_back(run_case("cycle_eigvec_symmetry", p, [&](PropertyCase& c) {
      const auto x = vector_of();
      double worst = 0.0;
      for (auto [u, w] : shape.equal) worst = std::max(worst, std::abs(x[u] - x[w]));
      within(c, worst, 0.0, cfg_.eq_tol);
      c.note = std::to_string(shape.equal.size()) + " equalities";
    }));
    out.push_back(run_case("cycle_eigvec_monotone", p, [&](PropertyCase& c) {
      const auto x = vector_of();
      double slack = std::numeric_limits<double>::infinity();
      for (auto [u, w] : shape.descending) slack = std::min(slack, x[u] - x[w]);
      if (shape.descending.empty()) slack = 0.0;
      c.value_a = slack;
      c.value_b = -cfg_.eq_tol;
      c.margin = slack + cfg_.eq_tol;
      c.verdict = c.margin >= 0.0 ? Verdict::pass : Verdict::fail;
      c.note = std::to_string(shape.descending.size()) + " inequalities";
    }));
    return out;
  }

  // -- octopuslike minimum -----------------------------------------------

  std::vector<PropertyCase> octopuslike_minimum(std::size_t k, std::size_t g, std::size_t s) {
    struct Candidate {
      CanonicalKey key;
      double rho = 0.0;
      bool at_joint = false;
      bool at_interior = false;
    };
    std::vector<PropertyCase> out;
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g), detail::kv("s", s),
                                  detail::kv("n", (k - 1) * (g + s)));
    std::optional<std::vector<Candidate>> pool;
    std::string pool_error;
    std::optional<ErrorKind> pool_kind;
    auto build_pool = [&]() -> const std::vector<Candidate>& {
      if (pool) return *pool;
      if (pool_kind) throw Error(*pool_kind, pool_error);
      try {
        std::vector<Candidate> cand;
        std::map<CanonicalKey, std::size_t> index;
        const auto cyc = hypercycle(g, k);
        for (const auto& tree : enumerate_supertrees(s, k, cfg_.canonical)) {
          for (const auto& orbit : automorphism_orbits(tree, cfg_.canonical)) {
            for (auto where : {Attachment::joint, Attachment::interior}) {
              const auto graph = attach_supertree(cyc, attachment_vertex(cyc, where), tree, orbit.front());
              auto key = canonical_form(graph, cfg_.canonical);
              auto [it, fresh] = index.try_emplace(key, cand.size());
              if (fresh) cand.push_back({key, rho("octopus:" + key.to_string(), graph)});
              (where == Attachment::joint ? cand[it->second].at_joint : cand[it->second].at_interior) = true;
            }
          }
        }
        pool = std::move(cand);
        return *pool;
      } catch (const Error& ex) {
        pool_kind = ex.kind();
        pool_error = ex.what();
        throw;
      }
    };
    auto clause = [&](const std::string& property, Attachment expected, const std::function<bool(const Candidate&)>& keep) {
      out.push_back(run_case(property, p, [&](PropertyCase& c) {
        const auto& cand = build_pool();
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < cand.size(); ++i)
          if (keep(cand[i])) order.push_back(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cand[a].rho < cand[b].rho; });
        const auto key = canonical_form(lollipop(g, k, s, expected), cfg_.canonical);
        if (order.empty()) throw Error(ErrorKind::PreconditionViolated, "no candidates");
        c.note = std::to_string(order.size()) + " classes";
        if (cand[order[0]].key != key) {
          c.value_a = cand[order[0]].rho;
          c.verdict = Verdict::fail;
          c.note += "; minimizer is " + cand[order[0]].key.to_string();
          return;
        }
        if (order.size() == 1) {
          c.value_a = cand[order[0]].rho;
          c.verdict = Verdict::pass;
          c.note += "; single class";
          return;
        }
        strict_less(c, cand[order[0]].rho, cand[order[1]].rho);
      }));
    };
    clause("octopuslike_minimum", Attachment::interior, [](const Candidate&) { return true; });
    clause("octopuslike_minimum_joint", Attachment::joint, [](const Candidate& c) { return c.at_joint; });
    clause("octopuslike_minimum_interior", Attachment::interior, [](const Candidate& c) { return c.at_interior; });
    return out;
  }

  // -- path relocation ----------------------------------------------------

  std::vector<PropertyCase> path_split(const PathSplitInstance& inst) {
    const auto p = detail::params("d=" + inst.name, detail::kv("k", inst.k), detail::kv("p", inst.p),
                                  detail::kv("q", inst.q));
    return {run_case("path_split", p, [&](PropertyCase& c) {
      if (inst.p < 1 || inst.q < 1) throw Error(ErrorKind::BadParams, "both path lengths must be >= 1");
      const auto split = composite_dph(inst.d, inst.v, inst.p, inst.q, inst.h, inst.w, inst.k);
      const auto straight = composite_dph(inst.d, inst.v, 0, inst.p + inst.q, inst.h, inst.w, inst.k);
      strict_less(c, rho("straight:" + p, straight), rho("split:" + p, split));
    })};
  }

  std::vector<PropertyCase> path_branching(const BranchInstance& inst) {
    std::string lengths;
    for (auto l : inst.branches) lengths += (lengths.empty() ? "" : "-") + std::to_string(l);
    const auto p = detail::params("d=" + inst.name, detail::kv("k", inst.k), detail::kv("trunk", inst.trunk),
                                  "branches=" + lengths);
    return {run_case("path_branching", p, [&](PropertyCase& c) {
      if (inst.branches.empty()) throw Error(ErrorKind::BadParams, "need at least one branch");
      std::size_t total = inst.trunk;
      for (std::size_t i = 0; i < inst.branches.size(); ++i) {
        const auto l = inst.branches[i];
        if (l < 1 || l + 1 > inst.trunk || (i > 0 && l < inst.branches[i - 1])) {
          throw Error(ErrorKind::BadParams, "branch lengths must satisfy 1 <= L1 <= ... <= Lf <= trunk - 1");
        }
        total += l;
      }
      const auto branched = branched_path(inst.d, inst.v0, inst.trunk, inst.branches, inst.k);
      const auto straight = branched_path(inst.d, inst.v0, total, {}, inst.k);
      strict_less(c, rho("straight:" + p, straight), rho("branched:" + p, branched));
    })};
  }

  // -- perturbations ------------------------------------------------------

  /// Moves edges toward vertices with larger eigenvector entries; rho must
  /// strictly grow.
  std::vector<PropertyCase> edge_swap_monotone(const std::string& name, const Hypergraph& g,
                                               const std::function<std::vector<EdgeMove>(const std::vector<double>&)>& plan) {
    return {run_case("edge_swap_monotone", name, [&](PropertyCase& c) {
      const auto& s = spectrum(name, g);
      const auto moves = plan(s.eigenvector);
      if (moves.empty()) {
        c.verdict = Verdict::skipped;
        c.note = "no admissible move";
        return;
      }
      for (const auto& m : moves) {
        for (std::size_t j = 0; j < m.removed.size(); ++j) {
          if (s.eigenvector[m.removed[j]] > s.eigenvector[m.target[j]]) {
            throw Error(ErrorKind::PreconditionViolated, "move is not toward a larger entry");
          }
        }
      }
      const auto moved = edge_swap(g, moves);
      strict_less(c, s.rho, rho("swapped:" + name, moved));
    })};
  }

  /// Lollipop with the tail on an interior vertex: move the tail (or the
  /// cycle edge) so both sit at the larger of x_{v1}, x_{a(1,1)}.
  std::vector<PropertyCase> edge_swap_lollipop(std::size_t k, std::size_t g, std::size_t s) {
    const auto name = "lop:" + detail::params(detail::kv("g", g), detail::kv("k", k), detail::kv("s", s), "v=2");
    const auto graph = lollipop(g, k, s, Attachment::interior);
    const auto cyc = hypercycle(g, k);
    return edge_swap_monotone(name, graph, [&](const std::vector<double>& x) {
      const Vertex v1 = cyc.joint(1);
      const Vertex a11 = cyc.interior(1, 1);
      if (x[v1] >= x[a11]) return std::vector<EdgeMove>{{graph.edge(g), {a11}, {v1}}};
      return std::vector<EdgeMove>{{cyc.cycle_edge(g), {v1}, {a11}}};
    });
  }

  /// First pendant edge (one vertex of degree > 1) moved to the vertex of
  /// largest entry outside it.
  std::vector<PropertyCase> edge_swap_pendant(const std::string& name, const Hypergraph& graph) {
    return edge_swap_monotone(name, graph, [&](const std::vector<double>& x) {
      const auto deg = degrees(graph);
      for (const auto& e : graph.edges()) {
        std::vector<Vertex> hubs;
        for (Vertex v : e)
          if (deg[v] > 1) hubs.push_back(v);
        if (hubs.size() != 1) continue;
        std::optional<Vertex> best;
        for (Vertex w = 0; w < graph.num_vertices(); ++w) {
          if (e.contains(w)) continue;
          if (!best || x[w] > x[*best]) best = w;
        }
        if (best && x[*best] > x[hubs[0]]) return std::vector<EdgeMove>{{e, {hubs[0]}, {*best}}};
      }
      return std::vector<EdgeMove>{};
    });
  }

  /// Splits the cycle joint of smallest entry away from one of its edges
  /// through a fresh size-k edge. Lollipops must strictly drop; the bare
  /// cycle keeps its value.
  std::vector<PropertyCase> joint_split(std::size_t k, std::size_t g, std::size_t s, Attachment where) {
    const auto p = detail::params(detail::kv("k", k), detail::kv("g", g), detail::kv("s", s),
                                  detail::kv("v", static_cast<std::size_t>(where)));
    return {run_case("joint_split", p, [&](PropertyCase& c) {
      if (g < 4) throw Error(ErrorKind::BadParams, "joint split needs a cycle of length >= 4");
      const auto cyc = hypercycle(g, k);
      const auto graph = lollipop(g, k, s, where);
      const auto& spec = spectrum("lop:" + p, graph);
      const auto& x = spec.eigenvector;
      const auto deg = degrees(graph);
      auto joint = [&](std::size_t i) { return cyc.joint((i + g - 1) % g + 1); };
      auto edge = [&](std::size_t i) -> const Edge& { return cyc.cycle_edge((i + g - 1) % g + 1); };
      auto quiet = [&](const Edge& e, Vertex a, Vertex b) {
        for (Vertex z : e)
          if (z != a && z != b && deg[z] != 1) return false;
        return true;
      };
      std::optional<std::size_t> pick;
      for (std::size_t i = 1; i <= g; ++i) {
        const Vertex prev = joint(i + g - 1);
        const Vertex here = joint(i);
        const Vertex next = joint(i + 1);
        if (deg[prev] != 2 || deg[here] != 2 || deg[next] != 2) continue;
        if (!quiet(edge(i), here, next) || !quiet(edge(i + g - 1), prev, here)) continue;
        if (!pick || x[here] < x[joint(*pick)]) pick = i;
      }
      if (!pick) {
        c.verdict = Verdict::skipped;
        c.note = "no joint with the required degrees";
        return;
      }
      const Vertex here = joint(*pick);
      if (x[here] > x[joint(*pick + 1)] + cfg_.eq_tol || x[here] > x[joint(*pick + g - 1)] + cfg_.eq_tol) {
        c.verdict = Verdict::skipped;
        c.note = "chosen joint is not below its neighbours";
        return;
      }
      const auto split = split_joint(graph, edge(*pick), here, k);
      const double after = rho("split-joint:" + p, split);
      if (s == 0) {
        within(c, after, spec.rho, cfg_.eq_tol);
        c.note = "equality case";
      } else {
        strict_less(c, after, spec.rho);
      }
      c.note += (c.note.empty() ? "" : "; ") + std::string("joint=v") + std::to_string(*pick);
    })};
  }

  /// Adds a chord on existing vertices and, separately, a pendant edge at 0.
  std::vector<PropertyCase> edge_addition(const std::string& name, const Hypergraph& graph, std::size_t k) {
    std::vector<PropertyCase> out;
    out.push_back(run_case("edge_addition", name + ";added=chord", [&](PropertyCase& c) {
      std::optional<Edge> chord;
      for (const auto& e : all_k_subsets(graph.num_vertices(), k)) {
        if (!graph.contains_edge(e)) {
          chord = e;
          break;
        }
      }
      if (!chord) {
        c.verdict = Verdict::skipped;
        c.note = "complete";
        return;
      }
      c.note = "edge " + chord->to_string();
      strict_less(c, rho(name, graph), rho(name + "+chord", add_edge(graph, *chord)));
    }));
    out.push_back(run_case("edge_addition", name + ";added=pendant", [&](PropertyCase& c) {
      std::vector<Vertex> fresh{0};
      for (std::size_t j = 0; j + 1 < k; ++j) fresh.push_back(graph.num_vertices() + j);
      Hypergraph grown(graph.num_vertices() + k - 1, graph.edges());
      grown = add_edge(grown, Edge(fresh));
      strict_less(c, rho(name, graph), rho(name + "+pendant", grown));
    }));
    return out;
  }

  // -- properties over every graph seen so far ----------------------------

  std::vector<PropertyCase> oracle_agreement() {
    std::vector<PropertyCase> out;
    const auto graphs = touched_;
    for (const auto& t : graphs) {
      if (t.graph.num_vertices() > cfg_.oracle_max_dimension) continue;
      const auto p = "graph=" + t.name;
      std::optional<std::vector<double>> eig;
      auto spectrum_of = [&]() -> const std::vector<double>& {
        if (!eig) eig = oracle_spectrum(adjacency_matrix(t.graph), {cfg_.oracle_max_dimension, 100});
        return *eig;
      };
      out.push_back(run_case("oracle_agreement", p, [&](PropertyCase& c) {
        within(c, rho(t.name, t.graph), max_modulus(spectrum_of()), cfg_.eq_tol);
      }));
      out.push_back(run_case("spectrum_trace", p, [&](PropertyCase& c) {
        double sum = 0.0;
        for (double v : spectrum_of()) sum += v;
        within(c, sum, 0.0, cfg_.eq_tol);
      }));
    }
    return out;
  }

  std::vector<PropertyCase> orbit_symmetry() {
    std::vector<PropertyCase> out;
    const auto graphs = touched_;
    for (const auto& t : graphs) {
      if (t.graph.num_vertices() > cfg_.orbit_max_vertices || !is_connected(t.graph)) continue;
      out.push_back(run_case("orbit_symmetry", "graph=" + t.name, [&](PropertyCase& c) {
        const auto& x = spectrum(t.name, t.graph).eigenvector;
        const auto orbits = automorphism_orbits(t.graph, cfg_.canonical);
        double worst = 0.0;
        for (const auto& orbit : orbits)
          for (Vertex v : orbit) worst = std::max(worst, std::abs(x[v] - x[orbit.front()]));
        within(c, worst, 0.0, cfg_.eq_tol);
        c.note = std::to_string(orbits.size()) + " orbits";
      }));
    }
    return out;
  }

  std::vector<PropertyCase> rayleigh_bound() {
    std::vector<PropertyCase> out;
    const auto graphs = touched_;
    for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
      const auto& t = graphs[idx];
      out.push_back(run_case("rayleigh_bound", "graph=" + t.name, [&](PropertyCase& c) {
        std::mt19937_64 rng(cfg_.seed + idx);
        std::normal_distribution<double> normal(0.0, 1.0);
        const auto a = adjacency_matrix(t.graph);
        double best = -std::numeric_limits<double>::infinity();
        std::vector<double> x(t.graph.num_vertices());
        for (std::size_t i = 0; i < cfg_.rayleigh_samples; ++i) {
          for (double& v : x) v = normal(rng);
          if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) x[0] = 1.0;
          best = std::max(best, rayleigh_quotient(a, x));
        }
        const double r = rho(t.name, t.graph);
        c.value_a = best;
        c.value_b = r;
        c.margin = r + cfg_.strict_margin - best;
        c.verdict = c.margin >= 0.0 ? Verdict::pass : Verdict::fail;
      }));
    }
    return out;
  }

  /// Random positive test vectors: max ratio (Ay)_i / y_i is an upper
  /// certificate, min ratio a lower one; both must bracket rho. The
  /// principal eigenvector itself must certify rho tightly.
  std::vector<PropertyCase> certificate_soundness() {
    std::vector<PropertyCase> out;
    const auto graphs = touched_;
    for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
      const auto& t = graphs[idx];
      if (!is_connected(t.graph)) continue;
      out.push_back(run_case("certificate_soundness", "graph=" + t.name, [&](PropertyCase& c) {
        std::mt19937_64 rng(cfg_.seed ^ (0x9e3779b97f4a7c15ULL + idx));
        std::uniform_real_distribution<double> unit(0.1, 1.0);
        const auto a = adjacency_matrix(t.graph);
        const auto& s = spectrum(t.name, t.graph);
        double worst = std::numeric_limits<double>::infinity();
        std::vector<double> y(t.graph.num_vertices());
        for (std::size_t i = 0; i < cfg_.certificate_samples; ++i) {
          for (double& v : y) v = unit(rng);
          const auto ay = a.multiply(y);
          double hi = 0.0;
          double lo = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < y.size(); ++j) {
            hi = std::max(hi, ay[j] / y[j]);
            lo = std::min(lo, ay[j] / y[j]);
          }
          if (!perron_bound_check(a, y, hi, 1e-12).proves_upper() || !perron_bound_check(a, y, lo, 1e-12).proves_lower()) {
            throw Error(ErrorKind::PreconditionViolated, "ratio bounds did not certify");
          }
          worst = std::min(worst, std::min(hi + cfg_.strict_margin - s.rho, s.rho - (lo - cfg_.strict_margin)));
        }
        const auto tight = perron_bound_check(a, s.eigenvector, s.rho, cfg_.strict_margin);
        c.value_a = s.rho;
        c.value_b = worst;
        c.margin = worst;
        c.verdict = worst >= 0.0 && tight.tight ? Verdict::pass : Verdict::fail;
        if (!tight.tight) c.note = "eigenvector is not a tight certificate";
      }));
    }
    return out;
  }

  // -- full run -------------------------------------------------------------

  VerificationReport run_all() {
    std::vector<PropertyCase> cases;
    auto add = [&](std::vector<PropertyCase> more) {
      for (auto& c : more) cases.push_back(std::move(c));
    };
    const auto& f = cfg_.filter;
    std::vector<std::size_t> ks, gs, ss;
    for (auto k : cfg_.ks)
      if (f.admits_k(k)) ks.push_back(k);
    for (auto g : cfg_.gs)
      if (f.admits_g(g)) gs.push_back(g);
    for (auto s : cfg_.ss)
      if (f.admits_s(s)) ss.push_back(s);
    std::vector<std::size_t> tails;
    for (auto s : ss)
      if (s >= 1) tails.push_back(s);
    const Attachment both[] = {Attachment::joint, Attachment::interior};

    add(regular_power(cfg_.regular_powers));
    add(hypercycle_constant());

    for (auto [n, k] : cfg_.enumeration) {
      if (!f.admits_k(k)) continue;
      add(unicyclic_minimum(n, k));
      const auto m = n % (k - 1) == 0 ? n / (k - 1) : 0;
      for (std::size_t g = 2; g <= m; ++g)
        if (f.admits_g(g)) add(girth_maximum(n, k, g));
    }
    for (auto [n, k] : cfg_.labeled_scan)
      if (f.admits_k(k)) add(unicyclic_labeled_scan(n, k));

    for (auto k : ks) {
      for (auto s : tails)
        for (auto v : both) add(lollipop_girth_monotone(k, s, gs, v));
      for (auto g : gs)
        for (auto s : tails) add(lollipop_variant_order(k, g, s));
      for (auto g : gs)
        for (auto v : both) {
          add(tail_growth(k, g, tails, v));
          if (std::find(gs.begin(), gs.end(), g + 1) != gs.end()) add(tail_budget_shift(k, g, tails, v));
        }
    }

    for (auto k : cfg_.octopus_ks) {
      if (!f.admits_k(k)) continue;
      for (auto g : cfg_.octopus_gs) {
        if (!f.admits_g(g)) continue;
        for (std::size_t s = 1; s <= cfg_.octopus_max_edges; ++s)
          if (f.admits_s(s)) add(octopuslike_minimum(k, g, s));
      }
    }

    for (auto k : ks) {
      const auto trees = rooted_trees(k, std::max({cfg_.attachment_max_edges, cfg_.subdivision_max_edges,
                                                   cfg_.shape_max_edges}));
      for (auto g : gs) {
        for (const auto& t : trees) {
          const auto edges = t.tree.num_edges();
          if (edges <= cfg_.attachment_max_edges) add(attachment_position(k, g, t));
          for (auto v : both) {
            if (edges <= cfg_.subdivision_max_edges) add(subdivision_monotone(k, g, v, t));
            if (edges <= cfg_.shape_max_edges && g >= 3) add(cycle_eigvec_shape(k, g, v, t));
          }
        }
      }
    }

    for (const auto& inst : cfg_.path_splits)
      if (f.admits_k(inst.k)) add(path_split(inst));
    for (const auto& inst : cfg_.branchings)
      if (f.admits_k(inst.k)) add(path_branching(inst));

    for (auto k : ks)
      for (auto g : gs) {
        for (auto s : tails) add(edge_swap_lollipop(k, g, s));
        if (g >= 4)
          for (auto s : ss)
            for (auto v : both) {
              if (s == 0 && v == Attachment::interior) continue;
              add(joint_split(k, g, s, v));
            }
        for (auto s : ss)
          for (auto v : both) {
            if (s == 0 && v == Attachment::interior) continue;
            const auto name = "lop:" + detail::params(detail::kv("g", g), detail::kv("k", k), detail::kv("s", s),
                                                      detail::kv("v", static_cast<std::size_t>(v)));
            add(edge_addition(name, lollipop(g, k, s, v), k));
          }
      }
    for (auto [n, k] : cfg_.enumeration) {
      if (!f.admits_k(k)) continue;
      try {
        for (const auto& cls : classes(n, k)) add(edge_swap_pendant("class:" + cls.key.to_string(), cls.graph));
      } catch (const Error&) {
        // already reported by the enumeration cases
      }
    }

    add(orbit_symmetry());
    add(rayleigh_bound());
    add(certificate_soundness());
    add(oracle_agreement());

    std::stable_sort(cases.begin(), cases.end(),
                     [](const PropertyCase& a, const PropertyCase& b) { return a.property < b.property; });
    return {std::move(cases), cfg_};
  }

 private:
  void check_regular(const RegularPowerInstance& inst) const {
    const auto d = regular_degree(inst.base);
    if (d != inst.d) {
      throw Error(ErrorKind::NotRegular, inst.base_name + " has degree " + std::to_string(d) + ", expected " +
                                             std::to_string(inst.d));
    }
  }

  static std::vector<std::size_t> by_rho(const std::vector<ClassRecord>& cls) {
    std::vector<std::size_t> order(cls.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cls[a].rho < cls[b].rho; });
    return order;
  }

  // order[pos] must carry `expected`, strictly separated from order[pos+1]
  // (ascending when `minimum`, descending otherwise).
  void expect_extreme(PropertyCase& c, const std::vector<ClassRecord>& cls, const std::vector<std::size_t>& order,
                      std::size_t pos, const CanonicalKey& expected, bool minimum) const {
    if (order.size() <= pos) throw Error(ErrorKind::PreconditionViolated, "too few classes");
    const auto& hit = cls[order[pos]];
    const std::string count = std::to_string(order.size()) + " classes";
    c.note = c.note.empty() ? count : c.note + "; " + count;
    if (hit.key != expected) {
      c.value_a = hit.rho;
      c.verdict = Verdict::fail;
      c.note += "; extreme class is " + hit.key.to_string();
      return;
    }
    if (order.size() == pos + 1) {
      c.value_a = hit.rho;
      c.verdict = Verdict::pass;
      c.note += "; single class";
      return;
    }
    const double other = cls[order[pos + 1]].rho;
    if (minimum) strict_less(c, hit.rho, other);
    else {
      strict_less(c, other, hit.rho);
      c.value_a = hit.rho;
      c.value_b = other;
    }
  }

  VerifyConfig cfg_;
  std::map<std::string, SpectrumResult> spectra_;
  std::vector<TouchedGraph> touched_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ClassRecord>> class_cache_;
};

// -- free-function entry points ---------------------------------------------

inline std::vector<PropertyCase> verify_regular_power(const std::vector<RegularPowerInstance>& grid,
                                                      const VerifyConfig& config = {}) {
  for (const auto& inst : grid) {
    if (regular_degree(inst.base) != inst.d) throw Error(ErrorKind::NotRegular, inst.base_name + " is not " +
                                                                                  std::to_string(inst.d) + "-regular");
  }
  return Verifier(config).regular_power(grid);
}

inline std::vector<PropertyCase> verify_unicyclic_minimum(std::size_t n, std::size_t k, const VerifyConfig& config = {}) {
  unicyclic_edge_count(n, k);
  return Verifier(config).unicyclic_minimum(n, k);
}

inline std::vector<PropertyCase> verify_girth_maximum(std::size_t n, std::size_t k, std::size_t g,
                                                      const VerifyConfig& config = {}) {
  unicyclic_edge_count(n, k);
  return Verifier(config).girth_maximum(n, k, g);
}

inline std::vector<PropertyCase> verify_lollipop_girth_monotone(std::size_t k, std::size_t s,
                                                                const std::vector<std::size_t>& g_range, int variant,
                                                                const VerifyConfig& config = {}) {
  if (s < 1 || (variant != 1 && variant != 2)) throw Error(ErrorKind::BadParams, "need s >= 1 and variant 1 or 2");
  return Verifier(config).lollipop_girth_monotone(k, s, g_range, static_cast<Attachment>(variant));
}

inline std::vector<PropertyCase> verify_lollipop_variant_order(std::size_t k, std::size_t g, std::size_t s,
                                                               const VerifyConfig& config = {}) {
  if (s < 1) throw Error(ErrorKind::BadParams, "tail length must be >= 1");
  return Verifier(config).lollipop_variant_order(k, g, s);
}

inline std::vector<PropertyCase> verify_tail_growth(std::size_t k, std::size_t g,
                                                    const std::vector<std::size_t>& s_range, int variant,
                                                    const VerifyConfig& config = {}) {
  for (auto s : s_range)
    if (s < 1) throw Error(ErrorKind::BadParams, "tail lengths must be >= 1");
  if (variant != 1 && variant != 2) throw Error(ErrorKind::BadParams, "variant must be 1 or 2");
  return Verifier(config).tail_growth(k, g, s_range, static_cast<Attachment>(variant));
}

inline std::vector<PropertyCase> verify_octopuslike_minimum(std::size_t k, std::size_t g, std::size_t s,
                                                            const VerifyConfig& config = {}) {
  return Verifier(config).octopuslike_minimum(k, g, s);
}

inline std::vector<PropertyCase> verify_path_relocation(const std::vector<PathSplitInstance>& splits,
                                                        const std::vector<BranchInstance>& branchings,
                                                        const VerifyConfig& config = {}) {
  Verifier v(config);
  std::vector<PropertyCase> out;
  for (const auto& inst : splits)
    for (auto& c : v.path_split(inst)) out.push_back(std::move(c));
  for (const auto& inst : branchings)
    for (auto& c : v.path_branching(inst)) out.push_back(std::move(c));
  return out;
}

inline VerificationReport run_all(const VerifyConfig& config = {}) { return Verifier(config).run_all(); }

// -- report output ----------------------------------------------------------

inline std::string report_csv(const VerificationReport& report, bool timings = true) {
  std::string out = "property,params,value_a,value_b,margin,verdict,runtime_ms\n";
  for (const auto& c : report.cases) {
    out += c.property + "," + c.params + "," + format_double(c.value_a) + "," + format_double(c.value_b) + "," +
           format_double(c.margin) + "," + to_string(c.verdict) + "," +
           format_double(timings ? c.runtime_ms : 0.0) + "\n";
  }
  return out;
}

namespace detail {

inline std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }
inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string json_list(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

}  // namespace detail

inline std::string report_json(const VerificationReport& report, bool timings = true) {
  using detail::json_number;
  using detail::json_string;
  const auto& cfg = report.config;
  const auto s = report.summary();
  std::string out = "{\n  \"summary\": {\"total\": " + std::to_string(s.total) +
                    ", \"pass\": " + std::to_string(s.pass) + ", \"fail\": " + std::to_string(s.fail) +
                    ", \"indistinguishable\": " + std::to_string(s.indistinguishable) +
                    ", \"skipped\": " + std::to_string(s.skipped) + "},\n";
  out += "  \"config\": {\"tol\": " + json_number(cfg.spectral.tol) +
         ", \"max_iter\": " + std::to_string(cfg.spectral.max_iter) + ", \"eq_tol\": " + json_number(cfg.eq_tol) +
         ", \"strict_margin\": " + json_number(cfg.strict_margin) + ", \"k\": " + detail::json_list(cfg.ks) +
         ", \"g\": " + detail::json_list(cfg.gs) + ", \"s\": " + detail::json_list(cfg.ss) + ", \"enumeration\": [";
  for (std::size_t i = 0; i < cfg.enumeration.size(); ++i) {
    out += (i ? ", " : "") + std::string("[") + std::to_string(cfg.enumeration[i].first) + ", " +
           std::to_string(cfg.enumeration[i].second) + "]";
  }
  out += "], \"max_candidate_subsets\": " + std::to_string(cfg.enumeration_limits.max_candidate_subsets) +
         ", \"octopus_max_edges\": " + std::to_string(cfg.octopus_max_edges) + "},\n";
  out += "  \"coverage\": {";
  bool first = true;
  for (const auto& [id, count] : report.coverage()) {
    out += (first ? "" : ", ") + json_string(id) + ": " + std::to_string(count);
    first = false;
  }
  out += "},\n  \"cases\": [";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const auto& c = report.cases[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"property\": " + json_string(c.property) + ", \"params\": " + json_string(c.params) +
           ", \"value_a\": " + json_number(c.value_a) + ", \"value_b\": " + json_number(c.value_b) +
           ", \"margin\": " + json_number(c.margin) + ", \"verdict\": " + json_string(to_string(c.verdict)) +
           ", \"runtime_ms\": " + json_number(timings ? c.runtime_ms : 0.0) + ", \"note\": " + json_string(c.note) + "}";
  }
  out += report.cases.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace hgs

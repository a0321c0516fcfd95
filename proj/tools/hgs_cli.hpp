#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgs/enumerate.hpp"
#include "hgs/family_spec.hpp"
#include "hgs/json_io.hpp"
#include "hgs/spectral.hpp"
#include "hgs/structure.hpp"
#include "hgs/verify.hpp"

namespace hgs::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, budget = 3 };

struct CliConfig {
  double tol = 1e-12;
  std::size_t max_iter = 200'000;
  std::string format = "csv";
  std::string out;
  std::optional<double> eq_tol;
  std::optional<double> margin;
  std::optional<std::uint64_t> max_subsets;
};

namespace detail {

inline std::map<std::string, std::size_t> key_values(const std::vector<std::string>& tokens,
                                                     const std::vector<std::string>& allowed) {
  std::map<std::string, std::size_t> out;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + t + "'");
    const auto key = t.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::ParseError, "unknown parameter '" + key + "'");
    }
    if (out.count(key)) throw Error(ErrorKind::ParseError, "parameter '" + key + "' given twice");
    out[key] = hgs::detail::parse_count(key, std::string_view(t).substr(eq + 1));
  }
  for (const auto& key : allowed)
    if (!out.count(key)) throw Error(ErrorKind::ParseError, "missing parameter '" + key + "'");
  return out;
}

// "3", "2..4" or "3,5" -> sorted list
inline std::vector<std::size_t> parse_range(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(hgs::detail::parse_count(key, part));
      continue;
    }
    const auto lo = hgs::detail::parse_count(key, std::string_view(part).substr(0, dots));
    const auto hi = hgs::detail::parse_count(key, std::string_view(part).substr(dots + 2));
    if (hi < lo) throw Error(ErrorKind::ParseError, "empty range '" + part + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty value for '" + key + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void apply_grid(VerifyConfig& cfg, const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "grid entries look like k=3 or g=2..4");
    const auto key = t.substr(0, eq);
    const auto values = parse_range(key, t.substr(eq + 1));
    if (key == "k") {
      cfg.ks = values;
      cfg.filter.k = values;
    } else if (key == "g") {
      cfg.gs = values;
      cfg.filter.g = values;
    } else if (key == "s") {
      cfg.ss = values;
      cfg.filter.s = values;
    } else {
      throw Error(ErrorKind::ParseError, "grid key must be k, g or s, got '" + key + "'");
    }
  }
}

inline Hypergraph load_input(const std::string& input) {
  if (std::filesystem::exists(input)) return read_hypergraph_file(input);
  if (input.find(':') == std::string::npos) throw Error(ErrorKind::ParseError, "no such file: '" + input + "'");
  return build_family(input);
}

}  // namespace detail

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Spectral radius toolkit for uniform hypergraphs", "hgs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", cfg_.tol, "residual tolerance for the power iteration")->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg_.max_iter, "iteration cap")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg_.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg_.out, "write output to this path instead of stdout");

    std::string spec;
    auto* build = app.add_subcommand("build", "write a named family instance as hypergraph JSON");
    build->add_option("spec", spec, "family spec, e.g. cycle:g=3,k=3")->required();

    std::string input;
    bool oracle = false;
    bool eigenvector = false;
    auto* spectrum = app.add_subcommand("spectrum", "spectral radius of a hypergraph file or family spec");
    spectrum->add_option("input", input, "JSON file or family spec")->required();
    spectrum->add_flag("--oracle", oracle, "cross-check against the dense Jacobi eigensolver");
    spectrum->add_flag("--eigenvector", eigenvector, "print the principal eigenvector");

    std::string kind;
    std::vector<std::string> formula_params;
    auto* formula = app.add_subcommand("formula", "closed-form spectral radius");
    formula->add_option("kind", kind, "power or cycle")->required()->check(CLI::IsMember({"power", "cycle"}));
    formula->add_option("params", formula_params, "k=.. [d=..]");

    std::vector<std::string> enum_params;
    bool labeled = false;
    auto* enumerate = app.add_subcommand("enumerate", "all connected unicyclic k-uniform hypergraphs on n vertices");
    enumerate->add_option("params", enum_params, "n=.. k=..")->required();
    enumerate->add_flag("--labeled", labeled, "one row per labeled graph instead of per isomorphism class");
    enumerate->add_option("--max-subsets", cfg_.max_subsets, "enumeration budget in candidate edge subsets");

    std::vector<std::string> grid;
    bool no_timings = false;
    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--grid", grid, "restrict parameters, e.g. k=3 g=2..4 s=0..2");
    verify->add_flag("--no-timings", no_timings, "write 0 in the runtime column");
    verify->add_option("--eq-tol", cfg_.eq_tol, "tolerance for equalities")->check(CLI::PositiveNumber);
    verify->add_option("--margin", cfg_.margin, "smallest margin accepted as strict")->check(CLI::PositiveNumber);
    verify->add_option("--max-subsets", cfg_.max_subsets, "enumeration budget in candidate edge subsets");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return ok;
    } catch (const CLI::ParseError& ex) {
      err_ << "error: " << ex.what() << "\n";
      return usage;
    }

    try {
      if (*build) return cmd_build(spec);
      if (*spectrum) return cmd_spectrum(input, oracle, eigenvector);
      if (*formula) return cmd_formula(kind, formula_params);
      if (*enumerate) return cmd_enumerate(enum_params, labeled);
      return cmd_verify(grid, no_timings);
    } catch (const Error& ex) {
      err_ << "error: " << ex.what() << "\n";
      switch (ex.kind()) {
        case ErrorKind::SearchBudgetExceeded: return budget;
        case ErrorKind::NotConverged: return failure;
        default: return usage;
      }
    } catch (const std::exception& ex) {
      err_ << "error: " << ex.what() << "\n";
      return failure;
    }
  }

 private:
  SpectralOptions spectral() const { return {cfg_.tol, cfg_.max_iter}; }

  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + cfg_.out + "'");
    file << text;
  }

  int cmd_build(const std::string& spec) {
    emit(hypergraph_to_json(build_family(spec)) + "\n");
    return ok;
  }

  int cmd_spectrum(const std::string& input, bool oracle, bool eigenvector) {
    const auto g = detail::load_input(input);
    const auto r = spectral_radius(g, spectral());
    std::optional<double> oracle_rho;
    if (oracle) oracle_rho = max_modulus(oracle_spectrum(adjacency_matrix(g)));
    const double gap = oracle_rho ? std::abs(*oracle_rho - r.rho) : 0.0;

    std::string text;
    if (cfg_.format == "json") {
      text = spectrum_to_json(r);
      text.pop_back();
      text += ", \"connected\": ";
      text += r.connected ? "true" : "false";
      if (oracle_rho) text += ", \"oracle_rho\": " + format_double(*oracle_rho) + ", \"discrepancy\": " + format_double(gap);
      text += "}\n";
    } else {
      text = "rho,residual,iterations,converged,connected";
      if (oracle_rho) text += ",oracle_rho,discrepancy";
      text += "\n" + format_double(r.rho) + "," + format_double(r.residual) + "," + std::to_string(r.iterations) +
              "," + (r.converged ? "true" : "false") + "," + (r.connected ? "true" : "false");
      if (oracle_rho) text += "," + format_double(*oracle_rho) + "," + format_double(gap);
      text += "\n";
      if (eigenvector) {
        text += "\nvertex,entry\n";
        for (std::size_t v = 0; v < r.eigenvector.size(); ++v)
          text += std::to_string(v) + "," + format_double(r.eigenvector[v]) + "\n";
      }
    }
    emit(text);
    if (!r.connected) err_ << "warning: input is disconnected; reporting the largest component root\n";
    if (!r.converged) {
      err_ << "error: NotConverged: residual " << format_double(r.residual) << " after " << r.iterations
           << " iterations\n";
      return failure;
    }
    if (oracle_rho && gap > 1e-8) {
      err_ << "error: oracle discrepancy " << format_double(gap) << " exceeds 1e-8\n";
      return failure;
    }
    return ok;
  }

  int cmd_formula(const std::string& kind, const std::vector<std::string>& params) {
    double value = 0.0;
    if (kind == "power") {
      const auto kv = detail::key_values(params, {"k", "d"});
      value = regular_power_radius(kv.at("k"), kv.at("d"));
    } else {
      const auto kv = detail::key_values(params, {"k"});
      value = hypercycle_radius(kv.at("k"));
    }
    emit(format_double(value) + "\n");
    return ok;
  }

  int cmd_enumerate(const std::vector<std::string>& params, bool labeled) {
    const auto kv = detail::key_values(params, {"n", "k"});
    const auto n = kv.at("n");
    const auto k = kv.at("k");
    EnumerationLimits limits;
    if (cfg_.max_subsets) limits.max_candidate_subsets = *cfg_.max_subsets;
    limits.canonical.max_vertices = std::max(limits.canonical.max_vertices, n);

    struct Row {
      std::string key;
      double rho;
      std::optional<std::size_t> girth;
    };
    std::vector<Row> rows;
    auto add = [&](const Hypergraph& g, std::string key) {
      const auto r = spectral_radius(g, spectral());
      if (!r.converged) throw Error(ErrorKind::NotConverged, "enumerated graph did not converge");
      rows.push_back({std::move(key), r.rho, girth(g)});
    };
    if (labeled) {
      for_each_unicyclic(n, k, [&](const Hypergraph& g) { add(g, hgs::detail::compact(g)); }, limits);
    } else {
      for (const auto& c : unicyclic_classes(n, k, limits)) add(c.representative, c.key.to_string());
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.rho < b.rho; });

    std::string text;
    if (cfg_.format == "json") {
      text = "[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        text += (i ? ",\n " : "\n ") + std::string("{\"key\": ") + hgs::detail::json_string(rows[i].key) +
                ", \"rho\": " + format_double(rows[i].rho) +
                ", \"girth\": " + (rows[i].girth ? std::to_string(*rows[i].girth) : "null") + "}";
      }
      text += rows.empty() ? "]\n" : "\n]\n";
    } else {
      text = "key,rho,girth\n";
      for (const auto& r : rows)
        text += r.key + "," + format_double(r.rho) + "," + (r.girth ? std::to_string(*r.girth) : "") + "\n";
    }
    emit(text);
    return ok;
  }

  int cmd_verify(const std::vector<std::string>& grid, bool no_timings) {
    VerifyConfig cfg;
    cfg.spectral = spectral();
    if (cfg_.eq_tol) cfg.eq_tol = *cfg_.eq_tol;
    if (cfg_.margin) cfg.strict_margin = *cfg_.margin;
    if (cfg_.max_subsets) cfg.enumeration_limits.max_candidate_subsets = *cfg_.max_subsets;
    detail::apply_grid(cfg, grid);
    const auto report = run_all(cfg);
    emit(cfg_.format == "json" ? report_json(report, !no_timings) : report_csv(report, !no_timings));
    const auto s = report.summary();
    err_ << "cases " << s.total << ": pass " << s.pass << ", fail " << s.fail << ", indistinguishable "
         << s.indistinguishable << ", skipped " << s.skipped << "\n";
    return report.ok() ? ok : failure;
  }

  std::ostream& out_;
  std::ostream& err_;
  CliConfig cfg_;
};

/// argv-style entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return App(out, err).run(args);
}

}  // namespace hgs::cli

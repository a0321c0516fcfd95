#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/spectral.hpp"

namespace hgs {

/// 17 significant digits, the fixed numeric format of every output.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string hypergraph_to_json(const Hypergraph& g) {
  std::string out = "{\"n\": " + std::to_string(g.num_vertices()) + ", \"edges\": [";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i) out += ", ";
    out += "[";
    const auto& e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(e[j]);
    }
    out += "]";
  }
  return out + "]}";
}

inline Hypergraph hypergraph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::ParseError, std::string("hypergraph JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_unsigned() ||
      !doc["edges"].is_array()) {
    throw Error(ErrorKind::ParseError, R"(hypergraph JSON must look like {"n": <int>, "edges": [[ids...], ...]})");
  }
  for (const auto& [key, _] : doc.items())
    if (key != "n" && key != "edges") throw Error(ErrorKind::ParseError, "unknown hypergraph field '" + key + "'");
  std::vector<std::vector<Vertex>> lists;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array()) throw Error(ErrorKind::ParseError, "each edge must be an array of vertex ids");
    std::vector<Vertex> ids;
    for (const auto& v : e) {
      if (!v.is_number_unsigned()) throw Error(ErrorKind::ParseError, "vertex ids must be non-negative integers");
      ids.push_back(v.get<Vertex>());
    }
    lists.push_back(std::move(ids));
  }
  return new_hypergraph(doc["n"].get<std::size_t>(), lists);
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return hypergraph_from_json(buf.str());
}

inline std::string spectrum_to_json(const SpectrumResult& r) {
  std::string out = "{\"rho\": " + format_double(r.rho) + ", \"eigenvector\": [";
  for (std::size_t i = 0; i < r.eigenvector.size(); ++i) {
    if (i) out += ", ";
    out += format_double(r.eigenvector[i]);
  }
  out += "], \"residual\": " + format_double(r.residual);
  out += ", \"iterations\": " + std::to_string(r.iterations);
  out += ", \"converged\": ";
  out += r.converged ? "true" : "false";
  return out + "}";
}

inline SpectrumResult spectrum_from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    SpectrumResult r;
    r.rho = doc.at("rho").get<double>();
    r.eigenvector = doc.at("eigenvector").get<std::vector<double>>();
    r.residual = doc.at("residual").get<double>();
    r.iterations = doc.at("iterations").get<std::size_t>();
    r.converged = doc.at("converged").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("spectrum JSON: ") + ex.what());
  }
}

}  // namespace hgs

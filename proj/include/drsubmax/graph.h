// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Weighted undirected graphs read from edge lists, and per-step induced
// subgraphs on uniformly random vertex subsets.
//
// Edge-list format: one edge per line, "i j" (weight 1) or "i j w", 0-based
// vertex ids, '#' starts a comment. Self-loops are dropped.

#ifndef DRSUBMAX_GRAPH_H_
#define DRSUBMAX_GRAPH_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "drsubmax/numeric.h"
#include "drsubmax/rng.h"

namespace drsubmax {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphData {
  int vertex_count = 0;
  std::vector<Edge> edges;
  bool weighted = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline GraphData ParseEdgeList(std::istream& in, const std::string& source = "<stream>") {
  GraphData g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(source, line_no, "expected \"i j\" or \"i j w\"");
    }
    Edge e;
    try {
      std::size_t used = 0;
      const long long u = std::stoll(tokens[0], &used);
      if (used != tokens[0].size()) throw std::invalid_argument("u");
      const long long v = std::stoll(tokens[1], &used);
      if (used != tokens[1].size()) throw std::invalid_argument("v");
      if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX) {
        throw ParseError(source, line_no, "vertex id out of range");
      }
      e.u = static_cast<int>(u);
      e.v = static_cast<int>(v);
      if (tokens.size() == 3) {
        e.weight = std::stod(tokens[2], &used);
        if (used != tokens[2].size()) throw std::invalid_argument("w");
        g.weighted = true;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(source, line_no, "malformed number");
    }
    if (!(e.weight >= 0.0)) throw ParseError(source, line_no, "negative weight");
    g.vertex_count = std::max({g.vertex_count, e.u + 1, e.v + 1});
    if (e.u != e.v) g.edges.push_back(e);
  }
  return g;
}

inline GraphData LoadEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path);
  return ParseEdgeList(in, path);
}

// Erdos-Renyi style graph with `edges` distinct random edges and weights
// uniform in [0,1] (or 1 when unweighted).
inline GraphData RandomGraph(int vertices, int edges, bool weighted, std::uint64_t seed) {
  if (vertices < 2) throw UsageError("random graph needs at least 2 vertices");
  const long long max_edges = static_cast<long long>(vertices) * (vertices - 1) / 2;
  if (edges < 0 || edges > max_edges) throw UsageError("too many edges requested");
  Rng rng(DeriveSeed(seed, "random-graph"));
  GraphData g;
  g.vertex_count = vertices;
  g.weighted = weighted;
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(static_cast<std::size_t>(edges) * 2);
  while (static_cast<int>(g.edges.size()) < edges) {
    int u = static_cast<int>(rng.Index(vertices));
    int v = static_cast<int>(rng.Index(vertices));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    const std::uint64_t key = static_cast<std::uint64_t>(u) * vertices + v;
    if (!taken.insert(key).second) continue;
    g.edges.push_back({u, v, weighted ? rng.Uniform() : 1.0});
  }
  return g;
}

struct Subgraph {
  std::vector<int> vertices;  // sorted
  GraphData graph;            // same vertex ids, only edges inside `vertices`
};

// Induced subgraph on a uniformly random vertex subset of the given size.
inline Subgraph SubsampleStep(const GraphData& graph, int size, Rng& rng) {
  if (size < 0 || size > graph.vertex_count) {
    throw UsageError("subsample size " + std::to_string(size) + " exceeds " +
                     std::to_string(graph.vertex_count) + " vertices");
  }
  // Partial Fisher-Yates.
  std::vector<int> ids(graph.vertex_count);
  for (int i = 0; i < graph.vertex_count; ++i) ids[i] = i;
  for (int i = 0; i < size; ++i) {
    const int j = i + static_cast<int>(rng.Index(graph.vertex_count - i));
    std::swap(ids[i], ids[j]);
  }
  Subgraph out;
  out.vertices.assign(ids.begin(), ids.begin() + size);
  std::sort(out.vertices.begin(), out.vertices.end());
  std::vector<bool> keep(graph.vertex_count, false);
  for (int v : out.vertices) keep[v] = true;
  out.graph.vertex_count = graph.vertex_count;
  out.graph.weighted = graph.weighted;
  for (const Edge& e : graph.edges) {
    if (keep[e.u] && keep[e.v]) out.graph.edges.push_back(e);
  }
  return out;
}

}  // namespace drsubmax

#endif  // DRSUBMAX_GRAPH_H_

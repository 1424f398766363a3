// Copyright 2026 The mixedgraph Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mixedgraph {

enum class EdgeKind { Unoriented, Oriented };

// For Oriented edges `u` is the head and `v` the tail (arrow u -> v).
struct EdgeRecord {
  std::size_t id = 0;
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeKind kind = EdgeKind::Unoriented;

  bool oriented() const { return kind == EdgeKind::Oriented; }
  bool touches(std::size_t w) const { return u == w || v == w; }
  // The endpoint that is not `w`; `w` must be an endpoint.
  std::size_t other(std::size_t w) const { return w == u ? v : u; }
};

struct EdgeSpec {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeKind kind = EdgeKind::Unoriented;
};

// Simple mixed graph on vertices 0..n-1. Immutable after construction.
class MixedGraph {
 public:
  MixedGraph() = default;
  // Edge ids follow the order of `edges`. Throws std::invalid_argument on a
  // self-loop, an out-of-range endpoint or a repeated vertex pair. Labels
  // default to the decimal vertex indices.
  MixedGraph(std::size_t n, const std::vector<EdgeSpec>& edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(std::size_t id) const { return edges_.at(id); }
  // Edge ids incident to `v`, ascending.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> vertex_of(std::string_view label) const;

  // Connected components of the underlying graph, each sorted ascending,
  // ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> connected_components() const;

  // Induced subgraph on `keep` (vertices renumbered in the given order).
  MixedGraph induced(const std::vector<std::size_t>& keep) const;

  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::size_t n_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::string> labels_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses `<u> <v> <D|U>` lines; blank lines and `#` comments are skipped.
// Vertex labels are interned in first-appearance order.
MixedGraph parse_graph(std::string_view text);

// Inverse of parse_graph using the graph's labels.
std::string format_graph(const MixedGraph& g);

// (vertex subset, edge subset) of a host graph. Edges may dangle: one or both
// endpoints may lie outside `verts`. Both lists are kept sorted ascending.
class Substructure {
 public:
  Substructure(const MixedGraph& host, std::vector<std::size_t> verts, std::vector<std::size_t> edge_ids);

  const MixedGraph& host() const { return *host_; }
  const std::vector<std::size_t>& verts() const { return verts_; }
  const std::vector<std::size_t>& edge_ids() const { return edge_ids_; }
  bool contains_vertex(std::size_t v) const;
  bool is_square() const { return verts_.size() == edge_ids_.size(); }

 private:
  const MixedGraph* host_;
  std::vector<std::size_t> verts_;
  std::vector<std::size_t> edge_ids_;
};

// Cycle v0 v1 ... v_{k-1} with edges[j] joining vertices[j] and vertices[j+1 mod k].
struct Cycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// A tree on the present vertices plus exactly one edge leaving to an absent
// vertex (the root).
struct RootlessTree {
  std::vector<std::size_t> verts;
  std::vector<std::size_t> full_edges;
  std::size_t dangling_edge = 0;
  std::size_t root = 0;
  // Oriented edges directed away from the root.
  std::size_t alpha = 0;
  // Unoriented edges (including the dangling one).
  std::size_t c_unoriented = 0;
  friend bool operator==(const RootlessTree&, const RootlessTree&) = default;
};

struct Unicyclic {
  std::vector<std::size_t> verts;
  std::vector<std::size_t> edges;
  Cycle cycle;
  friend bool operator==(const Unicyclic&, const Unicyclic&) = default;
};

struct Irregular {
  std::vector<std::size_t> verts;
  std::vector<std::size_t> edges;
  friend bool operator==(const Irregular&, const Irregular&) = default;
};

using ComponentShape = std::variant<RootlessTree, Unicyclic, Irregular>;

// Splits `sub` into connected pieces over its present vertices and classifies
// each. A dangling edge belongs to the piece of its present endpoint; an edge
// with no present endpoint forms its own Irregular piece. Pieces are ordered
// by smallest vertex, then edge-only pieces by edge id.
std::vector<ComponentShape> components(const Substructure& sub);

// Unique cycle of a unicyclic piece, traversed from its smallest vertex
// toward the smaller of that vertex's two cycle neighbours.
Cycle find_cycle(const MixedGraph& g, const Unicyclic& comp);

// Same canonical orientation applied to an arbitrary cycle of `g`.
Cycle canonical_cycle(const Cycle& c);

}  // namespace mixedgraph

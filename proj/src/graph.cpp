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

#include "mixedgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace mixedgraph {

MixedGraph::MixedGraph(std::size_t n, const std::vector<EdgeSpec>& edges, std::vector<std::string> labels)
    : n_(n), incident_(n), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n) throw std::invalid_argument("MixedGraph: label count does not match vertex count");
  edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("MixedGraph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("MixedGraph: self-loop at vertex " + labels_[e.u]);
    if (find_edge(e.u, e.v)) {
      throw std::invalid_argument("MixedGraph: duplicate vertex pair " + labels_[e.u] + " " + labels_[e.v]);
    }
    const std::size_t id = edges_.size();
    edges_.push_back({id, e.u, e.v, e.kind});
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

std::optional<std::size_t> MixedGraph::find_edge(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  const auto& small = incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
  for (std::size_t id : small) {
    const EdgeRecord& e = edges_[id];
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return id;
  }
  return std::nullopt;
}

std::optional<std::size_t> MixedGraph::vertex_of(std::string_view label) const {
  for (std::size_t v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> MixedGraph::connected_components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n_, false);
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t id : incident_[comp[k]]) {
        std::size_t w = edges_[id].other(comp[k]);
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

MixedGraph MixedGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> index(n_, n_);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    index.at(keep[k]) = k;
    labels.push_back(labels_[keep[k]]);
  }
  std::vector<EdgeSpec> specs;
  for (const EdgeRecord& e : edges_) {
    if (index[e.u] != n_ && index[e.v] != n_) specs.push_back({index[e.u], index[e.v], e.kind});
  }
  return MixedGraph(keep.size(), specs, std::move(labels));
}

std::vector<EdgeSpec> MixedGraph::edge_specs() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (const EdgeRecord& e : edges_) specs.push_back({e.u, e.v, e.kind});
  return specs;
}

MixedGraph parse_graph(std::string_view text) {
  std::map<std::string, std::size_t, std::less<>> ids;
  std::vector<std::string> labels;
  std::vector<EdgeSpec> specs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_line;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = ids.try_emplace(label, labels.size());
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected '<u> <v> <D|U>', got " + std::to_string(tokens.size()) + " tokens");
    }
    EdgeKind kind;
    if (tokens[2] == "D") {
      kind = EdgeKind::Oriented;
    } else if (tokens[2] == "U") {
      kind = EdgeKind::Unoriented;
    } else {
      throw ParseError(line_no, "unknown edge kind '" + tokens[2] + "'");
    }
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop at vertex " + tokens[0]);
    std::size_t u = intern(tokens[0]);
    std::size_t v = intern(tokens[1]);
    auto key = std::minmax(u, v);
    if (auto [it, fresh] = pair_line.try_emplace({key.first, key.second}, line_no); !fresh) {
      throw ParseError(line_no, "duplicate vertex pair " + tokens[0] + " " + tokens[1] +
                                    " (first on line " + std::to_string(it->second) + ")");
    }
    specs.push_back({u, v, kind});
  }
  const std::size_t n = labels.size();
  return MixedGraph(n, specs, std::move(labels));
}

std::string format_graph(const MixedGraph& g) {
  std::ostringstream os;
  for (const EdgeRecord& e : g.edges()) {
    os << g.label(e.u) << ' ' << g.label(e.v) << ' ' << (e.oriented() ? 'D' : 'U') << '\n';
  }
  return os.str();
}

Substructure::Substructure(const MixedGraph& host, std::vector<std::size_t> verts, std::vector<std::size_t> edge_ids)
    : host_(&host), verts_(std::move(verts)), edge_ids_(std::move(edge_ids)) {
  std::sort(verts_.begin(), verts_.end());
  std::sort(edge_ids_.begin(), edge_ids_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end() ||
      std::adjacent_find(edge_ids_.begin(), edge_ids_.end()) != edge_ids_.end()) {
    throw std::invalid_argument("Substructure: repeated vertex or edge");
  }
  if (!verts_.empty() && verts_.back() >= host.vertex_count()) {
    throw std::invalid_argument("Substructure: vertex not in host");
  }
  if (!edge_ids_.empty() && edge_ids_.back() >= host.edge_count()) {
    throw std::invalid_argument("Substructure: edge not in host");
  }
}

bool Substructure::contains_vertex(std::size_t v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

RootlessTree make_rootless_tree(const MixedGraph& g, std::vector<std::size_t> verts,
                                std::vector<std::size_t> full, std::size_t dangling,
                                const std::vector<bool>& present) {
  RootlessTree t;
  const EdgeRecord& d = g.edge(dangling);
  t.root = present[d.u] ? d.v : d.u;
  t.dangling_edge = dangling;
  auto away = [&](const EdgeRecord& e, std::size_t nearer) { return e.oriented() && e.u == nearer; };
  if (away(d, t.root)) ++t.alpha;
  if (!d.oriented()) ++t.c_unoriented;

  // BFS outward from the vertex adjacent to the root.
  std::vector<bool> in_full(g.edge_count(), false);
  for (std::size_t id : full) in_full[id] = true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<std::size_t> q;
  std::size_t start = d.other(t.root);
  q.push(start);
  seen[start] = true;
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (std::size_t id : g.incident(x)) {
      if (!in_full[id]) continue;
      const EdgeRecord& e = g.edge(id);
      std::size_t y = e.other(x);
      if (seen[y]) continue;
      seen[y] = true;
      if (away(e, x)) ++t.alpha;
      if (!e.oriented()) ++t.c_unoriented;
      q.push(y);
    }
  }
  t.verts = std::move(verts);
  t.full_edges = std::move(full);
  return t;
}

}  // namespace

std::vector<ComponentShape> components(const Substructure& sub) {
  const MixedGraph& g = sub.host();
  const std::size_t n = g.vertex_count();
  std::vector<bool> present(n, false);
  for (std::size_t v : sub.verts()) present[v] = true;

  DisjointSets sets(n);
  for (std::size_t id : sub.edge_ids()) {
    const EdgeRecord& e = g.edge(id);
    if (present[e.u] && present[e.v]) sets.unite(e.u, e.v);
  }

  struct Piece {
    std::vector<std::size_t> verts, full, dangling;
  };
  std::map<std::size_t, Piece> pieces;  // keyed by smallest vertex
  for (std::size_t v : sub.verts()) pieces[sets.find(v)].verts.push_back(v);

  std::vector<ComponentShape> out;
  std::vector<ComponentShape> orphan_edges;
  for (std::size_t id : sub.edge_ids()) {
    const EdgeRecord& e = g.edge(id);
    if (present[e.u] && present[e.v]) {
      pieces[sets.find(e.u)].full.push_back(id);
    } else if (present[e.u] || present[e.v]) {
      pieces[sets.find(present[e.u] ? e.u : e.v)].dangling.push_back(id);
    } else {
      orphan_edges.push_back(Irregular{{}, {id}});
    }
  }

  for (auto& [key, p] : pieces) {
    const std::size_t nv = p.verts.size();
    if (p.full.size() + 1 == nv && p.dangling.size() == 1) {
      out.push_back(make_rootless_tree(g, std::move(p.verts), std::move(p.full), p.dangling.front(), present));
    } else if (p.full.size() == nv && p.dangling.empty()) {
      Unicyclic u{std::move(p.verts), std::move(p.full), {}};
      u.cycle = find_cycle(g, u);
      out.push_back(std::move(u));
    } else {
      std::vector<std::size_t> edges = p.full;
      edges.insert(edges.end(), p.dangling.begin(), p.dangling.end());
      std::sort(edges.begin(), edges.end());
      out.push_back(Irregular{std::move(p.verts), std::move(edges)});
    }
  }
  out.insert(out.end(), orphan_edges.begin(), orphan_edges.end());
  return out;
}

Cycle find_cycle(const MixedGraph& g, const Unicyclic& comp) {
  std::map<std::size_t, std::vector<std::size_t>> adj;  // vertex -> incident comp edges
  for (std::size_t id : comp.edges) {
    adj[g.edge(id).u].push_back(id);
    adj[g.edge(id).v].push_back(id);
  }
  std::map<std::size_t, std::size_t> deg;
  for (const auto& [v, ids] : adj) deg[v] = ids.size();
  std::vector<bool> removed(g.edge_count(), false);
  std::vector<std::size_t> leaves;
  for (const auto& [v, d] : deg)
    if (d == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    std::size_t x = leaves.back();
    leaves.pop_back();
    for (std::size_t id : adj[x]) {
      if (removed[id]) continue;
      removed[id] = true;
      --deg[x];
      std::size_t y = g.edge(id).other(x);
      if (--deg[y] == 1) leaves.push_back(y);
    }
  }

  std::size_t start = g.vertex_count();
  for (const auto& [v, d] : deg) {
    if (d >= 2) {
      start = v;
      break;
    }
  }
  if (start == g.vertex_count()) throw std::logic_error("find_cycle: component has no cycle");

  Cycle c;
  std::size_t prev_edge = g.edge_count();
  std::size_t x = start;
  do {
    std::size_t next_edge = g.edge_count();
    for (std::size_t id : adj[x]) {
      if (!removed[id] && id != prev_edge) {
        next_edge = id;
        break;
      }
    }
    c.vertices.push_back(x);
    c.edges.push_back(next_edge);
    prev_edge = next_edge;
    x = g.edge(next_edge).other(x);
  } while (x != start);
  return canonical_cycle(c);
}

Cycle canonical_cycle(const Cycle& c) {
  const std::size_t k = c.vertices.size();
  if (k < 3 || c.edges.size() != k) throw std::invalid_argument("canonical_cycle: not a cycle");
  std::size_t s = static_cast<std::size_t>(std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  std::size_t next = c.vertices[(s + 1) % k];
  std::size_t prev = c.vertices[(s + k - 1) % k];
  Cycle out;
  if (next < prev) {
    for (std::size_t j = 0; j < k; ++j) {
      out.vertices.push_back(c.vertices[(s + j) % k]);
      out.edges.push_back(c.edges[(s + j) % k]);
    }
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      out.vertices.push_back(c.vertices[(s + k - j) % k]);
      out.edges.push_back(c.edges[(s + 2 * k - j - 1) % k]);
    }
  }
  return out;
}

}  // namespace mixedgraph

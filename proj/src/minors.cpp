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

#include "mixedgraph/minors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

#include "mixedgraph/cycles.hpp"
#include "mixedgraph/kernels.hpp"

namespace mixedgraph {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;  // (vertex, edge id)

GaussianInt entry(const EdgeRecord& e, std::size_t v, Incidence which, const OrientationMap& orient) {
  return which == Incidence::S ? quasi_incidence_entry(e, v) : incidence_entry(e, orient, v);
}

// BFS outward from `seeds` over `allowed` edges; each newly reached vertex is
// paired with the edge it was reached through.
void pair_outward(const MixedGraph& g, const std::vector<std::size_t>& seeds,
                  const std::vector<std::size_t>& allowed, std::vector<Pair>& out) {
  std::vector<std::uint8_t> ok(g.edge_count(), 0);
  for (std::size_t id : allowed) ok[id] = 1;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::queue<std::size_t> q;
  for (std::size_t s : seeds) {
    seen[s] = 1;
    q.push(s);
  }
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop();
    for (std::size_t id : g.incident(x)) {
      if (!ok[id]) continue;
      const std::size_t y = g.edge(id).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      out.emplace_back(y, id);
      q.push(y);
    }
  }
}

std::vector<Pair> rootless_tree_pairs(const MixedGraph& g, const RootlessTree& t) {
  const std::size_t first = g.edge(t.dangling_edge).other(t.root);
  std::vector<Pair> pairs{{first, t.dangling_edge}};
  pair_outward(g, {first}, t.full_edges, pairs);
  return pairs;
}

// Pendant-tree pairs of a unicyclic piece (cycle pairs excluded).
std::vector<Pair> pendant_pairs(const MixedGraph& g, const Unicyclic& u) {
  std::vector<std::size_t> off_cycle;
  for (std::size_t id : u.edges)
    if (std::find(u.cycle.edges.begin(), u.cycle.edges.end(), id) == u.cycle.edges.end()) off_cycle.push_back(id);
  std::vector<Pair> pairs;
  pair_outward(g, u.cycle.vertices, off_cycle, pairs);
  return pairs;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<std::uint8_t> seen(perm.size(), 0);
  std::size_t parity = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    parity += len - 1;
  }
  return parity % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> sorted_unique(std::span<const std::size_t> xs, std::size_t bound, const char* what) {
  std::vector<std::size_t> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument(std::string(what) + ": repeated vertex");
  }
  if (!v.empty() && v.back() >= bound) throw std::invalid_argument(std::string(what) + ": vertex out of range");
  return v;
}

SquareSubstructureEval evaluate_square(const Substructure& sub, const GMatrix& s_full, const GMatrix& t_full) {
  if (!sub.is_square()) throw std::invalid_argument("square_substructure_eval: substructure is not square");
  SquareSubstructureEval ev{sub, components(sub), false, false, 0, 0, 0, 0, {}, {}};
  const MixedGraph& g = sub.host();
  ev.is_sss = ev.is_ssss = true;
  for (const ComponentShape& shape : ev.shapes) {
    if (std::holds_alternative<Irregular>(shape)) {
      ev.is_sss = ev.is_ssss = false;
    } else if (const auto* u = std::get_if<Unicyclic>(&shape)) {
      const CycleTypes types = classify_cycle(cycle_profile(g, u->cycle));
      ev.x += types.s == CycleTypeS::I;
      ev.y += types.s == CycleTypeS::II;
      ev.p += types.t == CycleTypeT::I;
      ev.q += types.t == CycleTypeT::IV;
      if (types.s == CycleTypeS::III) ev.is_sss = false;
      if (types.t == CycleTypeT::V) ev.is_ssss = false;
    }
  }
  ev.det_s = determinant(submatrix(s_full, sub.verts(), sub.edge_ids()));
  ev.det_t = determinant(submatrix(t_full, sub.verts(), sub.edge_ids()));
  const BigInt want_s = ev.is_sss ? pow2(ev.x + 2 * ev.y) : BigInt(0);
  const BigInt want_t = ev.is_ssss ? pow2(ev.p + 2 * ev.q) : BigInt(0);
  if (ev.det_s.norm_sq() != want_s || ev.det_t.norm_sq() != want_t) {
    throw std::logic_error("square_substructure_eval: |det|^2 (" + ev.det_s.norm_sq().str() + ", " +
                           ev.det_t.norm_sq().str() + ") disagrees with closed form (" + want_s.str() + ", " +
                           want_t.str() + ")");
  }
  return ev;
}

template <class Fn>
void for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  std::vector<std::size_t> chosen(k);
  do {
    for (std::size_t j = 0; j < k; ++j) chosen[j] = pool[idx[j]];
    fn(chosen);
  } while (next_combination(idx, pool.size()));
}

}  // namespace

GaussianInt rootless_tree_det(const MixedGraph& g, const RootlessTree& tree, Incidence which,
                              const OrientationMap& orient) {
  if (which == Incidence::S) return GaussianInt::unit_power(3 * static_cast<std::int64_t>(tree.alpha));

  const std::vector<Pair> pairs = rootless_tree_pairs(g, tree);
  std::vector<std::size_t> rows, cols;
  bool heads_toward_root = true;
  for (const auto& [v, id] : pairs) {
    rows.push_back(v);
    cols.push_back(id);
    const EdgeRecord& e = g.edge(id);
    // v is the endpoint farther from the root
    if (!e.oriented() && orient.head(e) == v) heads_toward_root = false;
  }
  const GaussianInt det = determinant(submatrix(incidence(g, orient), rows, cols));
  if (det.norm_sq() != 1) throw std::logic_error("rootless_tree_det: |det T| != 1");
  GaussianInt closed = GaussianInt::unit_power(static_cast<std::int64_t>(tree.alpha));
  if (tree.c_unoriented % 2 == 1) closed = -closed;
  if (heads_toward_root ? det != closed : (det != closed && det != -closed)) {
    throw std::logic_error("rootless_tree_det: T determinant " + det.to_string() +
                           " does not match (-1)^c i^alpha = " + closed.to_string());
  }
  return det;
}

GaussianInt closed_form_det(const Substructure& sub, Incidence which, const OrientationMap& orient) {
  if (!sub.is_square()) throw std::invalid_argument("closed_form_det: substructure is not square");
  const MixedGraph& g = sub.host();
  std::vector<Pair> pairs;
  GaussianInt value = 1;
  for (const ComponentShape& shape : components(sub)) {
    if (std::holds_alternative<Irregular>(shape)) return 0;
    if (const auto* t = std::get_if<RootlessTree>(&shape)) {
      for (const Pair& pr : rootless_tree_pairs(g, *t)) {
        value *= entry(g.edge(pr.second), pr.first, which, orient);
        pairs.push_back(pr);
      }
      continue;
    }
    const auto& u = std::get<Unicyclic>(shape);
    const std::size_t k = u.cycle.vertices.size();
    GaussianInt diag = 1, off = 1;
    for (std::size_t j = 0; j < k; ++j) {
      const EdgeRecord& e = g.edge(u.cycle.edges[j]);
      diag *= entry(e, u.cycle.vertices[j], which, orient);
      off *= entry(e, u.cycle.vertices[(j + 1) % k], which, orient);
      pairs.emplace_back(u.cycle.vertices[j], u.cycle.edges[j]);
    }
    value *= (k % 2 == 1) ? diag + off : diag - off;
    for (const Pair& pr : pendant_pairs(g, u)) {
      value *= entry(g.edge(pr.second), pr.first, which, orient);
      pairs.push_back(pr);
    }
  }
  if (value.is_zero()) return value;

  std::vector<std::size_t> perm(pairs.size());
  for (const auto& [v, id] : pairs) {
    const auto row = std::lower_bound(sub.verts().begin(), sub.verts().end(), v) - sub.verts().begin();
    const auto col = std::lower_bound(sub.edge_ids().begin(), sub.edge_ids().end(), id) - sub.edge_ids().begin();
    perm[static_cast<std::size_t>(row)] = static_cast<std::size_t>(col);
  }
  return permutation_sign(perm) == 1 ? value : -value;
}

SquareSubstructureEval square_substructure_eval(const Substructure& sub, const OrientationMap& orient) {
  const MixedGraph& g = sub.host();
  return evaluate_square(sub, quasi_incidence(g), incidence(g, orient));
}

SquareSubstructureEval square_substructure_eval(const Substructure& sub) {
  return square_substructure_eval(sub, OrientationMap::canonical(sub.host()));
}

void for_each_square_substructure(const MixedGraph& g, std::span<const std::size_t> w,
                                  const std::function<void(const Substructure&)>& fn) {
  const std::vector<std::size_t> verts = sorted_unique(w, g.vertex_count(), "for_each_square_substructure");
  std::vector<std::size_t> all(g.edge_count());
  for (std::size_t id = 0; id < all.size(); ++id) all[id] = id;
  for_each_subset(all, verts.size(), [&](const std::vector<std::size_t>& f) { fn(Substructure(g, verts, f)); });
}

std::vector<Substructure> square_substructures(const MixedGraph& g, std::span<const std::size_t> w) {
  std::vector<Substructure> out;
  for_each_square_substructure(g, w, [&](const Substructure& s) { out.push_back(s); });
  return out;
}

MinorReport principal_minor(const MixedGraph& g, std::span<const std::size_t> w, Laplacian which,
                            MinorMethod method) {
  MinorReport rep;
  rep.which = which;
  rep.rows = rep.cols = sorted_unique(w, g.vertex_count(), "principal_minor");
  if (method != MinorMethod::Combinatorial) {
    rep.direct = determinant(submatrix(laplacian(g, which), rep.rows, rep.cols));
  }
  if (method == MinorMethod::Direct) return rep;

  const TermHistogram h = principal_histogram_parallel(g, rep.rows);
  rep.combinatorial = GaussianInt(TermHistogram::weighted_sum(which == Laplacian::Q ? h.s : h.t), 0);
  if (method == MinorMethod::Combinatorial) return rep;

  const GMatrix s_full = quasi_incidence(g);
  const GMatrix t_full = incidence(g, OrientationMap::canonical(g));
  GaussianInt logged = 0;
  for_each_subset(edges_touching(g, rep.rows), rep.rows.size(), [&](const std::vector<std::size_t>& f) {
    SquareSubstructureEval ev = evaluate_square(Substructure(g, rep.rows, f), s_full, t_full);
    const bool counts = which == Laplacian::Q ? ev.is_sss : ev.is_ssss;
    if (!counts) return;
    const unsigned exponent = which == Laplacian::Q ? ev.x + 2 * ev.y : ev.p + 2 * ev.q;
    const GaussianInt& d = which == Laplacian::Q ? ev.det_s : ev.det_t;
    TermRecord term{ev.sub, pow2(exponent), GaussianInt(pow2(exponent), 0), d * d.conj(), std::nullopt, 0};
    if (*term.oracle_term != term.closed_form_term) {
      throw std::logic_error("principal_minor: term value disagrees with elimination");
    }
    logged += term.closed_form_term;
    rep.terms.push_back(std::move(term));
  });
  if (logged != *rep.combinatorial || *rep.direct != *rep.combinatorial) {
    throw std::logic_error("principal_minor: direct " + rep.direct->to_string() + ", combinatorial " +
                           rep.combinatorial->to_string() + ", term log " + logged.to_string());
  }
  return rep;
}

namespace {

struct DecomposeContext {
  const MixedGraph& g;
  Incidence which;
  std::vector<std::uint8_t> in_a, in_b;
};

GeneralizedMatching decompose(const DecomposeContext& ctx, const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b, const std::vector<std::size_t>& f) {
  const MixedGraph& g = ctx.g;
  GeneralizedMatching gm{a, b, f, {}, {}, 0, 0};
  std::vector<std::size_t> present;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(present));
  auto is_present = [&](std::size_t v) { return ctx.in_a[v] || ctx.in_b[v]; };

  const Substructure whole(g, present, f);
  // Group by connectivity over present vertices; reuse components() for the
  // grouping and reclassify bridging pieces below.
  std::map<std::size_t, std::size_t> piece_of;  // vertex -> piece index
  std::vector<std::vector<std::size_t>> piece_verts, piece_full, piece_dangling;
  {
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::size_t v : present) parent[v] = v;
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t id : f) {
      const EdgeRecord& e = g.edge(id);
      if (is_present(e.u) && is_present(e.v)) {
        std::size_t x = find(e.u), y = find(e.v);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::map<std::size_t, std::size_t> index;
    for (std::size_t v : present) {
      auto [it, fresh] = index.try_emplace(find(v), piece_verts.size());
      if (fresh) {
        piece_verts.emplace_back();
        piece_full.emplace_back();
        piece_dangling.emplace_back();
      }
      piece_verts[it->second].push_back(v);
      piece_of[v] = it->second;
    }
    for (std::size_t id : f) {
      const EdgeRecord& e = g.edge(id);
      if (is_present(e.u) && is_present(e.v)) {
        piece_full[piece_of[e.u]].push_back(id);
      } else if (is_present(e.u) || is_present(e.v)) {
        piece_dangling[piece_of[is_present(e.u) ? e.u : e.v]].push_back(id);
      } else {
        throw std::logic_error("generalized matching: edge misses A u B");
      }
    }
  }

  for (std::size_t k = 0; k < piece_verts.size(); ++k) {
    std::vector<std::size_t> a_ends, b_ends;
    for (std::size_t v : piece_verts[k]) {
      if (ctx.in_a[v] && !ctx.in_b[v]) a_ends.push_back(v);
      if (ctx.in_b[v] && !ctx.in_a[v]) b_ends.push_back(v);
    }
    if (a_ends.empty() && b_ends.empty()) {
      std::vector<std::size_t> edges = piece_full[k];
      edges.insert(edges.end(), piece_dangling[k].begin(), piece_dangling[k].end());
      const std::vector<ComponentShape> shapes = components(Substructure(g, piece_verts[k], edges));
      if (shapes.size() != 1 || std::holds_alternative<Irregular>(shapes.front())) {
        throw std::logic_error("generalized matching: common piece is not a rootless tree or unicyclic");
      }
      if (const auto* u = std::get_if<Unicyclic>(&shapes.front())) {
        const CycleTypes types = classify_cycle(cycle_profile(g, u->cycle));
        if (ctx.which == Incidence::S) {
          if (types.s == CycleTypeS::III) throw std::logic_error("generalized matching: type III common cycle");
          gm.x += types.s == CycleTypeS::I;
          gm.y += types.s == CycleTypeS::II;
        } else {
          if (types.t == CycleTypeT::V) throw std::logic_error("generalized matching: type V common cycle");
          gm.x += types.t == CycleTypeT::I;
          gm.y += types.t == CycleTypeT::IV;
        }
      }
      gm.common_components.push_back(shapes.front());
      continue;
    }
    if (a_ends.size() != 1 || b_ends.size() != 1 || !piece_dangling[k].empty() ||
        piece_full[k].size() + 1 != piece_verts[k].size()) {
      throw std::logic_error("generalized matching: bridging piece is not a tree joining A\\B to B\\A");
    }
    BridgeTree tree;
    tree.verts = piece_verts[k];
    tree.edges = piece_full[k];
    tree.a_end = a_ends.front();
    tree.b_end = b_ends.front();
    std::vector<Pair> reached;
    pair_outward(g, {tree.a_end}, tree.edges, reached);
    std::map<std::size_t, std::size_t> via;  // vertex -> edge toward a_end
    for (const auto& [v, id] : reached) via[v] = id;
    std::vector<std::size_t> rev_vertices{tree.b_end}, rev_edges;
    for (std::size_t x = tree.b_end; x != tree.a_end;) {
      const std::size_t id = via.at(x);
      rev_edges.push_back(id);
      x = g.edge(id).other(x);
      rev_vertices.push_back(x);
    }
    tree.path_vertices.assign(rev_vertices.rbegin(), rev_vertices.rend());
    tree.path_edges.assign(rev_edges.rbegin(), rev_edges.rend());
    for (std::size_t j = 0; j < tree.path_edges.size(); ++j) {
      const EdgeRecord& e = g.edge(tree.path_edges[j]);
      if (!e.oriented()) continue;
      if (e.u == tree.path_vertices[j]) {
        ++tree.away_from_a;
      } else {
        ++tree.away_from_b;
      }
    }
    gm.trees.push_back(std::move(tree));
  }
  return gm;
}

}  // namespace

void for_each_generalized_matching(const MixedGraph& g, std::span<const std::size_t> a_in,
                                   std::span<const std::size_t> b_in, Incidence which,
                                   const OrientationMap& orient, NonsingularityCheck check,
                                   const std::function<void(const GeneralizedMatching&)>& fn) {
  const std::vector<std::size_t> a = sorted_unique(a_in, g.vertex_count(), "generalized matching");
  const std::vector<std::size_t> b = sorted_unique(b_in, g.vertex_count(), "generalized matching");
  if (a.size() != b.size()) throw std::invalid_argument("generalized matching: |A| != |B|");

  DecomposeContext ctx{g, which, std::vector<std::uint8_t>(g.vertex_count(), 0),
                       std::vector<std::uint8_t>(g.vertex_count(), 0)};
  for (std::size_t v : a) ctx.in_a[v] = 1;
  for (std::size_t v : b) ctx.in_b[v] = 1;

  // An edge missing A (or B) is a zero column of M[A,F] (or M[B,F]).
  std::vector<std::size_t> pool;
  for (const EdgeRecord& e : g.edges()) {
    if ((ctx.in_a[e.u] || ctx.in_a[e.v]) && (ctx.in_b[e.u] || ctx.in_b[e.v])) pool.push_back(e.id);
  }

  const GMatrix m = check == NonsingularityCheck::Oracle ? incidence_matrix(g, which, orient) : GMatrix();
  SquareKernel kernel(g);
  for_each_subset(pool, a.size(), [&](const std::vector<std::size_t>& f) {
    bool nonsingular = false;
    if (check == NonsingularityCheck::Oracle) {
      nonsingular = !determinant(submatrix(m, a, f)).is_zero() && !determinant(submatrix(m, b, f)).is_zero();
    } else {
      const SquareKernel::Result ra = kernel.evaluate(ctx.in_a, a, f);
      if (!(which == Incidence::S ? ra.sss : ra.ssss)) return;
      const SquareKernel::Result rb = kernel.evaluate(ctx.in_b, b, f);
      nonsingular = which == Incidence::S ? rb.sss : rb.ssss;
    }
    if (nonsingular) fn(decompose(ctx, a, b, f));
  });
}

std::vector<GeneralizedMatching> generalized_matchings(const MixedGraph& g, std::span<const std::size_t> a,
                                                       std::span<const std::size_t> b, Incidence which,
                                                       NonsingularityCheck check) {
  std::vector<GeneralizedMatching> out;
  for_each_generalized_matching(g, a, b, which, OrientationMap::canonical(g), check,
                                [&](const GeneralizedMatching& gm) { out.push_back(gm); });
  return out;
}

MinorReport nonprincipal_minor(const MixedGraph& g, std::span<const std::size_t> a, std::span<const std::size_t> b,
                               Laplacian which, MinorMethod method) {
  MinorReport rep;
  rep.which = which;
  rep.rows = sorted_unique(a, g.vertex_count(), "nonprincipal_minor");
  rep.cols = sorted_unique(b, g.vertex_count(), "nonprincipal_minor");
  if (rep.rows.size() != rep.cols.size()) throw std::invalid_argument("nonprincipal_minor: |A| != |B|");
  if (method != MinorMethod::Combinatorial) {
    rep.direct = determinant(submatrix(laplacian(g, which), rep.rows, rep.cols));
  }
  if (method == MinorMethod::Direct) return rep;

  const Incidence inc = incidence_for(which);
  const OrientationMap orient = OrientationMap::canonical(g);
  const GMatrix m = method == MinorMethod::Both ? incidence_matrix(g, inc, orient) : GMatrix();
  std::vector<std::size_t> both;
  std::set_union(rep.rows.begin(), rep.rows.end(), rep.cols.begin(), rep.cols.end(), std::back_inserter(both));

  GaussianInt sum = 0;
  GaussianInt literal = 0;
  for_each_generalized_matching(
      g, rep.rows, rep.cols, inc, orient, NonsingularityCheck::Combinatorial, [&](const GeneralizedMatching& gm) {
        const GaussianInt det_a = closed_form_det(Substructure(g, gm.a_set, gm.edges), inc, orient);
        const GaussianInt det_b = closed_form_det(Substructure(g, gm.b_set, gm.edges), inc, orient);
        TermRecord term{Substructure(g, both, gm.edges), pow2(gm.x + 2 * gm.y), det_a * det_b.conj(),
                        std::nullopt, std::nullopt, 0};
        if (term.closed_form_term.norm_sq() != term.closed_form_modulus * term.closed_form_modulus) {
          throw std::logic_error("nonprincipal_minor: term modulus differs from 2^(x+2y)");
        }
        for (const BridgeTree& t : gm.trees) term.tree_exponent += t.exponent();
        // literal phases: i^{b-a} for Q, i^{a-b} for L
        const std::int64_t literal_exp = which == Laplacian::Q ? -term.tree_exponent : term.tree_exponent;
        term.literal_term = GaussianInt::unit_power(literal_exp) * GaussianInt(term.closed_form_modulus, 0);
        if (method == MinorMethod::Both) {
          term.oracle_term =
              determinant(submatrix(m, gm.a_set, gm.edges)) * determinant(submatrix(m, gm.b_set, gm.edges)).conj();
          if (*term.oracle_term != term.closed_form_term) {
            throw std::logic_error("nonprincipal_minor: closed-form term " + term.closed_form_term.to_string() +
                                   " differs from elimination " + term.oracle_term->to_string());
          }
        }
        sum += term.closed_form_term;
        literal += *term.literal_term;
        rep.terms.push_back(std::move(term));
      });
  rep.combinatorial = sum;
  rep.literal_sum = literal;
  if (method == MinorMethod::Both && *rep.direct != sum) {
    throw std::logic_error("nonprincipal_minor: direct " + rep.direct->to_string() + " != combinatorial " +
                           sum.to_string());
  }
  return rep;
}

BigInt spanning_tree_count(const MixedGraph& g) {
  if (g.vertex_count() == 0) return 0;
  return determinant(delete_row_col(underlying_laplacian(g), 0, 0)).re();
}

GaussianInt cofactor(const MixedGraph& g, Laplacian which, std::size_t i, std::size_t j) {
  const GaussianInt minor = determinant(delete_row_col(laplacian(g, which), i, j));
  return (i + j) % 2 == 0 ? minor : -minor;
}

GMatrix cofactor_matrix(const MixedGraph& g, Laplacian which) {
  const GMatrix m = laplacian(g, which);
  GMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const GaussianInt minor = determinant(delete_row_col(m, i, j));
      c(i, j) = (i + j) % 2 == 0 ? minor : -minor;
    }
  }
  return c;
}

}  // namespace mixedgraph

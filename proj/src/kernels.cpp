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

#include "mixedgraph/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mixedgraph {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    r = r * (n - k + j) / j;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> idx;
  idx.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t c = next; c < n; ++c) {
      const std::uint64_t block = binomial(n - c - 1, k - slot - 1);
      if (rank < block) {
        idx.push_back(c);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  if (idx.size() != k) throw std::out_of_range("unrank_combination: rank out of range");
  return idx;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t j = k;
  while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
  if (j == 0) return false;
  ++idx[j - 1];
  for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  return true;
}

SquareKernel::SquareKernel(const MixedGraph& g)
    : g_(&g),
      parent_(g.vertex_count()),
      nverts_(g.vertex_count()),
      nfull_(g.vertex_count()),
      ndangling_(g.vertex_count()),
      deg_(g.vertex_count()),
      cyclic_(g.vertex_count()),
      live_(g.edge_count()) {}

std::size_t SquareKernel::find(std::size_t v) {
  while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
  return v;
}

SquareKernel::Result SquareKernel::evaluate(std::span<const std::uint8_t> present,
                                            std::span<const std::size_t> verts,
                                            std::span<const std::size_t> edges) {
  Result r;
  for (std::size_t v : verts) {
    parent_[v] = v;
    nverts_[v] = nfull_[v] = ndangling_[v] = deg_[v] = 0;
    cyclic_[v] = 0;
  }
  for (std::size_t id : edges) {
    const EdgeRecord& e = g_->edge(id);
    if (!present[e.u] && !present[e.v]) return r;
    if (present[e.u] && present[e.v]) {
      std::size_t a = find(e.u), b = find(e.v);
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t v : verts) ++nverts_[find(v)];
  for (std::size_t id : edges) {
    const EdgeRecord& e = g_->edge(id);
    if (present[e.u] && present[e.v]) {
      ++nfull_[find(e.u)];
      ++deg_[e.u];
      ++deg_[e.v];
    } else {
      ++ndangling_[find(present[e.u] ? e.u : e.v)];
    }
  }
  bool any_cycle = false;
  for (std::size_t v : verts) {
    if (find(v) != v) continue;
    if (nfull_[v] + 1 == nverts_[v] && ndangling_[v] == 1) continue;
    if (nfull_[v] == nverts_[v] && ndangling_[v] == 0) {
      cyclic_[v] = 1;
      any_cycle = true;
      continue;
    }
    return r;
  }
  r.sss = r.ssss = true;
  if (!any_cycle) return r;

  // Peel leaves off the unicyclic pieces; the surviving full edges are the cycles.
  for (std::size_t id : edges) {
    const EdgeRecord& e = g_->edge(id);
    live_[id] = present[e.u] && present[e.v] && cyclic_[find(e.u)];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t id : edges) {
      if (!live_[id]) continue;
      const EdgeRecord& e = g_->edge(id);
      if (deg_[e.u] == 1 || deg_[e.v] == 1) {
        live_[id] = 0;
        --deg_[e.u];
        --deg_[e.v];
        changed = true;
      }
    }
  }

  for (std::size_t v : verts) {
    const std::size_t root = find(v);
    if (!cyclic_[root] || cyclic_[root] == 2 || deg_[v] != 2) continue;
    cyclic_[root] = 2;  // cycle of this piece handled
    long long signed_dir = 0;
    std::size_t oriented = 0, unoriented = 0;
    std::size_t prev = g_->edge_count();
    std::size_t x = v;
    do {
      std::size_t step = prev;
      for (std::size_t id : edges) {
        if (live_[id] && id != prev && g_->edge(id).touches(x)) {
          step = id;
          break;
        }
      }
      const EdgeRecord& e = g_->edge(step);
      if (!e.oriented()) {
        ++unoriented;
      } else {
        ++oriented;
        signed_dir += e.u == x ? 1 : -1;
      }
      prev = step;
      x = e.other(x);
    } while (x != v);

    if (oriented % 2 == 1) {
      ++r.x;
      ++r.p;
      continue;
    }
    const std::size_t half = static_cast<std::size_t>(signed_dir < 0 ? -signed_dir : signed_dir) / 2;
    if ((half + unoriented) % 2 == 1) {
      ++r.y;
    } else {
      r.sss = false;
    }
    if (half % 2 == 1) {
      ++r.q;
    } else {
      r.ssss = false;
    }
  }
  return r;
}

void TermHistogram::merge(const TermHistogram& other) {
  if (s.size() < other.s.size()) s.resize(other.s.size());
  if (t.size() < other.t.size()) t.resize(other.t.size());
  for (std::size_t k = 0; k < other.s.size(); ++k) s[k] += other.s[k];
  for (std::size_t k = 0; k < other.t.size(); ++k) t[k] += other.t[k];
}

BigInt TermHistogram::weighted_sum(const std::vector<std::uint64_t>& counts) {
  BigInt total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) total += BigInt(counts[k]) << static_cast<unsigned>(k);
  }
  return total;
}

std::vector<std::size_t> edges_touching(const MixedGraph& g, std::span<const std::size_t> verts) {
  std::vector<std::uint8_t> in(g.vertex_count(), 0);
  for (std::size_t v : verts) in.at(v) = 1;
  std::vector<std::size_t> pool;
  for (const EdgeRecord& e : g.edges())
    if (in[e.u] || in[e.v]) pool.push_back(e.id);
  return pool;
}

namespace {

struct PrincipalScan {
  const MixedGraph& g;
  std::vector<std::size_t> verts;
  std::vector<std::uint8_t> present;
  std::vector<std::size_t> pool;

  PrincipalScan(const MixedGraph& graph, std::span<const std::size_t> w)
      : g(graph), verts(w.begin(), w.end()), present(graph.vertex_count(), 0), pool(edges_touching(graph, w)) {
    for (std::size_t v : verts) present[v] = 1;
  }

  std::uint64_t total() const { return binomial(pool.size(), verts.size()); }

  // Scans ranks [begin, end) of the pool's |W|-subsets.
  void scan(std::uint64_t begin, std::uint64_t end, TermHistogram& out) const {
    if (begin >= end) return;
    const std::size_t k = verts.size();
    SquareKernel kernel(g);
    std::vector<std::size_t> idx = unrank_combination(pool.size(), k, begin);
    std::vector<std::size_t> chosen(k);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      for (std::size_t j = 0; j < k; ++j) chosen[j] = pool[idx[j]];
      const SquareKernel::Result r = kernel.evaluate(present, verts, chosen);
      if (r.sss) {
        const std::size_t e = r.x + 2 * r.y;
        if (out.s.size() <= e) out.s.resize(e + 1);
        ++out.s[e];
      }
      if (r.ssss) {
        const std::size_t e = r.p + 2 * r.q;
        if (out.t.size() <= e) out.t.resize(e + 1);
        ++out.t[e];
      }
      if (rank + 1 < end) next_combination(idx, pool.size());
    }
  }
};

}  // namespace

TermHistogram principal_histogram_serial(const MixedGraph& g, std::span<const std::size_t> w) {
  PrincipalScan scan(g, w);
  TermHistogram h;
  scan.scan(0, scan.total(), h);
  return h;
}

TermHistogram principal_histogram_parallel(const MixedGraph& g, std::span<const std::size_t> w) {
  const PrincipalScan scan(g, w);
  const std::uint64_t total = scan.total();
  TermHistogram h;
#ifdef _OPENMP
  const std::uint64_t chunk = 4096;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
#pragma omp parallel
  {
    TermHistogram local;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      scan.scan(begin, std::min(total, begin + chunk), local);
    }
#pragma omp critical(mixedgraph_histogram_merge)
    h.merge(local);
  }
#else
  scan.scan(0, total, h);
#endif
  return h;
}

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mixedgraph

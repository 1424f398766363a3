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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mixedgraph/gaussian.hpp"
#include "mixedgraph/gmatrix.hpp"
#include "mixedgraph/graph.hpp"
#include "mixedgraph/matrices.hpp"

namespace mixedgraph {

inline Incidence incidence_for(Laplacian which) { return which == Laplacian::Q ? Incidence::S : Incidence::T; }

// Determinant of the rootless tree's incidence block with each present
// vertex paired to its edge toward the root (leaf-elimination order).
// S: (-i)^alpha. T: the actual block determinant, checked to have modulus 1
// and to equal (-1)^c i^alpha (exactly when every newly oriented edge points
// its head toward the root, up to sign otherwise); std::logic_error if not.
GaussianInt rootless_tree_det(const MixedGraph& g, const RootlessTree& tree, Incidence which,
                              const OrientationMap& orient);

// Determinant of the square block sub.verts x sub.edge_ids (rows and columns
// ascending) assembled from per-piece closed forms: rootless trees and the
// pendant trees of unicyclic pieces contribute one incidence entry per
// vertex, a cycle v0..v_{k-1} contributes prod t(v_j, e_j) + (-1)^{k-1}
// prod t(v_{j+1}, e_j), and the row-to-column pairing contributes its sign.
// Never builds the matrix.
GaussianInt closed_form_det(const Substructure& sub, Incidence which, const OrientationMap& orient);

struct SquareSubstructureEval {
  Substructure sub;
  std::vector<ComponentShape> shapes;
  bool is_sss = false;
  bool is_ssss = false;
  unsigned x = 0, y = 0;  // unicyclic pieces of type I / type II
  unsigned p = 0, q = 0;  // unicyclic pieces of type I / type IV
  GaussianInt det_s;      // S[verts, edges]
  GaussianInt det_t;      // T[verts, edges] under the given orientation
};

// Classifies and evaluates a square substructure. The determinants are
// computed by elimination; |det_s|^2 = 2^{x+2y} (SSS) or 0, and likewise
// |det_t|^2 = 2^{p+2q} (SSSS) or 0, are checked (std::logic_error).
// Throws std::invalid_argument if sub is not square.
SquareSubstructureEval square_substructure_eval(const Substructure& sub, const OrientationMap& orient);
SquareSubstructureEval square_substructure_eval(const Substructure& sub);

// Calls fn(W, F) for every F with |F| = |W| in lexicographic order.
void for_each_square_substructure(const MixedGraph& g, std::span<const std::size_t> w,
                                  const std::function<void(const Substructure&)>& fn);
std::vector<Substructure> square_substructures(const MixedGraph& g, std::span<const std::size_t> w);

enum class MinorMethod { Direct, Combinatorial, Both };

struct TermRecord {
  Substructure sub;                       // (W, F) or (A u B, F)
  BigInt closed_form_modulus;             // 2^{x+2y} or 2^{p+2q}
  GaussianInt closed_form_term;           // combinatorial value of this term
  std::optional<GaussianInt> oracle_term; // det M[A,F] * conj(det M[B,F]) by elimination
  std::optional<GaussianInt> literal_term;  // i^{sum(b-a)} (Q) or i^{sum(a-b)} (L), times the modulus
  std::int64_t tree_exponent = 0;         // sum over bridge trees of (a - b)
};

struct MinorReport {
  Laplacian which = Laplacian::Q;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::optional<GaussianInt> direct;
  std::optional<GaussianInt> combinatorial;
  // Sum of literal_term over all terms (non-principal only).
  std::optional<GaussianInt> literal_sum;
  std::vector<TermRecord> terms;
};

// det M[W] with M = Q_H or L_H, rows and columns ascending. The
// combinatorial value is the sum of 2^{x+2y} over SSS (Q) or 2^{p+2q} over
// SSSS (L) on W, evaluated by the parallel kernel. Both also builds the term
// log with per-term elimination values and throws std::logic_error if
// anything disagrees.
MinorReport principal_minor(const MixedGraph& g, std::span<const std::size_t> w, Laplacian which,
                            MinorMethod method);

struct BridgeTree {
  std::vector<std::size_t> verts;
  std::vector<std::size_t> edges;
  std::size_t a_end = 0;  // the vertex in A \ B
  std::size_t b_end = 0;  // the vertex in B \ A
  std::vector<std::size_t> path_vertices;  // a_end ... b_end
  std::vector<std::size_t> path_edges;
  std::size_t away_from_a = 0;  // oriented path edges pointing from the a_end side
  std::size_t away_from_b = 0;
  std::int64_t exponent() const {
    return static_cast<std::int64_t>(away_from_a) - static_cast<std::int64_t>(away_from_b);
  }
};

struct GeneralizedMatching {
  std::vector<std::size_t> a_set;
  std::vector<std::size_t> b_set;
  std::vector<std::size_t> edges;
  std::vector<BridgeTree> trees;
  std::vector<ComponentShape> common_components;
  unsigned x = 0;  // unicyclic common pieces of type I
  unsigned y = 0;  // of type II (S) or type IV (T)
};

enum class NonsingularityCheck { Oracle, Combinatorial };

// Every F with |F| = |A| for which M[A,F] and M[B,F] are both nonsingular,
// decomposed into common pieces inside A n B and bridge trees. Throws
// std::logic_error if a matching does not decompose that way.
void for_each_generalized_matching(const MixedGraph& g, std::span<const std::size_t> a,
                                   std::span<const std::size_t> b, Incidence which,
                                   const OrientationMap& orient, NonsingularityCheck check,
                                   const std::function<void(const GeneralizedMatching&)>& fn);
std::vector<GeneralizedMatching> generalized_matchings(const MixedGraph& g, std::span<const std::size_t> a,
                                                       std::span<const std::size_t> b, Incidence which,
                                                       NonsingularityCheck check = NonsingularityCheck::Oracle);

// det M[A,B], rows A and columns B ascending. The combinatorial value sums
// closed_form_det(A,F) * conj(closed_form_det(B,F)) over generalized
// matchings; the literal phase (i^{sum(b-a)} for Q, i^{sum(a-b)} for L) times
// 2^{x+2y} is logged per term and
// summed into literal_sum. Throws std::invalid_argument if |A| != |B| and
// std::logic_error on any internal disagreement.
MinorReport nonprincipal_minor(const MixedGraph& g, std::span<const std::size_t> a,
                               std::span<const std::size_t> b, Laplacian which, MinorMethod method);

// Spanning trees of the underlying graph (0 for the empty graph).
BigInt spanning_tree_count(const MixedGraph& g);

// (-1)^{i+j} det of M with row i and column j removed.
GaussianInt cofactor(const MixedGraph& g, Laplacian which, std::size_t i, std::size_t j);

// All n^2 cofactors, row-major.
GMatrix cofactor_matrix(const MixedGraph& g, Laplacian which);

}  // namespace mixedgraph

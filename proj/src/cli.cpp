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

#include "mixedgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mixedgraph/cycles.hpp"
#include "mixedgraph/gmatrix.hpp"
#include "mixedgraph/kernels.hpp"
#include "mixedgraph/matrices.hpp"
#include "mixedgraph/minors.hpp"
#include "mixedgraph/quapartite.hpp"

namespace mixedgraph::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_vertex_set(const MixedGraph& g, const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    const auto v = g.vertex_of(item);
    if (!v) throw UsageError("unknown vertex label '" + item + "'");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw UsageError("repeated vertex in '" + text + "'");
  return out;
}

json labels_json(const MixedGraph& g, const std::vector<std::size_t>& verts) {
  json a = json::array();
  for (std::size_t v : verts) a.push_back(g.label(v));
  return a;
}

json edge_json(const MixedGraph& g, std::size_t id) {
  const EdgeRecord& e = g.edge(id);
  return json::array({g.label(e.u), g.label(e.v), e.oriented() ? "D" : "U"});
}

json edges_json(const MixedGraph& g, const std::vector<std::size_t>& ids) {
  json a = json::array();
  for (std::size_t id : ids) a.push_back(edge_json(g, id));
  return a;
}

std::string edge_text(const MixedGraph& g, std::size_t id) {
  const EdgeRecord& e = g.edge(id);
  return g.label(e.u) + (e.oriented() ? "->" : "--") + g.label(e.v);
}

std::string join_labels(const MixedGraph& g, const std::vector<std::size_t>& verts) {
  std::string s;
  for (std::size_t v : verts) s += (s.empty() ? "" : ",") + g.label(v);
  return "{" + s + "}";
}

GMatrix named_matrix(const MixedGraph& g, const std::string& kind) {
  if (kind == "H") return hermitian_adjacency(g);
  if (kind == "D") return degree_matrix(g);
  if (kind == "L") return hermitian_laplacian(g);
  if (kind == "Q") return quasi_laplacian(g);
  if (kind == "S") return quasi_incidence(g);
  return incidence(g, OrientationMap::canonical(g));
}

json report_json(const MixedGraph& g, const MinorReport& rep) {
  json j;
  j["matrix"] = rep.which == Laplacian::Q ? "Q" : "L";
  j["rows"] = labels_json(g, rep.rows);
  j["cols"] = labels_json(g, rep.cols);
  j["direct"] = rep.direct ? to_json(*rep.direct) : json(nullptr);
  j["combinatorial"] = rep.combinatorial ? to_json(*rep.combinatorial) : json(nullptr);
  if (rep.literal_sum) j["literal_sum"] = to_json(*rep.literal_sum);
  json terms = json::array();
  for (const TermRecord& t : rep.terms) {
    json r;
    r["verts"] = labels_json(g, t.sub.verts());
    r["edges"] = edges_json(g, t.sub.edge_ids());
    r["closed_form_modulus"] = to_json(GaussianInt(t.closed_form_modulus, 0))[0];
    r["term"] = to_json(t.closed_form_term);
    if (t.oracle_term) r["oracle_term"] = to_json(*t.oracle_term);
    if (t.literal_term) {
      r["literal_term"] = to_json(*t.literal_term);
      r["tree_exponent"] = t.tree_exponent;
    }
    terms.push_back(std::move(r));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string flags_text(const EquivalenceFlags& f) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  return std::string("quapartite=") + b(f.quapartite) + " all_cycles_type_III=" + b(f.all_cycles_type_iii) +
         " det_Q_zero=" + b(f.det_q_zero) + " all_cycles_type_V=" + b(f.all_cycles_type_v) +
         " det_L_zero=" + b(f.det_l_zero);
}

json flags_json(const EquivalenceFlags& f) {
  json j;
  j["quapartite"] = f.quapartite;
  j["all_cycles_type_III"] = f.all_cycles_type_iii;
  j["det_Q_zero"] = f.det_q_zero;
  j["all_cycles_type_V"] = f.all_cycles_type_v;
  j["det_L_zero"] = f.det_l_zero;
  return j;
}

json equivalence_json(const MixedGraph& g, const EquivalenceReport& rep) {
  json j = flags_json(rep.whole);
  json comps = json::array();
  for (const ComponentEquivalence& c : rep.components) {
    json r;
    r["verts"] = labels_json(g, c.verts);
    r["flags"] = flags_json(c.flags);
    r["holds"] = c.holds();
    comps.push_back(std::move(r));
  }
  j["components"] = std::move(comps);
  j["equivalences_hold"] = rep.equivalences_hold();
  return j;
}

// Collects named checks; an exception inside a check is a failure.
class CheckLog {
 public:
  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    json r;
    r["name"] = name;
    try {
      const std::string detail = fn();
      r["ok"] = detail.empty();
      r["detail"] = detail.empty() ? "ok" : detail;
    } catch (const std::exception& e) {
      r["ok"] = false;
      r["detail"] = std::string("exception: ") + e.what();
    }
    ok_ = ok_ && r["ok"].get<bool>();
    checks_.push_back(std::move(r));
  }
  void note(const std::string& name, bool holds, const std::string& detail) {
    json r;
    r["name"] = name;
    r["holds"] = holds;
    r["detail"] = detail;
    notes_.push_back(std::move(r));
  }
  bool ok() const { return ok_; }
  json checks() const { return checks_; }
  json notes() const { return notes_; }

 private:
  bool ok_ = true;
  json checks_ = json::array();
  json notes_ = json::array();
};

std::vector<std::vector<std::size_t>> principal_sets(std::size_t n, const VerifyOptions& opts) {
  std::vector<std::vector<std::size_t>> sets;
  if (n <= 7) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> w;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) w.push_back(v);
      sets.push_back(std::move(w));
    }
    return sets;
  }
  std::mt19937_64 rng(opts.seed);
  sets.emplace_back();
  sets.emplace_back();
  for (std::size_t v = 0; v < n; ++v) sets.back().push_back(v);
  for (std::size_t k = 0; k < opts.sampled_subsets; ++k) {
    std::vector<std::size_t> w;
    for (std::size_t v = 0; v < n; ++v)
      if (rng() & 1) w.push_back(v);
    sets.push_back(std::move(w));
  }
  return sets;
}

}  // namespace

VerifyResult verify_graph(const MixedGraph& g, const VerifyOptions& opts) {
  const std::size_t n = g.vertex_count();
  CheckLog log;
  BigInt tau = 0;

  log.check("S S* = Q", [&] {
    return mul_conj_transpose(quasi_incidence(g)) == quasi_laplacian(g) ? "" : "product differs from Q";
  });
  log.check("T T* = L", [&] {
    const OrientationMap canonical = OrientationMap::canonical(g);
    if (!(mul_conj_transpose(incidence(g, canonical)) == hermitian_laplacian(g))) return "product differs from L";
    for (const EdgeRecord& e : g.edges()) {
      if (e.oriented()) continue;
      const OrientationMap flipped = canonical.flipped(g, e.id);
      if (!(mul_conj_transpose(incidence(g, flipped)) == hermitian_laplacian(g))) {
        return "product differs from L after reorienting an unoriented edge";
      }
    }
    return "";
  });

  const auto sets = principal_sets(n, opts);
  log.check("principal minors (" + std::to_string(sets.size()) + " vertex sets)", [&]() -> std::string {
    for (const auto& w : sets) {
      for (Laplacian which : {Laplacian::Q, Laplacian::L}) {
        const MinorReport rep = principal_minor(g, w, which, MinorMethod::Both);
        if (!rep.direct->is_real() || rep.direct->re() < 0) {
          return "negative or non-real principal minor on " + join_labels(g, w);
        }
      }
    }
    return "";
  });

  if (n >= 2) {
    log.check("non-principal minors (" + std::to_string(opts.nonprincipal_samples) + " samples)",
              [&]() -> std::string {
                std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
                std::vector<std::size_t> perm(n);
                for (std::size_t s = 0; s < opts.nonprincipal_samples; ++s) {
                  const std::size_t k = 1 + rng() % std::min<std::size_t>(3, n - 1);
                  for (std::size_t v = 0; v < n; ++v) perm[v] = v;
                  std::shuffle(perm.begin(), perm.end(), rng);
                  std::vector<std::size_t> a(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
                  std::shuffle(perm.begin(), perm.end(), rng);
                  std::vector<std::size_t> b(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
                  for (Laplacian which : {Laplacian::Q, Laplacian::L}) nonprincipal_minor(g, a, b, which, MinorMethod::Both);
                }
                return "";
              });
  }

  EquivalenceReport equiv;
  log.check("equivalence report", [&]() -> std::string {
    equiv = equivalence_report(g);
    null_labeling(g, Laplacian::Q);
    null_labeling(g, Laplacian::L);
    return equiv.equivalences_hold() ? "" : "structure and singularity disagree";
  });

  log.check("spanning tree count", [&]() -> std::string {
    tau = spanning_tree_count(g);
    for (std::size_t v = 1; v < n; ++v) {
      if (determinant(delete_row_col(underlying_laplacian(g), v, v)).re() != tau) {
        return "count depends on the deleted vertex";
      }
    }
    return "";
  });

  if (equiv.whole.quapartite) {
    log.check("quapartite: every Q cofactor has modulus tau", [&]() -> std::string {
      const GMatrix c = cofactor_matrix(g, Laplacian::Q);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (c(i, j).norm_sq() != tau * tau) return "cofactor (" + g.label(i) + "," + g.label(j) + ") = " + c(i, j).to_string();
      return "";
    });
  }
  if (equiv.whole.all_cycles_type_v) {
    log.check("all cycles type V: every L cofactor has modulus tau, diagonal = tau", [&]() -> std::string {
      const GMatrix c = cofactor_matrix(g, Laplacian::L);
      bool all_equal = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (c(i, j).norm_sq() != tau * tau) return "cofactor (" + g.label(i) + "," + g.label(j) + ") = " + c(i, j).to_string();
          if (c(i, j) != GaussianInt(tau, 0)) all_equal = false;
        }
        if (c(i, i) != GaussianInt(tau, 0)) return "diagonal cofactor at " + g.label(i) + " = " + c(i, i).to_string();
      }
      log.note("all cycles type V: every L cofactor equals tau", all_equal,
               all_equal ? "all equal" : "off-diagonal cofactors differ from tau by a unit phase");
      return "";
    });
  }
  if (!equiv.whole.quapartite) {
    log.check("vertex-deleted: |det Q(v)| = tau(G) when G-v is quapartite", [&]() -> std::string {
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> keep;
        for (std::size_t u = 0; u < n; ++u)
          if (u != v) keep.push_back(u);
        const MixedGraph minus = g.induced(keep);
        if (!find_quapartition(minus)) continue;
        const GaussianInt c = cofactor(g, Laplacian::Q, v, v);
        const BigInt tau_minus = spanning_tree_count(minus);
        log.note("vertex-deleted at " + g.label(v) + ": compare with tau(G-v)", c.norm_sq() == tau_minus * tau_minus,
                 "|det Q(v)| = " + c.to_string() + ", tau(G-v) = " + tau_minus.str());
        if (c.norm_sq() != tau * tau) return "vertex " + g.label(v) + ": det Q(v) = " + c.to_string();
      }
      return "";
    });
  }

  VerifyResult res;
  res.ok = log.ok();
  json& r = res.report;
  r["vertices"] = n;
  r["edges"] = g.edge_count();
  r["spanning_trees"] = to_json(GaussianInt(tau, 0))[0];
  r["quapartite"] = equiv.whole.quapartite;
  r["equivalence"] = equivalence_json(g, equiv);
  r["checks"] = log.checks();
  r["informational"] = log.notes();
  r["ok"] = res.ok;
  return res;
}

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::string kind = "Q";
  std::string matrix = "Q";
  std::string method = "both";
  std::string rows, cols, verts;
  std::uint64_t seed = VerifyOptions{}.seed;
};

MixedGraph load_graph(const Options& o, std::istream& in) {
  std::stringstream buf;
  if (o.input.empty() || o.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open " + o.input);
    buf << f.rdbuf();
  }
  return parse_graph(buf.str());
}

int cmd_matrix(const MixedGraph& g, const Options& o, std::ostream& out) {
  const GMatrix m = named_matrix(g, o.kind);
  if (o.format == "json") {
    out << to_json(m).dump() << '\n';
  } else {
    out << to_text(m);
  }
  return kExitOk;
}

int cmd_minor(const MixedGraph& g, const Options& o, std::ostream& out) {
  const std::vector<std::size_t> a = parse_vertex_set(g, o.rows);
  const std::vector<std::size_t> b = parse_vertex_set(g, o.cols);
  if (a.size() != b.size()) throw UsageError("--rows and --cols must have the same size");
  const Laplacian which = o.matrix == "Q" ? Laplacian::Q : Laplacian::L;
  const MinorMethod method = o.method == "direct"          ? MinorMethod::Direct
                             : o.method == "combinatorial" ? MinorMethod::Combinatorial
                                                           : MinorMethod::Both;
  const MinorReport rep =
      a == b ? principal_minor(g, a, which, method) : nonprincipal_minor(g, a, b, which, method);
  if (o.format == "json") {
    out << report_json(g, rep).dump(2) << '\n';
    return kExitOk;
  }
  out << "minor " << o.matrix << "[" << join_labels(g, rep.rows) << ", " << join_labels(g, rep.cols) << "]\n";
  if (rep.direct) out << "direct: " << *rep.direct << '\n';
  if (rep.combinatorial) out << "combinatorial: " << *rep.combinatorial << '\n';
  if (rep.literal_sum) out << "literal phase sum: " << *rep.literal_sum << '\n';
  for (const TermRecord& t : rep.terms) {
    out << "  term " << t.closed_form_term << " on " << join_labels(g, t.sub.verts()) << " with";
    for (std::size_t id : t.sub.edge_ids()) out << ' ' << edge_text(g, id);
    out << '\n';
  }
  return kExitOk;
}

int cmd_cycles(const MixedGraph& g, const Options& o, std::ostream& out) {
  json list = json::array();
  for (const Cycle& c : simple_cycles(g)) {
    const CycleProfile p = cycle_profile(g, c);
    const CycleTypes t = classify_cycle(p);
    if (o.format == "json") {
      json r;
      r["vertices"] = labels_json(g, c.vertices);
      r["a"] = p.a;
      r["b"] = p.b;
      r["c"] = p.c;
      r["typeS"] = to_string(t.s);
      r["typeT"] = to_string(t.t);
      list.push_back(std::move(r));
    } else {
      std::string vs;
      for (std::size_t v : c.vertices) vs += (vs.empty() ? "" : " ") + g.label(v);
      out << vs << "  a=" << p.a << " b=" << p.b << " c=" << p.c << " typeS=" << to_string(t.s)
          << " typeT=" << to_string(t.t) << '\n';
    }
  }
  if (o.format == "json") out << list.dump(2) << '\n';
  return kExitOk;
}

int cmd_quapartite(const MixedGraph& g, const Options& o, std::ostream& out) {
  const auto part = find_quapartition(g);
  const EquivalenceReport rep = equivalence_report(g);
  if (o.format == "json") {
    json j;
    if (part) {
      json p = json::object();
      for (std::size_t v = 0; v < g.vertex_count(); ++v) p[g.label(v)] = part->label[v];
      j["partition"] = std::move(p);
    } else {
      j["partition"] = "none";
    }
    j["equivalence"] = equivalence_json(g, rep);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (part) {
    for (int cls = 1; cls <= 4; ++cls) {
      out << "V" << cls << ":";
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (part->label[v] == cls) out << ' ' << g.label(v);
      out << '\n';
    }
  } else {
    out << "none\n";
  }
  out << flags_text(rep.whole) << '\n';
  for (const ComponentEquivalence& c : rep.components) {
    out << "component " << join_labels(g, c.verts) << ": " << flags_text(c.flags) << '\n';
  }
  out << "equivalences hold: " << (rep.equivalences_hold() ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_sss(const MixedGraph& g, const Options& o, std::ostream& out) {
  const std::vector<std::size_t> w = parse_vertex_set(g, o.verts);
  const std::vector<std::size_t> pool = edges_touching(g, w);
  const GMatrix s_full = quasi_incidence(g);
  json list = json::array();
  std::vector<std::size_t> idx(w.size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  if (w.size() <= pool.size()) {
    do {
      std::vector<std::size_t> f;
      for (std::size_t j : idx) f.push_back(pool[j]);
      const SquareSubstructureEval ev = square_substructure_eval(Substructure(g, w, f));
      if (!ev.is_sss && !ev.is_ssss) continue;
      if (o.format == "json") {
        json r;
        r["edges"] = edges_json(g, f);
        r["sss"] = ev.is_sss;
        r["ssss"] = ev.is_ssss;
        r["x"] = ev.x;
        r["y"] = ev.y;
        r["p"] = ev.p;
        r["q"] = ev.q;
        list.push_back(std::move(r));
      } else {
        for (std::size_t id : f) out << edge_text(g, id) << ' ';
        out << " sss=" << ev.is_sss << " ssss=" << ev.is_ssss << " x=" << ev.x << " y=" << ev.y << " p=" << ev.p
            << " q=" << ev.q << '\n';
      }
    } while (next_combination(idx, pool.size()));
  }
  if (o.format == "json") {
    json j;
    j["verts"] = labels_json(g, w);
    j["substructures"] = std::move(list);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_spanning_trees(const MixedGraph& g, const Options& o, std::ostream& out) {
  const BigInt tau = spanning_tree_count(g);
  if (o.format == "json") {
    json j;
    j["spanning_trees"] = to_json(GaussianInt(tau, 0))[0];
    out << j.dump() << '\n';
  } else {
    out << tau.str() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const MixedGraph& g, const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = o.seed;
  const VerifyResult res = verify_graph(g, vo);
  if (o.format == "json") {
    out << res.report.dump(2) << '\n';
  } else {
    for (const auto& c : res.report["checks"]) {
      out << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      if (!c["ok"].get<bool>()) out << ": " << c["detail"].get<std::string>();
      out << '\n';
    }
    for (const auto& nt : res.report["informational"]) {
      out << "note " << nt["name"].get<std::string>() << ": " << nt["detail"].get<std::string>() << '\n';
    }
    out << "quapartite: " << (res.report["quapartite"].get<bool>() ? "true" : "false") << '\n';
    out << (res.ok ? "verify: ok" : "verify: FAILED") << '\n';
  }
  return res.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hermitian Laplacian minors of mixed graphs", "mgraph"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "edge list file (default: standard input)");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* matrix = app.add_subcommand("matrix", "print H, D, L, Q, S or T");
  common(matrix);
  matrix->add_option("--kind", o.kind)->check(CLI::IsMember({"H", "D", "L", "Q", "S", "T"}));
  CLI::App* minor = app.add_subcommand("minor", "determinant of M[A,B] with its term expansion");
  common(minor);
  minor->add_option("--rows", o.rows, "comma-separated vertex labels")->required();
  minor->add_option("--cols", o.cols, "comma-separated vertex labels")->required();
  minor->add_option("--matrix", o.matrix)->check(CLI::IsMember({"L", "Q"}));
  minor->add_option("--method", o.method)->check(CLI::IsMember({"direct", "combinatorial", "both"}));
  CLI::App* cycles = app.add_subcommand("cycles", "simple cycles with profile and type");
  common(cycles);
  CLI::App* quap = app.add_subcommand("quapartite", "four-class partition and singularity report");
  common(quap);
  CLI::App* sss = app.add_subcommand("sss", "square substructures on a vertex set that are SSS or SSSS");
  common(sss);
  sss->add_option("--verts", o.verts, "comma-separated vertex labels")->required();
  CLI::App* trees = app.add_subcommand("spanning-trees", "spanning trees of the underlying graph");
  common(trees);
  CLI::App* verify = app.add_subcommand("verify", "run every invariant check on the graph");
  common(verify);
  verify->add_option("--seed", o.seed, "seed for sampled vertex sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const MixedGraph g = load_graph(o, in);
    if (matrix->parsed()) return cmd_matrix(g, o, out);
    if (minor->parsed()) return cmd_minor(g, o, out);
    if (cycles->parsed()) return cmd_cycles(g, o, out);
    if (quap->parsed()) return cmd_quapartite(g, o, out);
    if (sss->parsed()) return cmd_sss(g, o, out);
    if (trees->parsed()) return cmd_spanning_trees(g, o, out);
    return cmd_verify(g, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace mixedgraph::cli

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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixedgraph/graph.hpp"

namespace mixedgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  std::size_t sampled_subsets = 64;  // principal minors when n > 7
  std::size_t nonprincipal_samples = 16;
};

struct VerifyResult {
  bool ok = true;
  nlohmann::ordered_json report;
};

// Invariant suite for one graph. Never throws on a failed check; failures
// (including internal disagreements) are recorded in the report.
VerifyResult verify_graph(const MixedGraph& g, const VerifyOptions& opts = {});

// args excludes the program name. `in` is read only when --input is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mixedgraph::cli

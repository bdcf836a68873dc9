// Copyright 2026 The MatroidKit Authors.
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

// Deterministic random corpus. Instances are produced as JSON documents, so
// everything the tests and the `fuzz` subcommand use goes through the parser.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "matroidkit/json_io.hpp"

namespace matroidkit {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t max_elements = 10;
  std::size_t max_family = 3;
  std::size_t family_elements = 6;
  std::size_t max_edges = 12;
  int max_depth = 2;
  std::size_t pairs = 0;
  std::size_t families = 0;
  std::size_t graphs = 0;
  // Relative weight per generator kind; a zero weight disables the kind.
  std::map<std::string, unsigned> weights{
      {"uniform", 2}, {"free", 1},    {"zero", 1},     {"graphic", 3},  {"partition", 3},
      {"explicit", 3}, {"dual", 2},   {"sum", 2},      {"restrict", 1}, {"contract", 1},
      {"relabel", 1}};
};

class Fuzzer {
 public:
  explicit Fuzzer(CorpusSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {}

  const CorpusSpec& spec() const { return spec_; }
  /// How often each expression kind has been generated so far.
  const std::map<std::string, int>& coverage() const { return coverage_; }

  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  static std::vector<std::string> names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  /// Random expression whose element labels are exactly `labels`.
  Json matroid(const std::vector<std::string>& labels, int depth) {
    const std::size_t n = labels.size();
    std::vector<std::string> kinds;
    std::vector<unsigned> weights;
    for (const auto& [kind, w] : spec_.weights) {
      const bool composite = kind == "dual" || kind == "sum" || kind == "restrict" ||
                             kind == "contract" || kind == "relabel";
      if (w == 0 || (composite && depth <= 0) || (kind == "sum" && n < 2)) continue;
      kinds.push_back(kind);
      weights.push_back(w);
    }
    if (kinds.empty()) kinds = {"uniform"}, weights = {1};
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const std::string kind = kinds[pick(rng_)];
    ++coverage_[kind];
    if (kind == "uniform") {
      return Json{{"kind", "uniform"}, {"n", n}, {"r", between(0, static_cast<int>(n))},
                  {"labels", labels}};
    }
    if (kind == "free" || kind == "zero") {
      return Json{{"kind", kind}, {"n", n}, {"labels", labels}};
    }
    if (kind == "graphic") return graphic(labels);
    if (kind == "partition") return partition(labels);
    if (kind == "explicit") return binary(labels);
    if (kind == "dual") return Json{{"kind", "dual"}, {"of", matroid(labels, depth - 1)}};
    if (kind == "sum") {
      std::vector<std::string> shuffled = labels;
      std::shuffle(shuffled.begin(), shuffled.end(), rng_);
      const std::size_t cut = 1 + below(n - 1);
      const std::vector<std::string> a(shuffled.begin(), shuffled.begin() + static_cast<long>(cut));
      const std::vector<std::string> b(shuffled.begin() + static_cast<long>(cut), shuffled.end());
      return Json{{"kind", "sum"}, {"parts", {matroid(a, depth - 1), matroid(b, depth - 1)}}};
    }
    if (kind == "restrict" || kind == "contract") {
      const std::size_t extra = 1 + below(3);
      std::vector<std::string> wide = labels;
      const std::vector<std::string> more = names("x" + std::to_string(depth) + "_", extra);
      wide.insert(wide.end(), more.begin(), more.end());
      std::shuffle(wide.begin(), wide.end(), rng_);
      return Json{{"kind", kind},
                  {"of", matroid(wide, depth - 1)},
                  {"set", kind == "restrict" ? labels : more}};
    }
    // relabel
    const std::vector<std::string> inner = names("r" + std::to_string(depth) + "_", n);
    std::vector<std::string> target = labels;
    std::shuffle(target.begin(), target.end(), rng_);
    Json map = Json::object();
    for (std::size_t i = 0; i < n; ++i) map[inner[i]] = target[i];
    return Json{{"kind", "relabel"}, {"of", matroid(inner, depth - 1)}, {"map", std::move(map)}};
  }

  Json matroid(const std::vector<std::string>& labels) {
    return matroid(labels, between(0, spec_.max_depth));
  }

  /// {"m": expr, "n": expr} on a shared label set of random size.
  Json pair() {
    const auto labels = names("e", below(spec_.max_elements + 1));
    return Json{{"m", matroid(labels)}, {"n", matroid(labels)}};
  }

  /// {"members": [...]} with k in 1..max_family.
  Json family() {
    const auto labels = names("e", below(spec_.family_elements + 1));
    const std::size_t k = 1 + below(spec_.max_family);
    Json members = Json::array();
    for (std::size_t i = 0; i < k; ++i) members.push_back(matroid(labels));
    return Json{{"members", std::move(members)}};
  }

  /// {"graph": ..., "demands": ...}: a loopless multigraph with admissible o.
  Json demand_graph() {
    const std::size_t v = 2 + below(6);
    const std::size_t m = below(spec_.max_edges + 1);
    DemandGraph g;
    g.vertices = names("v", v);
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t a = below(v);
      std::size_t b = below(v - 1);
      if (b >= a) ++b;
      g.edges.push_back({a, b, "g" + std::to_string(e)});
    }
    g.demand.assign(v, 0);
    for (std::size_t x = 0; x < v; ++x) {
      const int d = g.degree(x);
      g.demand[x] = between(-d, d);
    }
    ++coverage_["demand_graph"];
    return Json{{"graph", emit_graph(g)}, {"demands", emit_demands(g)}};
  }

 private:
  Json graphic(const std::vector<std::string>& labels) {
    const std::size_t v = 1 + below(std::max<std::size_t>(labels.size(), 2));
    Json edges = Json::array();
    for (const auto& l : labels) {
      const std::size_t a = below(v);
      const std::size_t b = coin(0.1) ? a : below(v);
      edges.push_back({std::to_string(a), std::to_string(b), l});
    }
    return Json{{"kind", "graphic"}, {"vertices", v}, {"edges", std::move(edges)}};
  }

  Json partition(const std::vector<std::string>& labels) {
    const std::size_t blocks = 1 + below(std::max<std::size_t>(labels.size(), 1));
    std::vector<std::vector<std::string>> members(blocks);
    for (const auto& l : labels) members[below(blocks)].push_back(l);
    Json out = Json::array();
    for (auto& b : members) {
      if (b.empty()) continue;
      const int cap = between(0, static_cast<int>(b.size()));
      out.push_back(Json{{"elements", b}, {"cap", cap}});
    }
    return Json{{"kind", "partition"}, {"universe", labels}, {"blocks", std::move(out)}};
  }

  /// Column matroid of a random 0/1 matrix over GF(2), given by its bases.
  Json binary(const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    const int rows = between(0, static_cast<int>(std::min<std::size_t>(n, 6)));
    std::vector<std::uint64_t> column(n);
    for (auto& c : column) c = rows == 0 ? 0 : rng_() & ((std::uint64_t{1} << rows) - 1);
    auto gf2_rank = [&](std::uint64_t set) {
      std::uint64_t pivot[64] = {};
      int r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!((set >> i) & 1U)) continue;
        std::uint64_t v = column[i];
        while (v) {
          const int top = 63 - std::countl_zero(v);
          if (!pivot[top]) {
            pivot[top] = v;
            ++r;
            break;
          }
          v ^= pivot[top];
        }
      }
      return r;
    };
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const int r = gf2_rank(all);
    Json bases = Json::array();
    for (std::uint64_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != r || gf2_rank(s) != r) continue;
      Json b = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        if ((s >> i) & 1U) b.push_back(labels[i]);
      }
      bases.push_back(std::move(b));
    }
    return Json{{"kind", "explicit"}, {"universe", labels}, {"bases", std::move(bases)}};
  }

  CorpusSpec spec_;
  std::mt19937_64 rng_;
  std::map<std::string, int> coverage_;
};

}  // namespace matroidkit

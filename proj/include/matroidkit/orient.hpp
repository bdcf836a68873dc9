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

// Orientations with in-degree demands.
//
// o(v) >= 0 asks for at least o(v) ingoing edges at v; o(v) < 0 allows at
// most -o(v) edges at v to point away from it. Either way the effective
// lower bound on the in-degree is
//
//   need(v) = o(v)          if o(v) >= 0
//           = d(v) + o(v)   if o(v) <  0.
//
// The solver reduces to intersection on the bidirected arc set: every edge e
// gives arcs a_e (towards its second endpoint) and a'_e (towards its first),
// M = ⊕_v M_v on the arcs entering v with M_v = U(d(v), o(v)) or
// U(d(v), -o(v))*, and N = ⊕_e U({a_e, a'_e}, 1).

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroidkit/core.hpp"
#include "matroidkit/intersect.hpp"
#include "matroidkit/mixed.hpp"

namespace matroidkit {

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string label;
};

struct DemandGraph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
  std::vector<int> demand;  // o, indexed like `vertices`

  std::size_t vertex_count() const { return vertices.size(); }

  int degree(std::size_t v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
  }

  int need(std::size_t v) const {
    const int o = demand.at(v);
    return o >= 0 ? o : degree(v) + o;
  }
};

/// Drops self-loops (reported through `dropped`) and checks |o(v)| <= d(v).
inline DemandGraph normalize(DemandGraph g, std::vector<std::string>* dropped = nullptr) {
  if (g.demand.size() != g.vertices.size()) {
    throw Error(Errc::parse_error, "one demand per vertex required");
  }
  std::vector<GraphEdge> kept;
  for (auto& e : g.edges) {
    if (e.u >= g.vertices.size() || e.v >= g.vertices.size()) {
      throw Error(Errc::parse_error, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      if (dropped) dropped->push_back(e.label);
      continue;
    }
    kept.push_back(std::move(e));
  }
  g.edges = std::move(kept);
  if (2 * g.edges.size() > kMaxElements) {
    throw Error(Errc::too_large, "too many edges for the bidirected arc set");
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const int o = g.demand[v];
    if (o > g.degree(v) || -o > g.degree(v)) {
      throw Error(Errc::demand_out_of_range,
                  "|o(" + g.vertices[v] + ")| exceeds its degree");
    }
  }
  return g;
}

/// head[e] is the vertex edge e points to.
using Orientation = std::vector<std::size_t>;

inline std::vector<int> in_degrees(const DemandGraph& g, const Orientation& head) {
  std::vector<int> in(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) ++in[head[e]];
  return in;
}

// Predicates as stated: "above" compares ingoing edges with o(v) when
// o(v) >= 0, and outgoing edges with -o(v) otherwise. "Below" is "above" for
// the reversed orientation and the demand -o(v).

inline bool above_at(const DemandGraph& g, const std::vector<int>& in, std::size_t v,
                     bool strict = false) {
  const int o = g.demand[v];
  const int out = g.degree(v) - in[v];
  if (o >= 0) return strict ? in[v] > o : in[v] >= o;
  return strict ? out < -o : out <= -o;
}

inline bool below_at(const DemandGraph& g, const std::vector<int>& in, std::size_t v,
                     bool strict = false) {
  const int reversed_demand = -g.demand[v];
  const int reversed_in = g.degree(v) - in[v];
  const int reversed_out = in[v];
  if (reversed_demand >= 0) {
    return strict ? reversed_in > reversed_demand : reversed_in >= reversed_demand;
  }
  return strict ? reversed_out < -reversed_demand : reversed_out <= -reversed_demand;
}

inline bool above_everywhere(const DemandGraph& g, const Orientation& head) {
  const std::vector<int> in = in_degrees(g, head);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!above_at(g, in, v)) return false;
  }
  return true;
}

struct OrientationOutcome {
  enum class Verdict { above_o, deficient };
  Orientation head;
  Verdict verdict = Verdict::above_o;
  std::vector<std::size_t> v_prime;  // sorted; empty unless deficient
};

struct OrientInstance {
  Matroid m;
  Matroid n;
  // arc 2e is a_e (towards edges[e].v), arc 2e+1 is a'_e (towards edges[e].u).
  std::vector<std::size_t> arc_head;
  std::vector<ElementSet> entering;  // δ⁺(v) per vertex
};

inline OrientInstance build_instance(const DemandGraph& g) {
  const std::size_t arcs = 2 * g.edges.size();
  if (arcs > kMaxElements) throw Error(Errc::too_large, "too many edges");
  std::vector<std::string> names(arcs);
  std::vector<std::size_t> head(arcs);
  std::vector<ElementSet> entering(g.vertex_count(), ElementSet(arcs));
  std::vector<PartitionBlock> blocks;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const std::string label = edge.label.empty() ? std::to_string(e) : edge.label;
    names[2 * e] = label + ">" + g.vertices[edge.v];
    names[2 * e + 1] = label + ">" + g.vertices[edge.u];
    head[2 * e] = edge.v;
    head[2 * e + 1] = edge.u;
    entering[edge.v].insert(static_cast<Element>(2 * e));
    entering[edge.u].insert(static_cast<Element>(2 * e + 1));
    blocks.push_back({ElementSet::of(arcs, {static_cast<Element>(2 * e),
                                            static_cast<Element>(2 * e + 1)}),
                      1});
  }
  auto labels = std::make_shared<const GroundSet>(names);
  std::vector<Matroid> parts;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const ElementSet in = entering[v];
    if (in.empty()) continue;
    const std::size_t d = in.size();
    const int o = g.demand[v];
    if (o > static_cast<int>(d) || -o > static_cast<int>(d)) {
      throw Error(Errc::demand_out_of_range, "|o(" + g.vertices[v] + ")| exceeds its degree");
    }
    Matroid block = o >= 0 ? uniform(d, o) : dual(uniform(d, -o));
    std::vector<Element> to(d);
    std::size_t j = 0;
    for (Element a : in) to[j++] = a;
    parts.push_back(relabel(block, std::move(to), arcs, labels));
  }
  Matroid m = parts.empty() ? rank_zero(0) : direct_sum(parts, labels);
  Matroid n = partition(arcs, std::move(blocks), names);
  return OrientInstance{std::move(m), std::move(n), std::move(head), std::move(entering)};
}

/// Re-checks an outcome from raw degrees.
inline bool verify_outcome(const DemandGraph& g, const OrientationOutcome& out) {
  if (out.head.size() != g.edges.size()) return false;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (out.head[e] != g.edges[e].u && out.head[e] != g.edges[e].v) return false;
  }
  const std::vector<int> in = in_degrees(g, out.head);
  if (out.verdict == OrientationOutcome::Verdict::above_o) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!above_at(g, in, v)) return false;
    }
    return true;
  }
  if (out.v_prime.empty()) return false;
  std::vector<bool> inside(g.vertex_count(), false);
  for (std::size_t v : out.v_prime) {
    if (v >= g.vertex_count()) return false;
    inside[v] = true;
  }
  bool strictly = false;
  for (std::size_t v : out.v_prime) {
    if (!below_at(g, in, v)) return false;
    strictly = strictly || below_at(g, in, v, true);
  }
  if (!strictly) return false;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (inside[edge.u] != inside[edge.v] && !inside[out.head[e]]) return false;
  }
  return true;
}

/// Σ_{v ∈ V'} need(v) > |edges meeting V'|; certifies that no orientation
/// above o exists.
inline bool deficiency_counting_check(const DemandGraph& g, const std::vector<std::size_t>& v_prime) {
  if (v_prime.empty()) return false;
  std::vector<bool> inside(g.vertex_count(), false);
  long demand = 0;
  for (std::size_t v : v_prime) {
    inside.at(v) = true;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (inside[v]) demand += g.need(v);
  }
  long meeting = 0;
  for (const auto& e : g.edges) meeting += (inside[e.u] || inside[e.v]) ? 1 : 0;
  return demand > meeting;
}

/// Cofinitary part for the mixed solver: arcs entering a vertex whose block
/// is a dual uniform matroid. The solver runs on (N, M) with this split of M.
inline ElementSet orientation_split(const DemandGraph& g, const OrientInstance& inst) {
  ElementSet e1(2 * g.edges.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.demand[v] < 0) e1 |= inst.entering[v];
  }
  return e1;
}

inline OrientationOutcome orient_solve(const DemandGraph& g, SolverKind solver = SolverKind::classic) {
  const OrientInstance inst = build_instance(g);
  const PairContext ctx(inst.m, inst.n);
  const IntersectionCertificate cert =
      solver == SolverKind::classic
          ? edmonds_solve(ctx)
          : swap_sides(mixed_solve(inst.n, make_split(inst.m, orientation_split(g, inst))));
  if (!verify_certificate(ctx, cert)) {
    throw Error(Errc::certificate_invalid, "intersection certificate failed verification");
  }
  OrientationOutcome out;
  out.head.resize(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.head[e] = cert.common.contains(static_cast<Element>(2 * e)) ? g.edges[e].v : g.edges[e].u;
  }
  if (above_everywhere(g, out.head)) return out;

  // V'' = vertices where I_M contains a base of M_v; V' is the rest.
  const ElementSet i_m = cert.m_part();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const ElementSet in = inst.entering[v];
    const bool has_base = in.empty() || inst.m.rank(i_m & in) == inst.m.rank(in);
    if (!has_base) out.v_prime.push_back(v);
  }
  out.verdict = OrientationOutcome::Verdict::deficient;
  if (!verify_outcome(g, out)) {
    throw Error(Errc::certificate_invalid, "deficiency certificate failed verification");
  }
  return out;
}

}  // namespace matroidkit

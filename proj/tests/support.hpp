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

// Helpers shared by the unit tests and the acceptance runner.

#pragma once

#include <string>
#include <vector>

#include "matroidkit/matroidkit.hpp"

namespace mktest {

using namespace matroidkit;

/// Same ground set and the same rank on every subset of it.
inline bool same_oracle(const Matroid& a, const Matroid& b) {
  if (a.capacity() != b.capacity() || a.ground() != b.ground()) return false;
  bool same = true;
  for_each_subset(a.ground(), [&](const ElementSet& s) {
    if (same && a.rank(s) != b.rank(s)) same = false;
  });
  return same;
}

inline std::vector<Matroid> small_matroids(int n) {
  std::vector<Matroid> out;
  for (const auto& m : all_matroids(n)) out.push_back(m.to_matroid());
  return out;
}

inline DemandGraph demand_graph(const SmallGraph& sg) {
  DemandGraph g;
  for (std::size_t v = 0; v < sg.vertices; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (std::size_t e = 0; e < sg.edges.size(); ++e) {
    g.edges.push_back({sg.edges[e].first, sg.edges[e].second, "g" + std::to_string(e)});
  }
  g.demand.assign(sg.vertices, 0);
  return g;
}

inline DemandGraph demand_graph(const Json& doc) {
  DemandGraph g = parse_graph(doc.at("graph"));
  parse_demands(g, doc.at("demands"));
  return normalize(std::move(g));
}

struct ArcReplay {
  long augment_events = 0;
  long extend_events = 0;
  long lemma_checked = 0;  // arcs covered by the augmentation lemma
  long lemma_failed = 0;
  long fact_checked = 0;   // arcs covered by the superset observation
  long fact_failed = 0;
  long fact_failed_cocircuit = 0;  // failures among rule-(3) arcs
  long undefined = 0;      // rule-(3) cocircuits that did not exist
  long cocircuit_arcs = 0; // rule-(3) arcs seen before an event
};

/// Replays a mixed trace: every arc of D(I) whose tail and out-neighbours
/// avoid P must be in D(I △ P); every arc of D(I) untouched by an extension
/// J ⊇ I must be in D(J).
inline ArcReplay replay_arcs(const MixedContext& ctx, const std::vector<TraceEvent>& trace) {
  ArcReplay r;
  for (const auto& ev : trace) {
    if (ev.kind == TraceEvent::Kind::augment) {
      ++r.augment_events;
      const ExchangeDigraph before = build_exchange_digraph(ctx, ctx.make_state(ev.before), false);
      const ExchangeDigraph after = build_exchange_digraph(ctx, ctx.make_state(ev.after), false);
      r.undefined += before.undefined_cocircuits + after.undefined_cocircuits;
      const ElementSet p = path_set(ctx.capacity(), ev.path);
      for (const Arc& a : before.arcs) {
        if (a.rule == ArcRule::n_cocircuit) ++r.cocircuit_arcs;
        if (p.contains(a.from) || before.graph.successors(a.from).intersects(p)) continue;
        ++r.lemma_checked;
        if (!after.graph.has_arc(a.from, a.to)) ++r.lemma_failed;
      }
    } else if (ev.kind == TraceEvent::Kind::extend) {
      ++r.extend_events;
      const ExchangeDigraph before = build_exchange_digraph(ctx, ctx.make_state(ev.before), false);
      const ExchangeDigraph after = build_exchange_digraph(ctx, ctx.make_state(ev.after), false);
      r.undefined += before.undefined_cocircuits + after.undefined_cocircuits;
      for (const Arc& a : before.arcs) {
        if (a.rule == ArcRule::n_cocircuit) ++r.cocircuit_arcs;
        const ElementSet xy = ElementSet::of(ctx.capacity(), {a.from, a.to});
        if ((xy & ev.after) != (xy & ev.before)) continue;
        ++r.fact_checked;
        if (!after.graph.has_arc(a.from, a.to)) {
          ++r.fact_failed;
          if (a.rule == ArcRule::n_cocircuit) ++r.fact_failed_cocircuit;
        }
      }
    }
  }
  return r;
}

/// The mixed context used inside mixed_run, rebuilt for replaying its trace.
inline MixedContext quotient_context(const Matroid& m, const SplitInput& split, const Wave& w) {
  const PairContext quotient(contract(m, w.set), delete_set(split.n, w.set));
  const ElementSet rest = quotient.ground();
  return MixedContext(quotient, split.e0 & rest, split.e1 & rest);
}

}  // namespace mktest

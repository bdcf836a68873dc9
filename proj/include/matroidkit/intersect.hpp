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

// Classic two-matroid intersection by Edmonds' augmenting paths, with the
// reachability certificate (I, E_M, E_N) on termination.

#pragma once

#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "matroidkit/core.hpp"
#include "matroidkit/element_set.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Two matroids over the same index space and ground set.
class PairContext {
 public:
  PairContext(Matroid m, Matroid n) : m_(std::move(m)), n_(std::move(n)) {
    if (m_.capacity() != n_.capacity() || m_.ground() != n_.ground()) {
      throw Error(Errc::universe_mismatch, "M and N must share one ground set");
    }
  }
  const Matroid& m() const { return m_; }
  const Matroid& n() const { return n_; }
  const ElementSet& ground() const { return m_.ground(); }
  std::size_t capacity() const { return m_.capacity(); }
  ElementSet empty_set() const { return m_.empty_set(); }

  bool common_independent(const ElementSet& s) const {
    return m_.is_independent(s) && n_.is_independent(s);
  }

  /// (M/X, N/X) on E \ X.
  PairContext contract_both(const ElementSet& x) const {
    return PairContext(contract(m_, x), contract(n_, x));
  }

 private:
  Matroid m_;
  Matroid n_;
};

struct IntersectionCertificate {
  ElementSet common;  // I
  ElementSet m_side;  // E_M
  ElementSet n_side;  // E_N

  ElementSet m_part() const { return common & m_side; }
  ElementSet n_part() const { return common & n_side; }
};

/// The same certificate read for the pair (N, M).
inline IntersectionCertificate swap_sides(const IntersectionCertificate& c) {
  return IntersectionCertificate{c.common, c.n_side, c.m_side};
}

/// Odd-length alternating sequence x_1 ... x_{2n+1}.
using AugPath = std::vector<Element>;

inline ElementSet path_set(std::size_t capacity, const AugPath& p) {
  return ElementSet::of(capacity, p);
}

/// Re-derives every certificate property from the raw oracles.
inline bool verify_certificate(const PairContext& ctx, const IntersectionCertificate& c) {
  const ElementSet& g = ctx.ground();
  if (c.common.universe() != ctx.capacity() || c.m_side.universe() != ctx.capacity() ||
      c.n_side.universe() != ctx.capacity()) {
    return false;
  }
  if (c.m_side.intersects(c.n_side) || (c.m_side | c.n_side) != g) return false;
  if (!c.common.is_subset_of(g) || !ctx.common_independent(c.common)) return false;
  return spans(ctx.m(), c.m_part(), c.m_side) && spans(ctx.n(), c.n_part(), c.n_side);
}

/// Digraph over the index space stored as out-neighbour bitmasks.
struct Digraph {
  explicit Digraph(std::size_t capacity) : out(capacity, 0), capacity_(capacity) {}

  std::vector<std::uint64_t> out;

  std::size_t capacity() const { return capacity_; }
  bool has_arc(Element x, Element y) const { return ((out[x] >> y) & 1U) != 0; }
  void add_arc(Element x, Element y) { out[x] |= std::uint64_t{1} << y; }
  ElementSet successors(Element x) const { return ElementSet(capacity_, out[x]); }

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (auto bits : out) total += static_cast<std::size_t>(std::popcount(bits));
    return total;
  }

  /// Everything reachable from `from` (inclusive).
  ElementSet reachable(const ElementSet& from) const {
    ElementSet seen = from;
    std::deque<Element> queue(from.begin(), from.end());
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (Element y : successors(x) - seen) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
    return seen;
  }

  /// Everything that can reach `to` (inclusive).
  ElementSet coreachable(const ElementSet& to) const {
    ElementSet seen = to;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < capacity_; ++x) {
        const auto e = static_cast<Element>(x);
        if (!seen.contains(e) && (out[x] & seen.bits()) != 0) {
          seen.insert(e);
          grew = true;
        }
      }
    }
    return seen;
  }

  /// Breadth-first distance from each vertex to the nearest vertex of `to`;
  /// -1 when unreachable.
  std::vector<int> distance_to(const ElementSet& to) const {
    std::vector<int> dist(capacity_, -1);
    std::deque<Element> queue;
    for (Element t : to) {
      dist[t] = 0;
      queue.push_back(t);
    }
    while (!queue.empty()) {
      const Element y = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < capacity_; ++x) {
        if (dist[x] < 0 && has_arc(static_cast<Element>(x), y)) {
          dist[x] = dist[y] + 1;
          queue.push_back(static_cast<Element>(x));
        }
      }
    }
    return dist;
  }

  /// Path selection shared by both solvers: the smallest source (index order)
  /// that reaches a sink, then a shortest path from it, choosing the smallest
  /// successor at each step.
  std::optional<AugPath> first_source_path(const ElementSet& sources,
                                           const ElementSet& sinks) const {
    const std::vector<int> dist = distance_to(sinks);
    for (Element s : sources) {
      if (dist[s] < 0) continue;
      AugPath path{s};
      Element cur = s;
      while (dist[cur] > 0) {
        for (Element y : successors(cur)) {
          if (dist[y] == dist[cur] - 1) {
            cur = y;
            break;
          }
        }
        path.push_back(cur);
      }
      return path;
    }
    return std::nullopt;
  }

 private:
  std::size_t capacity_;
};

/// Classic exchange graph built from exchange queries: x -> y when
/// I - y + x is M-independent (x outside I and M-spanned), y -> x when
/// I - y + x is N-independent (x outside I and N-spanned).
struct ClassicExchange {
  Digraph graph;
  ElementSet sources;  // outside span_N(I)
  ElementSet sinks;    // outside span_M(I)
};

inline ClassicExchange classic_exchange_graph(const PairContext& ctx, const ElementSet& i) {
  const Matroid& m = ctx.m();
  const Matroid& n = ctx.n();
  ClassicExchange ex{Digraph(ctx.capacity()), ctx.empty_set(), ctx.empty_set()};
  for (Element x : ctx.ground() - i) {
    const bool m_free = m.is_independent(i.with(x));
    const bool n_free = n.is_independent(i.with(x));
    if (m_free) ex.sinks.insert(x);
    if (n_free) ex.sources.insert(x);
    for (Element y : i) {
      const ElementSet swapped = i.without(y).with(x);
      if (!m_free && m.is_independent(swapped)) ex.graph.add_arc(x, y);
      if (!n_free && n.is_independent(swapped)) ex.graph.add_arc(y, x);
    }
  }
  return ex;
}

using EdmondsOutcome = std::variant<IntersectionCertificate, AugPath>;

/// One round of Edmonds' method: an augmenting path, or the certificate
/// E_M = vertices reachable from the sources, E_N = the rest.
inline EdmondsOutcome edmonds_step(const PairContext& ctx, const ElementSet& i) {
  if (!ctx.common_independent(i)) {
    throw Error(Errc::not_common_independent, "edmonds_step needs a common independent set");
  }
  const ClassicExchange ex = classic_exchange_graph(ctx, i);
  if (auto path = ex.graph.first_source_path(ex.sources, ex.sinks)) return *path;
  const ElementSet reach = ex.graph.reachable(ex.sources) & ctx.ground();
  return IntersectionCertificate{i, reach, ctx.ground() - reach};
}

/// I △ P for a classic path, checking span_M(I△P) = span_M(I + x_last) and
/// span_N(I△P) = span_N(I + x_1).
inline ElementSet edmonds_augment(const PairContext& ctx, const ElementSet& i,
                                  const AugPath& p) {
  const ElementSet next = i ^ path_set(ctx.capacity(), p);
  if (!ctx.common_independent(next)) {
    throw Error(Errc::postcondition_failed, "I△P is not common independent");
  }
  if (span(ctx.m(), next) != span(ctx.m(), i.with(p.back())) ||
      span(ctx.n(), next) != span(ctx.n(), i.with(p.front()))) {
    throw Error(Errc::postcondition_failed, "classic augmentation changed spans unexpectedly");
  }
  return next;
}

struct EdmondsResult {
  IntersectionCertificate certificate;
  std::vector<AugPath> paths;
};

inline EdmondsResult edmonds_run(const PairContext& ctx, ElementSet start) {
  EdmondsResult out{{}, {}};
  ElementSet i = start;
  for (std::size_t round = 0; round <= ctx.ground().size() + 1; ++round) {
    EdmondsOutcome step = edmonds_step(ctx, i);
    if (auto* cert = std::get_if<IntersectionCertificate>(&step)) {
      out.certificate = *cert;
      return out;
    }
    const AugPath& p = std::get<AugPath>(step);
    i = edmonds_augment(ctx, i, p);
    out.paths.push_back(p);
  }
  throw Error(Errc::stuck, "edmonds_solve exceeded |E| + 1 augmentations");
}

inline IntersectionCertificate edmonds_solve(const PairContext& ctx) {
  return edmonds_run(ctx, ctx.empty_set()).certificate;
}

inline IntersectionCertificate edmonds_solve(const PairContext& ctx, const ElementSet& start) {
  return edmonds_run(ctx, start).certificate;
}

/// For a maximum common independent set I, the largest possible M-side:
/// everything that cannot reach a sink in the classic exchange graph.
inline ElementSet maximal_m_side(const PairContext& ctx, const ElementSet& i) {
  const ClassicExchange ex = classic_exchange_graph(ctx, i);
  const ElementSet to_sink = ex.graph.coreachable(ex.sinks);
  if (to_sink.intersects(ex.sources)) {
    throw Error(Errc::precondition_violated, "I is not a maximum common independent set");
  }
  return ctx.ground() - to_sink;
}

}  // namespace matroidkit

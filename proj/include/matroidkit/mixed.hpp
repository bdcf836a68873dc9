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

// Mixed augmenting paths over a split E = E0 ⊔ E1 of N's components.
//
// On E0 the exchange rules are Edmonds' (circuits of M and N). On E1 the
// N-side exchanges go through cocircuits: for x ∈ I ∩ E1 the out-neighbours
// are C_{N*}(x, ring(I) ∩ E1) - x, where ring(I) = span_M(I) \ I. A state I
// is dually safe when I ∩ E1 is N*-spanned by ring(I) ∩ E1.
//
// The solver keeps I nice (cond⁺ holds for (M/I, N/I)) and dually safe:
// augment along a path whose first element is as small as possible, then
// re-extend by a common base of the largest wave of the quotient.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroidkit/core.hpp"
#include "matroidkit/intersect.hpp"
#include "matroidkit/waves.hpp"

namespace matroidkit {

/// N together with a split of its ground set. No N-circuit meets both sides.
struct SplitInput {
  Matroid n;
  ElementSet e0;
  ElementSet e1;
};

inline SplitInput make_split(const Matroid& n, const ElementSet& e1) {
  n.check_subset(e1);
  const ElementSet e0 = n.ground() - e1;
  for (const ElementSet& comp : components(n)) {
    if (comp.intersects(e0) && comp.intersects(e1)) {
      throw Error(Errc::precondition_violated, "an N-component meets both E0 and E1");
    }
  }
  return SplitInput{n, e0, e1};
}

/// All E1 choices that respect N's components (unions of components).
inline std::vector<ElementSet> component_splits(const Matroid& n, std::size_t limit = 64) {
  const std::vector<ElementSet> comps = components(n);
  std::vector<ElementSet> out;
  const std::size_t k = std::min<std::size_t>(comps.size(), 20);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total && out.size() < limit; ++mask) {
    ElementSet e1 = n.empty_set();
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1U) e1 |= comps[j];
    }
    out.push_back(e1);
  }
  return out;
}

enum class ArcRule { m_circuit, n_circuit, n_cocircuit };

struct Arc {
  Element from;
  Element to;
  ArcRule rule;
};

struct ExchangeDigraph {
  Digraph graph;
  std::vector<Arc> arcs;
  ElementSet sources;  // E0 \ span_N(I)
  ElementSet sinks;    // E0 \ span_M(I)
  int undefined_cocircuits = 0;
};

struct FeasibleState {
  ElementSet i;          // I
  ElementSet span_m;     // span_M(I)
  ElementSet ring;       // span_M(I) \ I
  ElementSet safe_base;  // ring ∩ E1
};

struct MixedTelemetry {
  int augmentations = 0;
  int repairs = 0;
  int extensions = 0;
  int key_steps = 0;
  int key_iterations = 0;
  int max_key_iterations = 0;
};

struct TraceEvent {
  enum class Kind { augment, extend, adjoin };
  Kind kind;
  ElementSet before;
  AugPath path;       // augment only
  ElementSet after;
  ElementSet added;   // extend / adjoin
};

inline const char* trace_kind_name(TraceEvent::Kind k) {
  switch (k) {
    case TraceEvent::Kind::augment: return "augment";
    case TraceEvent::Kind::extend: return "extend";
    case TraceEvent::Kind::adjoin: return "adjoin";
  }
  return "?";
}

/// The pair (M, N) with a split of N, plus the cached dual of N.
class MixedContext {
 public:
  MixedContext(PairContext pair, ElementSet e0, ElementSet e1)
      : pair_(std::move(pair)), n_dual_(dual(pair_.n())), e0_(e0), e1_(e1) {
    if ((e0_ | e1_) != pair_.ground() || e0_.intersects(e1_)) {
      throw Error(Errc::precondition_violated, "E0 and E1 must partition the ground set");
    }
  }

  const PairContext& pair() const { return pair_; }
  const Matroid& m() const { return pair_.m(); }
  const Matroid& n() const { return pair_.n(); }
  const Matroid& n_dual() const { return n_dual_; }
  const ElementSet& e0() const { return e0_; }
  const ElementSet& e1() const { return e1_; }
  const ElementSet& ground() const { return pair_.ground(); }
  std::size_t capacity() const { return pair_.capacity(); }
  ElementSet empty_set() const { return pair_.empty_set(); }

  FeasibleState make_state(const ElementSet& i) const {
    FeasibleState s;
    s.i = i;
    s.span_m = span(m(), i);
    s.ring = s.span_m - i;
    s.safe_base = s.ring & e1_;
    return s;
  }

  bool dually_safe(const FeasibleState& s) const {
    return spans(n_dual_, s.safe_base, s.i & e1_);
  }

  /// Throws StateInvariantBroken naming the first failed invariant.
  void check_state(const FeasibleState& s) const {
    if (!pair_.common_independent(s.i)) {
      throw Error(Errc::state_invariant_broken, "I is not common independent");
    }
    if (!dually_safe(s)) {
      throw Error(Errc::state_invariant_broken, "I is not dually safe");
    }
    if (!n_dual_.is_independent(s.safe_base)) {
      throw Error(Errc::state_invariant_broken, "ring(I) ∩ E1 is N*-dependent");
    }
  }

 private:
  PairContext pair_;
  Matroid n_dual_;
  ElementSet e0_;
  ElementSet e1_;
};


/// D(I) from the three rules. With `strict`, a state violating the
/// invariants is rejected; otherwise rule-(3) arcs whose cocircuit is
/// undefined are skipped and counted.
inline ExchangeDigraph build_exchange_digraph(const MixedContext& ctx, const FeasibleState& s,
                                              bool strict = true) {
  if (strict) ctx.check_state(s);
  const Matroid& m = ctx.m();
  const Matroid& n = ctx.n();
  ExchangeDigraph d{Digraph(ctx.capacity()), {}, ctx.empty_set(), ctx.empty_set(), 0};
  const ElementSet span_n = span(n, s.i);

  auto add = [&](Element x, Element y, ArcRule rule) {
    d.graph.add_arc(x, y);
    d.arcs.push_back(Arc{x, y, rule});
  };

  // (1) x ∉ I with I + x M-dependent, y ∈ C_M(x, I) - x.
  for (Element x : s.ring) {
    for (Element y : fundamental_circuit(m, x, s.i).without(x)) add(x, y, ArcRule::m_circuit);
  }
  // (2) x ∈ I ∩ E0 lying in C_N(y, I).
  std::vector<std::pair<Element, Element>> rule2;
  for (Element y : span_n - s.i) {
    for (Element x : fundamental_circuit(n, y, s.i).without(y) & ctx.e0()) rule2.emplace_back(x, y);
  }
  // (3) x ∈ I ∩ E1, y ∈ C_{N*}(x, ring(I) ∩ E1) - x.
  std::vector<std::pair<Element, Element>> rule3;
  const bool base_ok = ctx.n_dual().is_independent(s.safe_base);
  for (Element x : s.i & ctx.e1()) {
    if (!base_ok || !spans(ctx.n_dual(), s.safe_base, ElementSet::of(ctx.capacity(), {x}))) {
      ++d.undefined_cocircuits;
      continue;
    }
    for (Element y : fundamental_circuit(ctx.n_dual(), x, s.safe_base).without(x)) {
      rule3.emplace_back(x, y);
    }
  }
  std::sort(rule2.begin(), rule2.end());
  for (auto [x, y] : rule2) add(x, y, ArcRule::n_circuit);
  for (auto [x, y] : rule3) add(x, y, ArcRule::n_cocircuit);

  d.sources = ctx.e0() - span_n;
  d.sinks = ctx.e0() - s.span_m;
  return d;
}

/// Checks (i)-(iii) of an augmenting path and returns the first jumping arc
/// x_k -> x_l (l > k + 1), if any.
inline std::optional<std::pair<std::size_t, std::size_t>> first_jumping_arc(
    const ExchangeDigraph& d, const AugPath& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = p.size(); l-- > k + 2;) {
      if (d.graph.has_arc(p[k], p[l])) return std::make_pair(k, l);
    }
  }
  return std::nullopt;
}

inline bool is_augmenting_path(const ExchangeDigraph& d, const AugPath& p) {
  if (p.empty() || p.size() % 2 == 0) return false;
  if (!d.sources.contains(p.front()) || !d.sinks.contains(p.back())) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (!d.graph.has_arc(p[k], p[k + 1])) return false;
  }
  return !first_jumping_arc(d, p).has_value();
}

/// Augmenting path whose first element is as small as possible; shortest from
/// that source, smallest successor first. Jumping arcs are cut out
/// (x_{k+1} .. x_{l-1} dropped) and each cut is counted in `repairs`.
inline std::optional<AugPath> find_aug_path(const ExchangeDigraph& d, int* repairs = nullptr) {
  std::optional<AugPath> path = d.graph.first_source_path(d.sources, d.sinks);
  if (!path) return std::nullopt;
  while (auto jump = first_jumping_arc(d, *path)) {
    const auto [k, l] = *jump;
    path->erase(path->begin() + static_cast<std::ptrdiff_t>(k + 1),
                path->begin() + static_cast<std::ptrdiff_t>(l));
    if (repairs) ++*repairs;
  }
  if (!is_augmenting_path(d, *path)) {
    throw Error(Errc::postcondition_failed, "selected path is not augmenting");
  }
  return path;
}

/// I △ P together with the three span identities that make it safe:
/// (A) span_M(I△P) = span_M(I + x_last),
/// (B) span_N(I△P) ∩ E0 = span_N(I + x_1) ∩ E0,
/// (C) ring(I)∩E1 and ring(I)∩E1 △ P∩E1 have equal N*-span, the latter
///     N*-independent.
/// Any failure is a solver bug and raises PostconditionFailed.
inline FeasibleState augment(const MixedContext& ctx, const FeasibleState& s, const AugPath& p) {
  const ElementSet ps = path_set(ctx.capacity(), p);
  const ElementSet next = s.i ^ ps;
  const Matroid& m = ctx.m();
  const Matroid& n = ctx.n();
  if (!ctx.pair().common_independent(next)) {
    throw Error(Errc::postcondition_failed, "I△P is not common independent");
  }
  FeasibleState out = ctx.make_state(next);
  if (out.span_m != span(m, s.i.with(p.back()))) {
    throw Error(Errc::postcondition_failed, "(A) span_M(I△P) != span_M(I + x_last)");
  }
  if ((span(n, next) & ctx.e0()) != (span(n, s.i.with(p.front())) & ctx.e0())) {
    throw Error(Errc::postcondition_failed, "(B) span_N(I△P) ∩ E0 != span_N(I + x_1) ∩ E0");
  }
  const ElementSet y0 = s.safe_base;
  const ElementSet y1 = y0 ^ (ps & ctx.e1());
  if (!ctx.n_dual().is_independent(y1) || span(ctx.n_dual(), y0) != span(ctx.n_dual(), y1)) {
    throw Error(Errc::postcondition_failed, "(C) N*-span of ring(I)∩E1 not preserved");
  }
  if (!ctx.dually_safe(out)) {
    throw Error(Errc::postcondition_failed, "I△P is not dually safe");
  }
  return out;
}

/// Adds a member of B(M/I, N/I, W(M/I, N/I)). The result is a nice dually
/// safe feasible set.
inline FeasibleState extend_to_nice(const MixedContext& ctx, const FeasibleState& s,
                                    ElementSet* added = nullptr) {
  if (!ctx.pair().common_independent(s.i) || !ctx.dually_safe(s)) {
    throw Error(Errc::precondition_violated, "extend_to_nice needs a dually safe common independent set");
  }
  const PairContext quotient = ctx.pair().contract_both(s.i);
  const Wave w = largest_wave(quotient);
  const std::optional<ElementSet> b = common_base_B(quotient, w.set);
  if (!b) {
    throw Error(Errc::extension_failed, "B(M/I, N/I, W) is empty");
  }
  FeasibleState out = ctx.make_state(s.i | *b);
  ctx.check_state(out);
  if (!nice_feasible(ctx.pair(), out.i)) {
    throw Error(Errc::postcondition_failed, "extension is not nice feasible");
  }
  if (added) *added = *b;
  return out;
}

/// Stateful driver for the mixed method; collects telemetry and an optional
/// trace of every augmentation, extension and final adjoin.
class MixedSolver {
 public:
  explicit MixedSolver(MixedContext ctx, bool record_trace = false)
      : ctx_(std::move(ctx)), record_(record_trace) {}

  const MixedContext& context() const { return ctx_; }
  const MixedTelemetry& telemetry() const { return telemetry_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }

  /// Runs augment + extend until e is N-spanned. Requires a nice dually safe
  /// feasible state.
  FeasibleState key_step(FeasibleState s, Element e) {
    if (!ctx_.e0().contains(e)) {
      throw Error(Errc::precondition_violated, "key_step target must lie in E0");
    }
    const std::size_t size = ctx_.ground().size();
    const std::size_t cap = size * (size + 2);
    ++telemetry_.key_steps;
    ElementSet reached = span(ctx_.n(), s.i) & ctx_.e0();
    std::size_t iterations = 0;
    while (!reached.contains(e)) {
      if (++iterations > cap) {
        throw Error(Errc::stuck, "key_step exceeded its iteration cap");
      }
      const ExchangeDigraph d = build_exchange_digraph(ctx_, s);
      const std::optional<AugPath> p = find_aug_path(d, &telemetry_.repairs);
      if (!p) {
        throw Error(Errc::stuck, "no augmenting path while element " + std::to_string(e) +
                                     " is not N-spanned");
      }
      FeasibleState mid = augment(ctx_, s, *p);
      ++telemetry_.augmentations;
      if (record_) {
        trace_.push_back({TraceEvent::Kind::augment, s.i, *p, mid.i, ctx_.empty_set()});
      }
      ElementSet added = ctx_.empty_set();
      FeasibleState next = extend_to_nice(ctx_, mid, &added);
      ++telemetry_.extensions;
      if (record_) {
        trace_.push_back({TraceEvent::Kind::extend, mid.i, {}, next.i, added});
      }
      const ElementSet now = span(ctx_.n(), next.i) & ctx_.e0();
      if (!reached.is_subset_of(now) || now == reached) {
        throw Error(Errc::postcondition_failed, "span_N(I) ∩ E0 did not grow");
      }
      reached = now;
      s = std::move(next);
    }
    telemetry_.key_iterations += static_cast<int>(iterations);
    telemetry_.max_key_iterations =
        std::max(telemetry_.max_key_iterations, static_cast<int>(iterations));
    return s;
  }

  /// Runs key steps over E0 in index order, then adjoins an (M/I)-independent
  /// base of N.(E1 \ I). Expects cond⁺(M, N).
  FeasibleState solve_nice() {
    FeasibleState s = ctx_.make_state(ctx_.empty_set());
    ctx_.check_state(s);
    for (Element e : ctx_.e0()) {
      if (!span(ctx_.n(), s.i).contains(e)) s = key_step(std::move(s), e);
    }
    const ElementSet rest = ctx_.e1() - s.i;
    const PairContext sub(restrict_to(contract(ctx_.m(), s.i), rest),
                          contract_onto(ctx_.n(), rest));
    const IntersectionCertificate c = edmonds_solve(sub);
    if (static_cast<int>(c.common.size()) != sub.n().rank()) {
      throw Error(Errc::extension_failed, "no M/I-independent base of N.(E1 \\ I)");
    }
    const ElementSet before = s.i;
    s = ctx_.make_state(s.i | c.common);
    if (record_) {
      trace_.push_back({TraceEvent::Kind::adjoin, before, {}, s.i, c.common});
    }
    return s;
  }

 private:
  MixedContext ctx_;
  bool record_;
  MixedTelemetry telemetry_;
  std::vector<TraceEvent> trace_;
};

enum class SolverKind { classic, mixed };

struct MixedResult {
  IntersectionCertificate certificate;
  Wave wave;
  MixedTelemetry telemetry;
  std::vector<TraceEvent> trace;
};

/// Full mixed solve: E_M = W(M,N) witnessed by I_M, then an M/E_M-independent
/// base I_N of N - E_M built by the mixed method.
inline MixedResult mixed_run(const Matroid& m, const SplitInput& split, bool record_trace = false) {
  const PairContext ctx(m, split.n);
  const Wave w = largest_wave(ctx);
  const PairContext quotient(contract(m, w.set), delete_set(split.n, w.set));
  if (!check_cond_plus(quotient)) {
    throw Error(Errc::postcondition_failed, "cond⁺ fails after removing the largest wave");
  }
  const ElementSet rest = ctx.ground() - w.set;
  MixedSolver solver(MixedContext(quotient, split.e0 & rest, split.e1 & rest), record_trace);
  const FeasibleState s = solver.solve_nice();
  if (!spans(quotient.n(), s.i, rest)) {
    throw Error(Errc::postcondition_failed, "I_N does not span N - W");
  }
  MixedResult out{IntersectionCertificate{w.witness | s.i, w.set, rest}, w, solver.telemetry(),
                  solver.trace()};
  if (!verify_certificate(ctx, out.certificate)) {
    throw Error(Errc::certificate_invalid, "mixed certificate failed verification");
  }
  return out;
}

inline IntersectionCertificate mixed_solve(const Matroid& m, const SplitInput& split) {
  return mixed_run(m, split).certificate;
}

}  // namespace matroidkit

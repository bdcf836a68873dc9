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

// Waves of a matroid pair.
//
// W ⊆ E is an (M,N)-wave when M↾W has a base that is independent in N.W.
// Waves are closed under union, so there is a largest one, W(M,N).

#pragma once

#include <optional>
#include <string>

#include "matroidkit/core.hpp"
#include "matroidkit/intersect.hpp"

namespace matroidkit {

struct Wave {
  ElementSet set;      // W
  ElementSet witness;  // base of M↾W, independent in N.W
  int steps = 0;       // quotient rounds used to find it
};

/// Maximum common independent set of M↾X and N.X.
inline IntersectionCertificate restricted_pair_solve(const PairContext& ctx, const ElementSet& x) {
  return edmonds_solve(PairContext(restrict_to(ctx.m(), x), contract_onto(ctx.n(), x)));
}

/// r(N.X) = r(N) - r(N - X).
inline int rank_contracted_onto(const Matroid& n, const ElementSet& x) {
  return n.rank() - n.rank(n.ground() - x);
}

inline bool is_wave_witness(const PairContext& ctx, const ElementSet& w, const ElementSet& b) {
  return b.is_subset_of(w) && ctx.m().is_independent(b) && spans(ctx.m(), b, w) &&
         contract_onto(ctx.n(), w).is_independent(b);
}

inline std::optional<ElementSet> is_wave(const PairContext& ctx, const ElementSet& w) {
  ctx.m().check_subset(w);
  const IntersectionCertificate c = restricted_pair_solve(ctx, w);
  if (static_cast<int>(c.common.size()) == ctx.m().rank(w)) return c.common;
  return std::nullopt;
}

/// W(M,N) by accumulating waves of the successive quotients (M/W, N-W) until
/// the quotient has no non-empty wave. Each round solves the quotient pair
/// and takes the largest M-side a maximum common independent set admits.
inline Wave largest_wave(const PairContext& ctx) {
  Wave out{ctx.empty_set(), ctx.empty_set(), 0};
  while (true) {
    const PairContext quotient(contract(ctx.m(), out.set), delete_set(ctx.n(), out.set));
    const IntersectionCertificate cert = edmonds_solve(quotient);
    const ElementSet step = maximal_m_side(quotient, cert.common);
    if (step.empty()) break;
    out.witness |= cert.common & step;
    out.set |= step;
    ++out.steps;
  }
  if (!is_wave_witness(ctx, out.set, out.witness)) {
    throw Error(Errc::postcondition_failed, "accumulated witness does not certify the wave");
  }
  return out;
}

/// cond⁺(M,N): W(M,N) consists of M-loops and r(N.W(M,N)) = 0.
inline bool check_cond_plus(const PairContext& ctx) {
  const Wave w = largest_wave(ctx);
  return ctx.m().rank(w.set) == 0 && rank_contracted_onto(ctx.n(), w.set) == 0;
}

/// cond(M,N): every wave W has an M-independent base of N.W. Exhaustive.
inline bool check_cond(const PairContext& ctx, std::size_t bound = exhaustive_bound(12)) {
  if (ctx.ground().size() > bound) {
    throw Error(Errc::too_large, "exhaustive cond over " + std::to_string(ctx.ground().size()) +
                                     " elements exceeds bound " + std::to_string(bound));
  }
  bool ok = true;
  for_each_subset(ctx.ground(), [&](const ElementSet& w) {
    if (!ok) return;
    const IntersectionCertificate c = restricted_pair_solve(ctx, w);
    const int size = static_cast<int>(c.common.size());
    if (size == ctx.m().rank(w) && size != rank_contracted_onto(ctx.n(), w)) ok = false;
  });
  return ok;
}

inline void require_common_independent(const PairContext& ctx, const ElementSet& i) {
  if (!ctx.common_independent(i)) {
    throw Error(Errc::not_common_independent, "set is not independent in both matroids");
  }
}

inline bool feasible(const PairContext& ctx, const ElementSet& i,
                     std::size_t bound = exhaustive_bound(12)) {
  require_common_independent(ctx, i);
  return check_cond(ctx.contract_both(i), bound);
}

inline bool nice_feasible(const PairContext& ctx, const ElementSet& i) {
  require_common_independent(ctx, i);
  return check_cond_plus(ctx.contract_both(i));
}

/// One member of B(M,N,X): a base of M↾X that is also a base of N.X.
inline std::optional<ElementSet> common_base_B(const PairContext& ctx, const ElementSet& x) {
  ctx.m().check_subset(x);
  const IntersectionCertificate c = restricted_pair_solve(ctx, x);
  const int size = static_cast<int>(c.common.size());
  if (size == ctx.m().rank(x) && size == rank_contracted_onto(ctx.n(), x)) return c.common;
  return std::nullopt;
}

/// Membership test for B(M,N,X).
inline bool in_common_bases(const PairContext& ctx, const ElementSet& x, const ElementSet& b) {
  if (!b.is_subset_of(x)) return false;
  const Matroid nx = contract_onto(ctx.n(), x);
  return ctx.m().is_independent(b) && static_cast<int>(b.size()) == ctx.m().rank(x) &&
         nx.is_independent(b) && static_cast<int>(b.size()) == nx.rank();
}

}  // namespace matroidkit

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

// Packing/covering for a finite family (M_i : i < k) on a common ground set,
// through intersection on the product E × Θ: element (e, i) is e·k + i,
// M is the sum of the copies of the M_i and N lets each {e} × Θ contribute
// at most one element.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroidkit/core.hpp"
#include "matroidkit/intersect.hpp"
#include "matroidkit/mixed.hpp"

namespace matroidkit {

struct MatroidFamily {
  std::vector<Matroid> members;

  std::size_t k() const { return members.size(); }
  const Matroid& operator[](std::size_t i) const { return members.at(i); }
  const ElementSet& ground() const { return members.front().ground(); }
  std::size_t capacity() const { return members.front().capacity(); }
  ElementSet empty_set() const { return members.front().empty_set(); }
};

inline void check_family(const MatroidFamily& fam) {
  if (fam.members.empty()) throw Error(Errc::precondition_violated, "family needs k >= 1");
  for (const auto& m : fam.members) {
    if (m.capacity() != fam.capacity() || m.ground() != fam.ground()) {
      throw Error(Errc::universe_mismatch, "family members must share one ground set");
    }
  }
}

struct LiftedFamily {
  Matroid m;
  Matroid n;
  std::size_t k = 0;
  std::size_t base_capacity = 0;

  Element lift(Element e, std::size_t i) const { return static_cast<Element>(e * k + i); }
  std::pair<Element, std::size_t> origin(Element x) const {
    return {static_cast<Element>(x / k), x % k};
  }
  /// {(e, i) : e ∈ E} for one index i.
  ElementSet slice(const ElementSet& ground, std::size_t i) const {
    ElementSet out(base_capacity * k);
    for (Element e : ground) out.insert(lift(e, i));
    return out;
  }
};

inline LiftedFamily lift_family(const MatroidFamily& fam) {
  check_family(fam);
  const std::size_t k = fam.k();
  const std::size_t cap = fam.capacity() * k;
  if (cap > kMaxElements) {
    throw Error(Errc::too_large, "k·|E| = " + std::to_string(cap) + " exceeds " +
                                     std::to_string(kMaxElements));
  }
  std::vector<std::string> names(cap);
  for (Element e = 0; e < fam.capacity(); ++e) {
    for (std::size_t i = 0; i < k; ++i) {
      names[e * k + i] = fam.members.front().labels().label(e) + "#" + std::to_string(i);
    }
  }
  auto labels = std::make_shared<const GroundSet>(names);
  std::vector<Matroid> copies;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Element> to(fam.capacity());
    for (Element e = 0; e < fam.capacity(); ++e) to[e] = static_cast<Element>(e * k + i);
    copies.push_back(relabel(fam[i], std::move(to), cap, labels));
  }
  std::vector<PartitionBlock> blocks;
  for (Element e : fam.ground()) {
    ElementSet block(cap);
    for (std::size_t i = 0; i < k; ++i) block.insert(static_cast<Element>(e * k + i));
    blocks.push_back({block, 1});
  }
  return LiftedFamily{direct_sum(copies, labels), partition(cap, std::move(blocks), names), k,
                      fam.capacity()};
}

struct PackCovResult {
  ElementSet e_p;
  ElementSet e_c;
  std::vector<ElementSet> s;  // packing of (M_i↾E_p)
  std::vector<ElementSet> i;  // covering of (M_i.E_c)
  ElementSet lifted;          // the common independent set on E × Θ
};

struct PackCovOptions {
  SolverKind solver = SolverKind::classic;
  std::vector<std::size_t> cofinitary;  // members whose slices form E1 (mixed only)
};

/// Re-checks the packing and covering from the family's own oracles.
inline bool verify_packcov(const MatroidFamily& fam, const PackCovResult& r) {
  if (fam.members.empty() || r.s.size() != fam.k() || r.i.size() != fam.k()) return false;
  const std::size_t cap = fam.capacity();
  auto same_space = [&](const ElementSet& x) { return x.universe() == cap; };
  if (!same_space(r.e_p) || !same_space(r.e_c)) return false;
  if (r.e_p.intersects(r.e_c) || (r.e_p | r.e_c) != fam.ground()) return false;
  ElementSet used(cap);
  ElementSet covered(cap);
  for (std::size_t j = 0; j < fam.k(); ++j) {
    const ElementSet& s = r.s[j];
    const ElementSet& c = r.i[j];
    if (!same_space(s) || !same_space(c)) return false;
    if (!s.is_subset_of(r.e_p) || s.intersects(used)) return false;
    used |= s;
    if (!spans(fam[j], s, r.e_p)) return false;
    if (!c.is_subset_of(r.e_c)) return false;
    if (!contract(fam[j], r.e_p).is_independent(c)) return false;
    covered |= c;
  }
  return covered == r.e_c;
}

/// Complementary slackness for J_i = S_i ∪ I_i and the partition (E_p, E_c).
inline bool slackness_holds(const MatroidFamily& fam, const PackCovResult& r) {
  if (r.s.size() != fam.k() || r.i.size() != fam.k()) return false;
  ElementSet cover = fam.empty_set();
  for (std::size_t a = 0; a < fam.k(); ++a) {
    const ElementSet j = r.s[a] | r.i[a];
    if (!fam[a].is_independent(j)) return false;
    if (!spans(fam[a], j & r.e_p, r.e_p)) return false;
    for (std::size_t b = a + 1; b < fam.k(); ++b) {
      if (((r.s[b] | r.i[b]) & j & r.e_p).size() != 0) return false;
    }
    cover |= j;
  }
  return r.e_c.is_subset_of(cover);
}

/// |E_c| + Σ r_{M_i}(E_p).
inline int packcov_value(const MatroidFamily& fam, const PackCovResult& r) {
  int total = static_cast<int>(r.e_c.size());
  for (const auto& m : fam.members) total += m.rank(r.e_p);
  return total;
}

inline PackCovResult packcov_solve(const MatroidFamily& fam, const PackCovOptions& opt = {}) {
  const LiftedFamily lf = lift_family(fam);
  const PairContext ctx(lf.m, lf.n);
  IntersectionCertificate cert;
  if (opt.solver == SolverKind::classic) {
    cert = edmonds_solve(ctx);
  } else {
    ElementSet e1 = ctx.empty_set();
    for (std::size_t i : opt.cofinitary) {
      if (i >= fam.k()) throw Error(Errc::precondition_violated, "cofinitary index out of range");
      e1 |= lf.slice(fam.ground(), i);
    }
    cert = swap_sides(mixed_solve(lf.n, make_split(lf.m, e1)));
  }
  if (!verify_certificate(ctx, cert)) {
    throw Error(Errc::certificate_invalid, "lifted certificate failed verification");
  }
  PackCovResult r{fam.empty_set(), fam.empty_set(),
                  std::vector<ElementSet>(fam.k(), fam.empty_set()),
                  std::vector<ElementSet>(fam.k(), fam.empty_set()), cert.common};
  for (Element x : cert.n_side) r.e_c.insert(lf.origin(x).first);
  r.e_p = fam.ground() - r.e_c;
  for (Element x : cert.common) {
    const auto [e, i] = lf.origin(x);
    if (r.e_c.contains(e)) {
      r.i[i].insert(e);
    } else {
      r.s[i].insert(e);
    }
  }
  if (!verify_packcov(fam, r)) {
    throw Error(Errc::certificate_invalid, "extracted packing/covering failed verification");
  }
  return r;
}

/// Intersection certificate for (M, N) from a packing/covering of (M, N*).
/// I_M is a base of M↾E_p inside S_M; I_N is an N-base of E_c inside R_M.
inline IntersectionCertificate derive_intersection(const Matroid& m, const Matroid& n,
                                                   const PackCovResult& pc) {
  const PairContext ctx(m, n);
  const MatroidFamily fam{{m, dual(n)}};
  if (!verify_packcov(fam, pc)) {
    throw Error(Errc::invalid_input_packcov, "not a packing/covering of (M, N*)");
  }
  const ElementSet i_m = greedy_base(m, pc.s[0]);
  const ElementSet i_n = greedy_base(n, pc.i[0]);
  IntersectionCertificate cert{i_m | i_n, pc.e_p, pc.e_c};
  if (!verify_certificate(ctx, cert)) {
    throw Error(Errc::certificate_invalid, "derived certificate failed verification");
  }
  return cert;
}

}  // namespace matroidkit

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

// Exhaustive ground truth. Nothing here calls the solvers: every answer is
// obtained by scanning subsets (or orientations) directly through the rank
// oracles. Witness ties go to the smallest bitmask.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matroidkit/core.hpp"
#include "matroidkit/orient.hpp"
#include "matroidkit/packcov.hpp"

namespace matroidkit {

inline void require_within(std::size_t size, std::size_t bound, const char* what) {
  if (size > bound) {
    throw Error(Errc::too_large, std::string(what) + " over " + std::to_string(size) +
                                     " elements exceeds bound " + std::to_string(bound));
  }
}

/// Every subset of a ground set, addressed by a local bitmask.
class SubsetTable {
 public:
  explicit SubsetTable(const ElementSet& ground)
      : elems_(ground.to_vector()), capacity_(ground.universe()),
        bits_(std::size_t{1} << elems_.size(), 0) {
    for (std::uint64_t mask = 1; mask < bits_.size(); ++mask) {
      const int low = std::countr_zero(mask);
      bits_[mask] = bits_[mask & (mask - 1)] | (std::uint64_t{1} << elems_[low]);
    }
  }
  std::size_t n() const { return elems_.size(); }
  std::uint64_t count() const { return bits_.size(); }
  ElementSet at(std::uint64_t mask) const { return ElementSet(capacity_, bits_[mask]); }
  std::uint64_t local(const ElementSet& s) const {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (s.contains(elems_[j])) mask |= std::uint64_t{1} << j;
    }
    return mask;
  }
  std::uint64_t full() const { return bits_.size() - 1; }

 private:
  std::vector<Element> elems_;
  std::size_t capacity_;
  std::vector<std::uint64_t> bits_;
};

/// indep[mask] for every subset; only sets whose largest-bit deletion is
/// independent reach the oracle.
inline std::vector<char> independence_table(const Matroid& m, const SubsetTable& t) {
  std::vector<char> indep(t.count(), 0);
  indep[0] = m.is_independent(t.at(0)) ? 1 : 0;
  for (std::uint64_t mask = 1; mask < t.count(); ++mask) {
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(mask));
    if (indep[mask ^ top] && m.is_independent(t.at(mask))) indep[mask] = 1;
  }
  return indep;
}

struct BruteCommon {
  int size = 0;
  ElementSet witness;
};

inline BruteCommon brute_max_common(const Matroid& m, const Matroid& n,
                                    std::size_t bound = exhaustive_bound(16)) {
  if (m.capacity() != n.capacity() || m.ground() != n.ground()) {
    throw Error(Errc::universe_mismatch, "M and N must share one ground set");
  }
  require_within(m.ground().size(), bound, "brute_max_common");
  const SubsetTable t(m.ground());
  const std::vector<char> im = independence_table(m, t);
  const std::vector<char> in = independence_table(n, t);
  BruteCommon best{0, t.at(0)};
  for (std::uint64_t mask = 0; mask < t.count(); ++mask) {
    if (im[mask] && in[mask] && std::popcount(mask) > best.size) {
      best = {std::popcount(mask), t.at(mask)};
    }
  }
  return best;
}

/// min over X of r_M(X) + r_N(E \ X).
inline int brute_minmax(const Matroid& m, const Matroid& n,
                        std::size_t bound = exhaustive_bound(16)) {
  if (m.capacity() != n.capacity() || m.ground() != n.ground()) {
    throw Error(Errc::universe_mismatch, "M and N must share one ground set");
  }
  require_within(m.ground().size(), bound, "brute_minmax");
  const SubsetTable t(m.ground());
  int best = -1;
  for (std::uint64_t mask = 0; mask < t.count(); ++mask) {
    const int v = m.rank(t.at(mask)) + n.rank(t.at(t.full() ^ mask));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

namespace detail {

struct WaveScan {
  SubsetTable t;
  std::vector<char> m_indep;
  std::vector<int> m_rank;
};

inline WaveScan wave_scan(const Matroid& m) {
  WaveScan s{SubsetTable(m.ground()), {}, {}};
  s.m_indep = independence_table(m, s.t);
  s.m_rank.assign(s.t.count(), 0);
  for (std::uint64_t mask = 1; mask < s.t.count(); ++mask) {
    if (s.m_indep[mask]) {
      s.m_rank[mask] = std::popcount(mask);
      continue;
    }
    int r = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      r = std::max(r, s.m_rank[mask ^ (rest & (~rest + 1))]);
    }
    s.m_rank[mask] = r;
  }
  return s;
}

/// Smallest B ⊆ W, B a base of M↾W, with B independent in N.W.
inline std::optional<std::uint64_t> wave_witness(const WaveScan& s, const Matroid& n,
                                                 std::uint64_t w) {
  const ElementSet outside = s.t.at(s.t.full() ^ w);
  const int r_out = n.rank(outside);
  const int need = s.m_rank[w];
  std::uint64_t sub = 0;
  while (true) {  // submasks of w in increasing order
    if (s.m_indep[sub] && std::popcount(sub) == need &&
        n.rank(s.t.at(sub) | outside) - r_out == need) {
      return sub;
    }
    if (sub == w) break;
    sub = (sub - w) & w;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool brute_is_wave(const Matroid& m, const Matroid& n, const ElementSet& w,
                          std::size_t bound = exhaustive_bound(10)) {
  require_within(m.ground().size(), bound, "brute_is_wave");
  const detail::WaveScan s = detail::wave_scan(m);
  return detail::wave_witness(s, n, s.t.local(w)).has_value();
}

/// Union of every wave, checked to be a wave itself.
inline ElementSet brute_largest_wave(const Matroid& m, const Matroid& n,
                                     std::size_t bound = exhaustive_bound(10)) {
  if (m.capacity() != n.capacity() || m.ground() != n.ground()) {
    throw Error(Errc::universe_mismatch, "M and N must share one ground set");
  }
  require_within(m.ground().size(), bound, "brute_largest_wave");
  const detail::WaveScan s = detail::wave_scan(m);
  std::uint64_t all = 0;
  for (std::uint64_t w = 0; w < s.t.count(); ++w) {
    if ((w | all) == all) continue;  // nothing new to learn
    if (detail::wave_witness(s, n, w)) all |= w;
  }
  if (!detail::wave_witness(s, n, all)) {
    throw Error(Errc::postcondition_failed, "union of waves is not a wave");
  }
  return s.t.at(all);
}

/// Every member of B(M,N,X): bases of M↾X that are also bases of N.X.
inline std::vector<ElementSet> brute_common_bases(const Matroid& m, const Matroid& n,
                                                  const ElementSet& x,
                                                  std::size_t bound = exhaustive_bound(12)) {
  m.check_subset(x);
  n.check_subset(x);
  require_within(x.size(), bound, "brute_common_bases");
  const ElementSet outside = n.ground() - x;
  const int r_out = n.rank(outside);
  const int r_nx = n.rank() - r_out;
  const int r_mx = m.rank(x);
  std::vector<ElementSet> out;
  for_each_subset(x, [&](const ElementSet& b) {
    const int size = static_cast<int>(b.size());
    if (size != r_mx || size != r_nx) return;
    if (m.is_independent(b) && n.rank(b | outside) - r_out == size) out.push_back(b);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// First orientation (bit e set: edge e points to its second endpoint) that
/// is above o everywhere.
inline std::optional<Orientation> brute_orientations(const DemandGraph& g,
                                                     std::size_t bound = exhaustive_bound(14)) {
  require_within(g.edges.size(), bound, "brute_orientations");
  const std::size_t m = g.edges.size();
  std::vector<int> need(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) need[v] = g.need(v);
  std::vector<int> in(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(in.begin(), in.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      ++in[((mask >> e) & 1U) ? g.edges[e].v : g.edges[e].u];
    }
    bool ok = true;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) ok = in[v] >= need[v];
    if (!ok) continue;
    Orientation head(m);
    for (std::size_t e = 0; e < m; ++e) {
      head[e] = ((mask >> e) & 1U) ? g.edges[e].v : g.edges[e].u;
    }
    return head;
  }
  return std::nullopt;
}

/// max |⋃ I_i| over independent I_i ∈ M_i.
inline int brute_union_rank(const MatroidFamily& fam, std::size_t bound = exhaustive_bound(10)) {
  check_family(fam);
  require_within(fam.ground().size(), bound, "brute_union_rank");
  const SubsetTable t(fam.ground());
  std::vector<char> reach(t.count(), 0);
  reach[0] = 1;
  for (const auto& m : fam.members) {
    const std::vector<char> indep = independence_table(m, t);
    std::vector<std::uint64_t> sets;
    for (std::uint64_t mask = 0; mask < t.count(); ++mask) {
      if (indep[mask]) sets.push_back(mask);
    }
    std::vector<char> next(t.count(), 0);
    for (std::uint64_t a = 0; a < t.count(); ++a) {
      if (!reach[a]) continue;
      for (std::uint64_t i : sets) next[a | i] = 1;
    }
    reach = std::move(next);
  }
  int best = 0;
  for (std::uint64_t a = 0; a < t.count(); ++a) {
    if (reach[a]) best = std::max(best, std::popcount(a));
  }
  return best;
}

// Small matroids up to isomorphism ---------------------------------------------

/// Matroid on {0..n-1}, n <= 6, as the bitmask of its independent sets
/// (bit S set when subset S is independent).
struct SmallMatroid {
  int n = 0;
  std::uint64_t family = 0;

  bool independent(std::uint64_t s) const { return ((family >> s) & 1U) != 0; }
  int rank(std::uint64_t s) const {
    int best = 0;
    for (std::uint64_t sub = s;; sub = (sub - 1) & s) {
      if (independent(sub)) best = std::max(best, std::popcount(sub));
      if (sub == 0) break;
    }
    return best;
  }
  Matroid to_matroid() const {
    const int r = rank((std::uint64_t{1} << n) - 1);
    std::vector<ElementSet> bases;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (independent(s) && std::popcount(s) == r) {
        bases.push_back(ElementSet(static_cast<std::size_t>(n), s));
      }
    }
    return explicit_matroid(static_cast<std::size_t>(n), std::move(bases), FamilyKind::bases);
  }
};

inline bool operator<(const SmallMatroid& a, const SmallMatroid& b) {
  return std::pair(a.n, a.family) < std::pair(b.n, b.family);
}

namespace detail {

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t permute_mask(std::uint64_t s, const std::vector<int>& p) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if ((s >> j) & 1U) out |= std::uint64_t{1} << p[j];
  }
  return out;
}

inline std::uint64_t canonical_family(int n, std::uint64_t family,
                                      const std::vector<std::vector<int>>& perms) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& p : perms) {
    std::uint64_t mapped = 0;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if ((family >> s) & 1U) mapped |= std::uint64_t{1} << permute_mask(s, p);
    }
    best = std::min(best, mapped);
  }
  return best;
}

inline bool small_axioms(int n, std::uint64_t family) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if ((family & 1U) == 0) return false;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (!((family >> s) & 1U)) continue;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      if (!((family >> (s ^ (rest & (~rest + 1)))) & 1U)) return false;
    }
  }
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if (!((family >> a) & 1U)) continue;
    for (std::uint64_t b = 0; b < subsets; ++b) {
      if (!((family >> b) & 1U) || std::popcount(b) <= std::popcount(a)) continue;
      bool grows = false;
      for (std::uint64_t rest = b & ~a; rest && !grows; rest &= rest - 1) {
        grows = ((family >> (a | (rest & (~rest + 1)))) & 1U) != 0;
      }
      if (!grows) return false;
    }
  }
  return true;
}

/// Single-element extensions of m onto n+1 elements: the coloop extension and
/// one extension per linear subclass of hyperplanes.
inline std::vector<std::uint64_t> extensions(const SmallMatroid& m) {
  const int n = m.n;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<int> rk(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) rk[s] = m.rank(s);
  const int r = rk[subsets - 1];
  std::vector<std::uint64_t> hyper;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (rk[s] != r - 1) continue;
    bool flat = true;
    for (int e = 0; e < n && flat; ++e) {
      if (!((s >> e) & 1U) && rk[s | (std::uint64_t{1} << e)] == rk[s]) flat = false;
    }
    if (flat) hyper.push_back(s);
  }
  const std::uint64_t new_bit = subsets;
  std::vector<std::uint64_t> out;
  // coloop
  {
    std::uint64_t fam = m.family;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if (m.independent(s)) fam |= std::uint64_t{1} << (s | new_bit);
    }
    out.push_back(fam);
  }
  const std::size_t h = hyper.size();
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << h); ++chosen) {
    bool linear = true;
    for (std::size_t a = 0; a < h && linear; ++a) {
      if (!((chosen >> a) & 1U)) continue;
      for (std::size_t b = a + 1; b < h && linear; ++b) {
        if (!((chosen >> b) & 1U)) continue;
        const std::uint64_t meet = hyper[a] & hyper[b];
        if (rk[meet] != r - 2) continue;
        for (std::size_t c = 0; c < h && linear; ++c) {
          if ((meet & ~hyper[c]) == 0 && !((chosen >> c) & 1U)) linear = false;
        }
      }
    }
    if (!linear) continue;
    std::uint64_t fam = m.family;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if (!m.independent(s)) continue;
      // s + new is independent iff new is outside cl(s).
      bool spanned = rk[s] == r;
      if (!spanned) {
        spanned = true;
        for (std::size_t c = 0; c < h && spanned; ++c) {
          if ((s & ~hyper[c]) == 0 && !((chosen >> c) & 1U)) spanned = false;
        }
      }
      if (!spanned) fam |= std::uint64_t{1} << (s | new_bit);
    }
    out.push_back(fam);
  }
  return out;
}

}  // namespace detail

/// All matroids on exactly n elements up to isomorphism (n <= 6), each in
/// canonical form, sorted.
inline std::vector<SmallMatroid> all_matroids(int n) {
  if (n < 0 || n > 6) throw Error(Errc::too_large, "matroid enumeration is limited to 6 elements");
  std::vector<SmallMatroid> level{{0, 1}};
  for (int size = 0; size < n; ++size) {
    const auto perms = detail::permutations(size + 1);
    std::set<std::uint64_t> seen;
    for (const SmallMatroid& m : level) {
      for (std::uint64_t fam : detail::extensions(m)) {
        if (!detail::small_axioms(size + 1, fam)) continue;
        seen.insert(detail::canonical_family(size + 1, fam, perms));
      }
    }
    level.clear();
    for (std::uint64_t fam : seen) level.push_back({size + 1, fam});
  }
  return level;
}

// Small simple graphs up to isomorphism ----------------------------------------

struct SmallGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Simple graphs on exactly `vertices` vertices with at most `max_edges`
/// edges, one per isomorphism class.
inline std::vector<SmallGraph> all_simple_graphs(std::size_t vertices, std::size_t max_edges) {
  if (vertices > 7) throw Error(Errc::too_large, "graph enumeration is limited to 7 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a + 1; b < vertices; ++b) pairs.emplace_back(a, b);
  }
  const auto perms = detail::permutations(static_cast<int>(vertices));
  auto pair_index = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[j] == std::pair(a, b)) return j;
    }
    return pairs.size();
  };
  std::vector<std::vector<std::size_t>> image(perms.size(), std::vector<std::size_t>(pairs.size()));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      image[p][j] = pair_index(static_cast<std::size_t>(perms[p][pairs[j].first]),
                               static_cast<std::size_t>(perms[p][pairs[j].second]));
    }
  }
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_edges) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (std::size_t p = 0; p < perms.size(); ++p) {
      std::uint64_t mapped = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if ((mask >> j) & 1U) mapped |= std::uint64_t{1} << image[p][j];
      }
      best = std::min(best, mapped);
    }
    seen.insert(best);
  }
  std::vector<SmallGraph> out;
  for (std::uint64_t mask : seen) {
    SmallGraph g{vertices, {}};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if ((mask >> j) & 1U) g.edges.push_back(pairs[j]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Calls fn(o) for every demand vector with |o(v)| <= d(v).
template <typename Fn>
void for_each_demand(const DemandGraph& g, Fn&& fn) {
  std::vector<int> deg(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::vector<int> o(g.vertex_count());
  for (std::size_t v = 0; v < o.size(); ++v) o[v] = -deg[v];
  while (true) {
    fn(o);
    std::size_t v = 0;
    while (v < o.size() && o[v] == deg[v]) {
      o[v] = -deg[v];
      ++v;
    }
    if (v == o.size()) return;
    ++o[v];
  }
}

}  // namespace matroidkit

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

// Closure, circuits and the elementary exchange operations on top of the
// rank oracle. Ties are always broken by smallest element index.

#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/error.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Bound on |E| for exhaustive checks; MATROIDKIT_MAX_EXHAUSTIVE overrides.
inline std::size_t exhaustive_bound(std::size_t fallback) {
  if (const char* env = std::getenv("MATROIDKIT_MAX_EXHAUSTIVE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

inline bool is_independent(const Matroid& m, const ElementSet& s) {
  return m.is_independent(s);
}

inline int rank(const Matroid& m, const ElementSet& s) { return m.rank(s); }

/// span(S) = S ∪ {e : r(S + e) = r(S)}.
inline ElementSet span(const Matroid& m, const ElementSet& s) {
  const int r = m.rank(s);
  ElementSet out = s;
  for (Element e : m.ground() - s) {
    if (m.rank(s.with(e)) == r) out.insert(e);
  }
  return out;
}

inline bool spans(const Matroid& m, const ElementSet& s, const ElementSet& target) {
  return m.rank(s | target) == m.rank(s);
}

inline bool is_spanning(const Matroid& m, const ElementSet& s) {
  return m.rank(s) == m.rank();
}

inline bool is_circuit(const Matroid& m, const ElementSet& c) {
  if (c.empty() || m.is_independent(c)) return false;
  for (Element e : c) {
    if (!m.is_independent(c.without(e))) return false;
  }
  return true;
}

inline ElementSet loops(const Matroid& m) {
  ElementSet out = m.empty_set();
  for (Element e : m.ground()) {
    if (m.rank(ElementSet::of(m.capacity(), {e})) == 0) out.insert(e);
  }
  return out;
}

/// Greedy base of M↾S scanning S in index order.
inline ElementSet greedy_base(const Matroid& m, const ElementSet& s,
                              ElementSet start) {
  for (Element e : s - start) {
    if (m.is_independent(start.with(e))) start.insert(e);
  }
  return start;
}

inline ElementSet greedy_base(const Matroid& m, const ElementSet& s) {
  return greedy_base(m, s, m.empty_set());
}

/// C_M(e, I): the unique circuit inside I + e through e.
inline ElementSet fundamental_circuit(const Matroid& m, Element e, const ElementSet& i) {
  m.check_subset(i);
  if (!m.ground().contains(e)) {
    throw Error(Errc::universe_mismatch, "element not in the ground set");
  }
  if (i.contains(e)) throw Error(Errc::not_defined, "element already in I");
  if (!m.is_independent(i)) throw Error(Errc::not_defined, "I is dependent");
  const ElementSet ie = i.with(e);
  if (m.is_independent(ie)) throw Error(Errc::not_defined, "element not spanned by I");
  ElementSet c = ElementSet::of(m.capacity(), {e});
  for (Element f : i) {
    if (m.is_independent(ie.without(f))) c.insert(f);
  }
  return c;
}

/// C_{M*}(e, B).
inline ElementSet fundamental_cocircuit(const Matroid& m, Element e, const ElementSet& b) {
  return fundamental_circuit(dual(m), e, b);
}

/// Replaces f_j by e_j for every pair, after checking the ordering condition
/// that makes the swaps simultaneous: f_j ∈ C(e_j, I) and f_j ∉ C(e_k, I) for
/// k < j. The result is independent with the same span as I.
inline ElementSet simultaneous_exchange(const Matroid& m, const ElementSet& i,
                                        const std::vector<std::pair<Element, Element>>& pairs) {
  if (!m.is_independent(i)) {
    throw Error(Errc::precondition_violated, "I is dependent");
  }
  std::vector<ElementSet> circuits;
  ElementSet out = i;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [e, f] = pairs[j];
    const std::string where = "pair " + std::to_string(j);
    if (i.contains(e) || !i.contains(f) || m.is_independent(i.with(e))) {
      throw Error(Errc::precondition_violated, where + ": need e in span(I)\\I and f in I");
    }
    circuits.push_back(fundamental_circuit(m, e, i));
    if (!circuits.back().contains(f)) {
      throw Error(Errc::precondition_violated, where + ": f not in C(e, I)");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (circuits[k].contains(f)) {
        throw Error(Errc::precondition_violated,
                    where + ": f lies in an earlier circuit (pair " + std::to_string(k) + ")");
      }
    }
    out.insert(e);
    out.erase(f);
  }
  return out;
}

/// A circuit through e inside (C ∪ ⋃ C_x) \ X, where X is the key set of
/// `cx`. Found as the fundamental circuit of e over a greedy base of the
/// remaining elements, so the choice is deterministic.
inline ElementSet circuit_eliminate(const Matroid& m, const ElementSet& c, Element e,
                                    const std::map<Element, ElementSet>& cx) {
  if (!c.contains(e) || !is_circuit(m, c)) {
    throw Error(Errc::precondition_violated, "C must be a circuit through e");
  }
  ElementSet x = m.empty_set();
  ElementSet y = c;
  for (const auto& [key, circ] : cx) {
    if (key == e || !c.contains(key)) {
      throw Error(Errc::precondition_violated, "keys must lie in C - e");
    }
    if (!is_circuit(m, circ) || circ.contains(e)) {
      throw Error(Errc::precondition_violated, "each C_x must be a circuit avoiding e");
    }
    x.insert(key);
    y |= circ;
  }
  for (const auto& [key, circ] : cx) {
    if ((circ & x) != ElementSet::of(m.capacity(), {key})) {
      throw Error(Errc::precondition_violated, "C_x must meet X exactly in x");
    }
  }
  y -= x;
  const ElementSet base = greedy_base(m, y.without(e));
  return fundamental_circuit(m, e, base);
}

/// Smallest f ∈ C \ I with e ∈ C(f, I), for a circuit C ⊆ span(I) and
/// e ∈ I ∩ C.
inline Element outgoing_from_circuit(const Matroid& m, const ElementSet& i,
                                     const ElementSet& c, Element e) {
  if (!m.is_independent(i)) throw Error(Errc::precondition_violated, "I is dependent");
  if (!is_circuit(m, c)) throw Error(Errc::precondition_violated, "C is not a circuit");
  if (!c.is_subset_of(span(m, i))) {
    throw Error(Errc::precondition_violated, "C is not spanned by I");
  }
  if (!i.contains(e) || !c.contains(e)) {
    throw Error(Errc::precondition_violated, "e must lie in I ∩ C");
  }
  for (Element f : c - i) {
    if (fundamental_circuit(m, f, i).contains(e)) return f;
  }
  throw Error(Errc::postcondition_failed, "no outgoing element found");
}

/// Connected components of the circuit hypergraph. Uses the fundamental
/// circuits of a greedy base: two elements share a component iff they are
/// linked through a chain of those circuits.
inline std::vector<ElementSet> components(const Matroid& m) {
  const std::size_t n = m.capacity();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const ElementSet base = greedy_base(m, m.ground());
  for (Element f : m.ground() - base) {
    for (Element g : fundamental_circuit(m, f, base)) parent[find(g)] = find(f);
  }
  std::map<Element, ElementSet> classes;
  for (Element e : m.ground()) {
    auto it = classes.try_emplace(find(e), ElementSet(n)).first;
    it->second.insert(e);
  }
  std::vector<ElementSet> out;
  for (auto& [root, cls] : classes) out.push_back(cls);
  std::sort(out.begin(), out.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.first() < b.first(); });
  return out;
}

struct AxiomReport {
  bool empty_independent = true;
  bool downward_closed = true;
  bool augmentation = true;
  bool ok() const { return empty_independent && downward_closed && augmentation; }
};

/// Exhaustive check of the independence axioms: ∅ independent, downward
/// closure, and augmentation of a non-maximal I from a maximal J.
inline AxiomReport axiom_report(const Matroid& m, std::size_t bound = exhaustive_bound(12)) {
  const ElementSet ground = m.ground();
  if (ground.size() > bound) {
    throw Error(Errc::too_large, "axiom_check over " + std::to_string(ground.size()) +
                                     " elements exceeds bound " + std::to_string(bound));
  }
  AxiomReport report;
  std::vector<ElementSet> indep;
  std::vector<ElementSet> maximal;
  report.empty_independent = m.is_independent(m.empty_set());
  for_each_subset(ground, [&](const ElementSet& s) {
    if (!m.is_independent(s)) return;
    indep.push_back(s);
    for (Element e : s) {
      if (!m.is_independent(s.without(e))) report.downward_closed = false;
    }
  });
  auto is_maximal = [&](const ElementSet& s) {
    for (Element e : ground - s) {
      if (m.is_independent(s.with(e))) return false;
    }
    return true;
  };
  std::vector<ElementSet> non_maximal;
  for (const auto& s : indep) (is_maximal(s) ? maximal : non_maximal).push_back(s);
  for (const auto& i : non_maximal) {
    for (const auto& j : maximal) {
      bool found = false;
      for (Element e : j - i) {
        if (m.is_independent(i.with(e))) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.augmentation = false;
        return report;
      }
    }
  }
  return report;
}

inline bool axiom_check(const Matroid& m, std::size_t bound = exhaustive_bound(12)) {
  return axiom_report(m, bound).ok();
}

}  // namespace matroidkit

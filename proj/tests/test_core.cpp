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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"

namespace {

using namespace mktest;

ElementSet set_of(std::size_t n, std::initializer_list<Element> xs) { return ElementSet::of(n, xs); }

// K4 with edges 01 02 03 12 13 23.
Matroid k4() { return graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

TEST(Constructors, UniformRanks) {
  const Matroid u = uniform(4, 2);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_TRUE(u.is_independent(set_of(4, {0, 3})));
  EXPECT_FALSE(u.is_independent(set_of(4, {0, 1, 3})));
  EXPECT_EQ(free_matroid(3).rank(), 3);
  EXPECT_EQ(rank_zero(3).rank(), 0);
  EXPECT_THROW(uniform(3, 4), Error);
}

TEST(Constructors, GraphicCycles) {
  const Matroid m = k4();
  EXPECT_EQ(m.rank(), 3);
  EXPECT_FALSE(m.is_independent(set_of(6, {0, 1, 3})));  // triangle 012
  EXPECT_TRUE(m.is_independent(set_of(6, {0, 1, 2})));   // star at 0
  const Matroid loop = graphic(2, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_EQ(loops(loop), set_of(3, {0}));
  EXPECT_FALSE(loop.is_independent(set_of(3, {1, 2})));
}

TEST(Constructors, PartitionCaps) {
  const Matroid p = partition(5, {{set_of(5, {0, 1, 2}), 1}, {set_of(5, {3, 4}), 2}});
  EXPECT_EQ(p.rank(), 3);
  EXPECT_FALSE(p.is_independent(set_of(5, {0, 1})));
  EXPECT_TRUE(p.is_independent(set_of(5, {0, 3, 4})));
}

TEST(Constructors, ExplicitBases) {
  const Matroid m = explicit_matroid(3, {set_of(3, {0, 1}), set_of(3, {0, 2})});
  EXPECT_TRUE(m.is_independent(set_of(3, {2})));
  EXPECT_FALSE(m.is_independent(set_of(3, {1, 2})));
  EXPECT_EQ(loops(m).size(), 0U);
}

TEST(Constructors, EveryKindSatisfiesAxiomsUpToEight) {
  std::vector<Matroid> ms = {uniform(8, 3), k4(), partition(7, {{set_of(7, {0, 1, 2}), 2}, {set_of(7, {4, 5}), 1}}),
                             dual(uniform(6, 2)), contract(k4(), set_of(6, {0})),
                             delete_set(k4(), set_of(6, {5})),
                             concat_sum({uniform(6, 1), uniform(2, 1, {{"x", "y"}})})};
  for (const auto& m : ms) EXPECT_TRUE(axiom_check(m));
}

TEST(AxiomCheck, HonestOnMalformedFamilies) {
  EXPECT_TRUE(axiom_check(uniform(4, 2)));
  // {∅, a, b}: augmentation from {a} into the maximal {b} works, so it is a matroid.
  const Matroid ok = explicit_matroid(2, {ElementSet(2), set_of(2, {0}), set_of(2, {1})},
                                      FamilyKind::independent_sets);
  EXPECT_TRUE(axiom_check(ok));
  // {∅, a, b, c, ab}: {a} cannot grow using the maximal set {c}.
  const Matroid bad = explicit_matroid(
      3, {ElementSet(3), set_of(3, {0}), set_of(3, {1}), set_of(3, {2}), set_of(3, {0, 1})},
      FamilyKind::independent_sets);
  EXPECT_FALSE(axiom_report(bad).augmentation);
  const Matroid no_empty = explicit_matroid(2, {set_of(2, {0})}, FamilyKind::independent_sets);
  EXPECT_FALSE(axiom_report(no_empty).empty_independent);
  EXPECT_FALSE(axiom_check(no_empty));
}

TEST(AxiomCheck, BoundIsEnforced) {
  EXPECT_THROW(axiom_check(uniform(14, 3)), Error);
  EXPECT_NO_THROW(axiom_check(uniform(14, 3), 14));
}

TEST(Duality, InvolutionOnAllSmallMatroids) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : small_matroids(n)) {
      EXPECT_TRUE(same_oracle(dual(dual(m)), m));
      EXPECT_EQ(dual(m).rank(), n - m.rank());
    }
  }
}

TEST(Duality, UniformDual) {
  EXPECT_TRUE(same_oracle(dual(uniform(5, 2)), uniform(5, 3)));
  EXPECT_TRUE(same_oracle(dual(free_matroid(3)), rank_zero(3)));
}

TEST(Minors, DeletionAndContractionCommute) {
  for (const auto& m : small_matroids(5)) {
    const ElementSet g = m.ground();
    for_each_subset(g, [&](const ElementSet& x) {
      const ElementSet rest = g - x;
      for_each_subset(rest, [&](const ElementSet& y) {
        if (y.size() > 2) return;
        EXPECT_TRUE(same_oracle(delete_set(contract(m, x), y), contract(delete_set(m, y), x)));
      });
    });
  }
}

TEST(Minors, ContractionIsDualOfDeletion) {
  for (const auto& m : small_matroids(5)) {
    for_each_subset(m.ground(), [&](const ElementSet& x) {
      EXPECT_TRUE(same_oracle(contract(m, x), dual(delete_set(dual(m), x))));
    });
  }
}

TEST(Minors, ContractOntoIndependence) {
  // I ⊆ X is independent in M.X iff I ⊆ span_{M*}(X - I).
  for (const auto& m : small_matroids(5)) {
    const Matroid md = dual(m);
    for_each_subset(m.ground(), [&](const ElementSet& x) {
      const Matroid mx = contract_onto(m, x);
      for_each_subset(x, [&](const ElementSet& i) {
        EXPECT_EQ(mx.is_independent(i), i.is_subset_of(span(md, x - i)));
      });
    });
  }
}

TEST(Minors, CompactRelabelsOntoPrefix) {
  const Matroid m = k4();
  const Matroid r = compact(delete_set(m, set_of(6, {1, 4})));
  EXPECT_EQ(r.capacity(), 4U);
  EXPECT_EQ(r.rank(), 3);
  EXPECT_EQ(r.labels().labels_of(r.ground()).size(), 4U);
}

TEST(Span, ExtensiveMonotoneIdempotent) {
  for (const auto& m : small_matroids(5)) {
    for_each_subset(m.ground(), [&](const ElementSet& s) {
      const ElementSet sp = span(m, s);
      EXPECT_TRUE(s.is_subset_of(sp));
      EXPECT_EQ(span(m, sp), sp);
      EXPECT_EQ(m.rank(sp), m.rank(s));
      for (Element e : m.ground() - s) EXPECT_TRUE(sp.is_subset_of(span(m, s.with(e))));
    });
  }
}

TEST(Span, FundamentalCircuitCharacterisation) {
  for (const auto& m : small_matroids(5)) {
    for_each_subset(m.ground(), [&](const ElementSet& s) {
      const ElementSet b = greedy_base(m, s);
      const ElementSet sp = span(m, s);
      for (Element e : m.ground() - s) {
        const bool has_circuit = !m.is_independent(b.with(e));
        EXPECT_EQ(sp.contains(e), has_circuit);
        if (has_circuit) {
          const ElementSet c = fundamental_circuit(m, e, b);
          EXPECT_TRUE(is_circuit(m, c));
          EXPECT_TRUE(c.contains(e));
          EXPECT_TRUE(c.without(e).is_subset_of(b));
        }
      }
    });
  }
}

TEST(Circuits, FundamentalErrors) {
  const Matroid m = uniform(3, 1);
  const ElementSet i = set_of(3, {0});
  EXPECT_EQ(fundamental_circuit(m, 1, i), set_of(3, {0, 1}));
  EXPECT_THROW(fundamental_circuit(m, 0, i), Error);
  EXPECT_THROW(fundamental_circuit(m, 1, set_of(3, {0, 2})), Error);
  EXPECT_THROW(fundamental_circuit(free_matroid(3), 1, i), Error);
}

TEST(Circuits, FundamentalCocircuitMeetsBaseOnce) {
  const Matroid m = k4();
  const ElementSet b = greedy_base(m, m.ground());
  for (Element e : b) {
    // a cocircuit of M is a circuit of M*, and the complement of B is a base of M*
    const ElementSet d = fundamental_cocircuit(m, e, m.ground() - b);
    EXPECT_TRUE(is_circuit(dual(m), d));
    EXPECT_EQ((d & b).size(), 1U);
  }
}

TEST(Circuits, EliminationStaysInsideUnion) {
  const Matroid m = k4();
  // C = triangle 01,02,12 (elements 0,1,3); C_x for x = 1 (edge 02): cycle 02,03,23 = {1,2,5}
  const ElementSet c = set_of(6, {0, 1, 3});
  std::map<Element, ElementSet> cx{{1, set_of(6, {1, 2, 5})}};
  const ElementSet out = circuit_eliminate(m, c, 0, cx);
  EXPECT_TRUE(is_circuit(m, out));
  EXPECT_TRUE(out.contains(0));
  EXPECT_FALSE(out.contains(1));
  EXPECT_TRUE(out.is_subset_of(set_of(6, {0, 2, 3, 5})));
  EXPECT_THROW(circuit_eliminate(m, set_of(6, {0, 1}), 0, {}), Error);
}

TEST(Circuits, EliminationExhaustiveSingleKey) {
  for (const auto& m : small_matroids(5)) {
    std::vector<ElementSet> circuits;
    for_each_subset(m.ground(), [&](const ElementSet& s) {
      if (is_circuit(m, s)) circuits.push_back(s);
    });
    for (const auto& c : circuits) {
      for (Element e : c) {
        for (Element x : c.without(e)) {
          for (const auto& d : circuits) {
            if (d.contains(e) || !d.contains(x) || (d & c.without(e)) != set_of(m.capacity(), {x})) continue;
            const ElementSet out = circuit_eliminate(m, c, e, {{x, d}});
            EXPECT_TRUE(is_circuit(m, out));
            EXPECT_TRUE(out.contains(e));
            EXPECT_TRUE(out.is_subset_of((c | d).without(x)));
          }
        }
      }
    }
  }
}

TEST(Exchange, SimultaneousEqualsSequential) {
  int checked = 0;
  for (const auto& m : small_matroids(5)) {
    const ElementSet i = greedy_base(m, m.ground());
    const std::vector<Element> outside = (m.ground() - i).to_vector();
    const std::vector<Element> inside = i.to_vector();
    // every ordered pair list of length two
    for (Element e1 : outside) {
      for (Element f1 : inside) {
        for (Element e2 : outside) {
          for (Element f2 : inside) {
            if (e1 == e2 || f1 == f2) continue;
            const std::vector<std::pair<Element, Element>> pairs{{e1, f1}, {e2, f2}};
            ElementSet out;
            try {
              out = simultaneous_exchange(m, i, pairs);
            } catch (const Error& err) {
              EXPECT_EQ(err.code(), Errc::precondition_violated);
              continue;
            }
            // one swap at a time, in the listed order
            ElementSet seq = i;
            for (const auto& [e, f] : pairs) {
              seq = seq.without(f).with(e);
              EXPECT_TRUE(m.is_independent(seq));
            }
            EXPECT_EQ(seq, out);
            EXPECT_EQ(span(m, out), span(m, i));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Exchange, RejectsBadOrder) {
  const Matroid m = uniform(4, 2);
  const ElementSet i = set_of(4, {0, 1});
  // f = 0 lies in C(2, I) = {0,1,2}, so it cannot be used again for e = 3.
  EXPECT_THROW(simultaneous_exchange(m, i, {{2, 1}, {3, 1}}), Error);
  EXPECT_THROW(simultaneous_exchange(m, i, {{2, 0}, {3, 1}}), Error);
  EXPECT_THROW(simultaneous_exchange(m, i, {{0, 1}}), Error);
}

TEST(Exchange, OutgoingFromCircuit) {
  const Matroid m = k4();
  const ElementSet i = set_of(6, {0, 1, 2});
  const ElementSet c = set_of(6, {0, 1, 3});
  const Element f = outgoing_from_circuit(m, i, c, 0);
  EXPECT_EQ(f, 3U);
  EXPECT_THROW(outgoing_from_circuit(m, i, c, 2), Error);
}

TEST(Components, DirectSumSplits) {
  const Matroid m = direct_sum({relabel(uniform(3, 1), {0, 1, 2}, 6), relabel(uniform(2, 1), {3, 4}, 6),
                                relabel(free_matroid(1), {5}, 6)});
  const auto comps = components(m);
  ASSERT_EQ(comps.size(), 3U);
  EXPECT_EQ(comps[0], set_of(6, {0, 1, 2}));
  EXPECT_EQ(comps[1], set_of(6, {3, 4}));
  EXPECT_EQ(comps[2], set_of(6, {5}));
  EXPECT_EQ(components(k4()).size(), 1U);
}

TEST(Components, AgreeWithCircuitConnectivity) {
  for (const auto& m : small_matroids(5)) {
    std::vector<ElementSet> circuits;
    for_each_subset(m.ground(), [&](const ElementSet& s) {
      if (is_circuit(m, s)) circuits.push_back(s);
    });
    for (const auto& comp : components(m)) {
      // no circuit crosses a component boundary
      for (const auto& c : circuits) EXPECT_TRUE(c.is_subset_of(comp) || !c.intersects(comp));
      // r is additive over components
    }
    int total = 0;
    for (const auto& comp : components(m)) total += m.rank(comp);
    EXPECT_EQ(total, m.rank());
  }
}

TEST(Subsets, GrayWalkVisitsEverySubsetOnce) {
  const ElementSet s = set_of(10, {1, 3, 4, 8});
  std::set<std::uint64_t> seen;
  ElementSet prev(10);
  for_each_subset_gray(s, [&](const ElementSet& cur, Element e, bool added) {
    if (!seen.empty()) {
      EXPECT_EQ((cur ^ prev), set_of(10, {e}));
    }
    if (!seen.empty()) {
      EXPECT_EQ(cur.contains(e), added);
    }
    seen.insert(cur.bits());
    prev = cur;
  });
  EXPECT_EQ(seen.size(), 16U);
}

TEST(Subsets, UniverseLimit) {
  EXPECT_THROW(ElementSet(65), Error);
  EXPECT_NO_THROW(ElementSet::full(64));
  EXPECT_THROW(uniform(3, 1).rank(ElementSet(4)), Error);
}

}  // namespace

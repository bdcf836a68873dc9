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

#include "support.hpp"

namespace {

using namespace mktest;

TEST(Enumeration, MatroidCountsUpToIsomorphism) {
  const std::vector<std::size_t> expected{1, 2, 4, 8, 17, 38, 98};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(all_matroids(n).size(), expected[static_cast<std::size_t>(n)]);
}

TEST(Enumeration, EnumeratedFamiliesAreMatroids) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& sm : all_matroids(n)) {
      EXPECT_TRUE(detail::small_axioms(n, sm.family));
      EXPECT_TRUE(axiom_check(sm.to_matroid()));
    }
  }
}

TEST(Enumeration, SimpleGraphCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34};
  for (std::size_t v = 1; v <= 5; ++v) {
    EXPECT_EQ(all_simple_graphs(v, 10).size(), expected[v - 1]);
  }
  EXPECT_EQ(all_simple_graphs(5, 8).size(), 32U);
}

TEST(Enumeration, DemandVectorsStayInRange) {
  DemandGraph g = demand_graph(all_simple_graphs(3, 3).back());
  std::size_t count = 0;
  for_each_demand(g, [&](const std::vector<int>& o) {
    for (std::size_t v = 0; v < o.size(); ++v) EXPECT_LE(std::abs(o[v]), g.degree(v));
    ++count;
  });
  EXPECT_EQ(count, 125U);  // triangle: 5 choices per vertex
}

TEST(Brute, MaxCommonEqualsMinMax) {
  Fuzzer f(CorpusSpec{.seed = 41});
  for (int t = 0; t < 200; ++t) {
    const Json p = f.pair();
    const Matroid m = parse_matroid(p["m"]);
    const Matroid n = parse_partner(m, p["n"]);
    const BruteCommon b = brute_max_common(m, n);
    EXPECT_EQ(b.size, brute_minmax(m, n));
    EXPECT_TRUE(m.is_independent(b.witness));
    EXPECT_TRUE(n.is_independent(b.witness));
    EXPECT_EQ(static_cast<int>(b.witness.size()), b.size);
  }
}

TEST(Brute, UnionRankOfSmallFamilies) {
  EXPECT_EQ(brute_union_rank(MatroidFamily{{uniform(5, 2), uniform(5, 2)}}), 4);
  EXPECT_EQ(brute_union_rank(MatroidFamily{{uniform(3, 2), uniform(3, 2)}}), 3);
  EXPECT_EQ(brute_union_rank(MatroidFamily{{rank_zero(3)}}), 0);
}

TEST(Brute, LargestWaveOfFreePartner) {
  EXPECT_EQ(brute_largest_wave(uniform(4, 2), free_matroid(4)), ElementSet::full(4));
  EXPECT_TRUE(brute_is_wave(uniform(4, 2), uniform(4, 2), ElementSet(4)));
}

TEST(Brute, CommonBasesOfEmptySet) {
  const auto bs = brute_common_bases(uniform(3, 1), uniform(3, 2), ElementSet(3));
  ASSERT_EQ(bs.size(), 1U);
  EXPECT_TRUE(bs[0].empty());
}

TEST(Brute, BoundsAreEnforced) {
  EXPECT_THROW(brute_max_common(uniform(17, 2), uniform(17, 2)), Error);
  EXPECT_THROW(brute_largest_wave(uniform(11, 2), uniform(11, 2)), Error);
  DemandGraph g;
  g.vertices = {"a", "b"};
  for (int e = 0; e < 15; ++e) g.edges.push_back({0, 1, "e" + std::to_string(e)});
  g.demand = {0, 0};
  EXPECT_THROW(brute_orientations(g), Error);
  try {
    brute_minmax(uniform(17, 2), uniform(17, 2));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(Brute, BoundOverrideFromEnvironment) {
  setenv("MATROIDKIT_MAX_EXHAUSTIVE", "3", 1);
  EXPECT_EQ(exhaustive_bound(12), 3U);
  EXPECT_THROW(axiom_check(uniform(4, 2)), Error);
  unsetenv("MATROIDKIT_MAX_EXHAUSTIVE");
  EXPECT_EQ(exhaustive_bound(12), 12U);
}

TEST(Fuzz, FixedSeedIsReproducible) {
  Fuzzer a(CorpusSpec{.seed = 99});
  Fuzzer b(CorpusSpec{.seed = 99});
  for (int t = 0; t < 50; ++t) {
    EXPECT_EQ(a.pair().dump(), b.pair().dump());
    EXPECT_EQ(a.family().dump(), b.family().dump());
    EXPECT_EQ(a.demand_graph().dump(), b.demand_graph().dump());
  }
  Fuzzer c(CorpusSpec{.seed = 100});
  EXPECT_NE(Fuzzer(CorpusSpec{.seed = 99}).pair().dump() + Fuzzer(CorpusSpec{.seed = 99}).pair().dump(),
            c.pair().dump() + c.pair().dump());
}

TEST(Fuzz, EveryGeneratorKindAppears) {
  Fuzzer f(CorpusSpec{.seed = 5});
  for (int t = 0; t < 400; ++t) f.pair();
  const CorpusSpec spec;
  for (const auto& [kind, weight] : spec.weights) {
    EXPECT_GT(f.coverage().count(kind), 0U) << kind;
  }
}

TEST(Fuzz, InstancesRespectBounds) {
  CorpusSpec spec{.seed = 6, .max_elements = 7, .max_family = 2, .family_elements = 5, .max_edges = 9};
  Fuzzer f(spec);
  for (int t = 0; t < 200; ++t) {
    const Json p = f.pair();
    const Matroid m = parse_matroid(p["m"]);
    EXPECT_LE(m.ground().size(), 7U);
    EXPECT_NO_THROW(parse_partner(m, p["n"]));
    const MatroidFamily fam = parse_family(f.family());
    EXPECT_LE(fam.k(), 2U);
    EXPECT_LE(fam.ground().size(), 5U);
    const Json g = f.demand_graph();
    EXPECT_LE(g["graph"]["edges"].size(), 9U);
    EXPECT_NO_THROW(demand_graph(g));
  }
}

TEST(Fuzz, GeneratedMatroidsSatisfyAxioms) {
  Fuzzer f(CorpusSpec{.seed = 7, .max_depth = 3});
  for (int t = 0; t < 150; ++t) {
    const Json p = f.pair();
    EXPECT_TRUE(axiom_check(parse_matroid(p["m"]))) << p["m"].dump();
  }
}

TEST(Oracles, RepeatedQueriesAgree) {
  Fuzzer f(CorpusSpec{.seed = 12});
  const Json p = f.pair();
  const Matroid m = parse_matroid(p["m"]);
  const Matroid n = parse_partner(m, p["n"]);
  const BruteCommon a = brute_max_common(m, n);
  const BruteCommon b = brute_max_common(parse_matroid(p["m"]), parse_partner(m, p["n"]));
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.witness, b.witness);
}

}  // namespace

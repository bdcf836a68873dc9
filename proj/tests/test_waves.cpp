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

std::vector<ElementSet> all_waves(const Matroid& m, const Matroid& n) {
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](const ElementSet& w) {
    if (brute_is_wave(m, n, w)) out.push_back(w);
  });
  return out;
}

template <typename Fn>
void for_each_pair(int size, Fn&& fn) {
  const auto ms = small_matroids(size);
  for (const auto& a : ms) {
    for (const auto& b : ms) fn(a, b);
  }
}

TEST(Waves, FreePartnerMakesEverythingAWave) {
  const Matroid m = graphic(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  const PairContext ctx(m, free_matroid(4));
  for_each_subset(ctx.ground(), [&](const ElementSet& w) {
    const auto b = is_wave(ctx, w);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(static_cast<int>(b->size()), m.rank(w));
  });
  EXPECT_EQ(largest_wave(ctx).set, ctx.ground());
}

TEST(Waves, RankZeroMHasEmptyWitness) {
  const PairContext ctx(rank_zero(3), uniform(3, 2));
  const auto b = is_wave(ctx, ctx.ground());
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(b->empty());
  EXPECT_TRUE(check_cond_plus(PairContext(rank_zero(3), rank_zero(3))));
}

TEST(Waves, SameUniformPair) {
  const Matroid u = uniform(3, 1);
  const PairContext ctx(u, u);
  const Wave w = largest_wave(ctx);
  EXPECT_EQ(w.set, brute_largest_wave(u, u));
  EXPECT_TRUE(is_wave_witness(ctx, w.set, w.witness));
}

TEST(Waves, TriangleSingleEdge) {
  const Matroid t = graphic(3, {{0, 1}, {1, 2}, {0, 2}});
  const PairContext ctx(t, t);
  const ElementSet a = ElementSet::of(3, {0});
  EXPECT_EQ(is_wave(ctx, a).has_value(), brute_is_wave(t, t, a));
}

TEST(Waves, IsWaveAgreesWithBruteForce) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    for_each_subset(ctx.ground(), [&](const ElementSet& w) {
      const auto found = is_wave(ctx, w);
      EXPECT_EQ(found.has_value(), brute_is_wave(a, b, w));
      if (found) {
        EXPECT_TRUE(is_wave_witness(ctx, w, *found));
      }
    });
  });
}

TEST(Waves, UnionOfWavesIsAWave) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    const auto ws = all_waves(a, b);
    for (const auto& w0 : ws) {
      for (const auto& w1 : ws) EXPECT_TRUE(is_wave(ctx, w0 | w1).has_value());
    }
  });
}

TEST(Waves, StackingOverAQuotient) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    for (const auto& w0 : all_waves(a, b)) {
      const Matroid qa = contract(a, w0);
      const Matroid qb = delete_set(b, w0);
      for (const auto& w1 : all_waves(qa, qb)) EXPECT_TRUE(is_wave(ctx, w0 | w1).has_value());
    }
  });
}

TEST(Waves, LargestMatchesBruteForce) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const Wave w = largest_wave(PairContext(a, b));
    EXPECT_EQ(w.set, brute_largest_wave(a, b));
  });
  Fuzzer f(CorpusSpec{.seed = 3, .max_elements = 8});
  for (int t = 0; t < 60; ++t) {
    const Json p = f.pair();
    const Matroid m = parse_matroid(p["m"]);
    const Matroid n = parse_partner(m, p["n"]);
    EXPECT_EQ(largest_wave(PairContext(m, n)).set, brute_largest_wave(m, n));
  }
}

TEST(Waves, QuotientAfterRemovalHasNoWave) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const Wave w = largest_wave(PairContext(a, b));
    const Matroid qa = contract(a, w.set);
    const Matroid qb = delete_set(b, w.set);
    EXPECT_TRUE(brute_largest_wave(qa, qb).empty());
    EXPECT_TRUE(check_cond_plus(PairContext(qa, qb)));
  });
}

TEST(Conditions, CondPlusImpliesCond) {
  int plus = 0;
  for_each_pair(4, [&](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    if (!check_cond_plus(ctx)) return;
    ++plus;
    EXPECT_TRUE(check_cond(ctx));
  });
  EXPECT_GT(plus, 0);
}

TEST(Conditions, NonLoopInsideLargestWaveBreaksCondPlus) {
  // N free: W = E, and M has a non-loop.
  EXPECT_FALSE(check_cond_plus(PairContext(uniform(2, 1), free_matroid(2))));
}

TEST(Conditions, CondBoundIsEnforced) {
  const PairContext ctx(uniform(13, 2), uniform(13, 2));
  EXPECT_THROW(check_cond(ctx), Error);
}

TEST(Conditions, CondPlusSurvivesDeletingMLoops) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    if (!check_cond_plus(PairContext(a, b))) return;
    for_each_subset(loops(a), [&](const ElementSet& l) {
      EXPECT_TRUE(check_cond_plus(PairContext(delete_set(a, l), delete_set(b, l))));
    });
  });
}

TEST(Conditions, CommonLoopsLeaveBasesUnchanged) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    const ElementSet common = loops(a) & loops(b);
    for (const auto& w : all_waves(a, b)) {
      for_each_subset(common, [&](const ElementSet& l) {
        EXPECT_TRUE(is_wave(ctx, w - l).has_value());
        EXPECT_EQ(brute_common_bases(a, b, w), brute_common_bases(a, b, w - l));
      });
    }
  });
}

TEST(Conditions, RemovingNullLoopsKeepsCommonBases) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    for (const auto& w : all_waves(a, b)) {
      for_each_subset(w & loops(a), [&](const ElementSet& l) {
        if (rank_contracted_onto(b, l) != 0) return;
        const Matroid al = delete_set(a, l);
        const Matroid bl = delete_set(b, l);
        EXPECT_TRUE(brute_is_wave(al, bl, w - l));
        EXPECT_EQ(brute_common_bases(a, b, w), brute_common_bases(al, bl, w - l));
      });
    }
  });
}

TEST(Conditions, EqualSpansGiveEqualMinors) {
  const auto ms = small_matroids(4);
  for (std::size_t k = 0; k < ms.size(); k += 2) {
    const Matroid& m = ms[k];
    const Matroid nd = dual(ms[ms.size() - 1 - k]);
    for_each_subset(m.ground(), [&](const ElementSet& z) {
      for_each_subset(z, [&](const ElementSet& x0) {
        for_each_subset(z, [&](const ElementSet& x1) {
          const ElementSet y0 = z - x0;
          const ElementSet y1 = z - x1;
          if (span(m, x0) != span(m, x1) || span(nd, y0) != span(nd, y1)) return;
          EXPECT_TRUE(same_oracle(delete_set(contract(m, x0), y0), delete_set(contract(m, x1), y1)));
          const Matroid& n = ms[ms.size() - 1 - k];
          EXPECT_TRUE(same_oracle(delete_set(contract(n, x0), y0), delete_set(contract(n, x1), y1)));
        });
      });
    });
  }
}

TEST(Conditions, WitnessAfterOneContractionSpans) {
  int checked = 0;
  for_each_pair(4, [&](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    if (!check_cond_plus(ctx)) return;
    for (Element e : ctx.ground()) {
      const ElementSet single = ElementSet::of(ctx.capacity(), {e});
      const PairContext q = ctx.contract_both(single);
      for_each_subset(q.ground(), [&](const ElementSet& w) {
        for_each_subset(w, [&](const ElementSet& bset) {
          if (!is_wave_witness(q, w, bset)) return;
          ++checked;
          EXPECT_EQ(static_cast<int>(bset.size()), rank_contracted_onto(b, w));
        });
      });
    }
  });
  EXPECT_GT(checked, 0);
}

TEST(Feasible, EmptySetUnderCondPlusIsNice) {
  for_each_pair(3, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    EXPECT_EQ(nice_feasible(ctx, ctx.empty_set()), check_cond_plus(ctx));
    EXPECT_EQ(feasible(ctx, ctx.empty_set()), check_cond(ctx));
  });
}

TEST(Feasible, RejectsNonCommonIndependent) {
  const PairContext ctx(uniform(3, 1), free_matroid(3));
  try {
    feasible(ctx, ElementSet::of(3, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_common_independent);
  }
}

TEST(Feasible, StackingThroughAQuotient) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    for_each_subset(ctx.ground(), [&](const ElementSet& i0) {
      if (!ctx.common_independent(i0)) return;
      const PairContext q = ctx.contract_both(i0);
      for_each_subset(q.ground(), [&](const ElementSet& i1) {
        if (!q.common_independent(i1)) return;
        if (feasible(q, i1)) {
          EXPECT_TRUE(feasible(ctx, i0 | i1));
        }
        if (nice_feasible(q, i1)) {
          EXPECT_TRUE(nice_feasible(ctx, i0 | i1));
        }
      });
    });
  });
}

TEST(Feasible, CommonBasesOfLargestWaveAreNice) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    const Wave w = largest_wave(ctx);
    for (const auto& bset : brute_common_bases(a, b, w.set)) EXPECT_TRUE(nice_feasible(ctx, bset));
  });
}

TEST(Feasible, ExtendingByACommonBaseIsNice) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    for_each_subset(ctx.ground(), [&](const ElementSet& i) {
      if (!ctx.common_independent(i)) return;
      const PairContext q = ctx.contract_both(i);
      const Wave w = largest_wave(q);
      for (const auto& bset : brute_common_bases(q.m(), q.n(), w.set)) {
        EXPECT_TRUE(nice_feasible(ctx, i | bset));
      }
    });
  });
}

TEST(CommonBases, EmptyXGivesEmptyBase) {
  const PairContext ctx(uniform(3, 2), uniform(3, 1));
  const auto b = common_base_B(ctx, ctx.empty_set());
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(b->empty());
}

TEST(CommonBases, NonEmptinessMatchesBruteForce) {
  for_each_pair(4, [](const Matroid& a, const Matroid& b) {
    const PairContext ctx(a, b);
    for_each_subset(ctx.ground(), [&](const ElementSet& x) {
      const auto all = brute_common_bases(a, b, x);
      const auto one = common_base_B(ctx, x);
      EXPECT_EQ(one.has_value(), !all.empty());
      if (one) {
        EXPECT_TRUE(in_common_bases(ctx, x, *one));
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), *one));
      }
    });
  });
}

}  // namespace

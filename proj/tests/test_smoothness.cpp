#include <gtest/gtest.h>

#include <random>

#include "ibrs/fixtures.hpp"
#include "ibrs/smoothness.hpp"
#include "support.hpp"

using namespace ibrs;
namespace fx = ibrs::fixtures;

TEST(Sqsubseteq, NeedSmoothFails) {
  auto s = fx::need_smooth();
  Mask all = s.all();
  EXPECT_EQ(mu(s, all), s.mask({"a"}));
  auto v = is_sqsubseteq(s, s.mask({"a"}), all);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->clause, "(2)");
  EXPECT_EQ(v.witness->point, "c");
}

TEST(Sqsubseteq, ArrowlessOnlyReflexive) {
  auto s = build_structure({"a", "b"}, fx::single_copies({"a", "b"}), {}, 1);
  for (Mask xp : submasks(s.all()))
    for (Mask x : submasks(xp)) EXPECT_EQ(is_sqsubseteq(s, x, xp).holds, x == xp);
  try {
    is_sqsubseteq(s, s.mask({"a"}), s.mask({"b"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNested);
  }
}

TEST(TotallySmooth, Examples) {
  auto a = fx::totally_smooth(false);
  auto b = fx::totally_smooth(true);
  for (auto reading : {TotalSmoothReading::ValidArrows, TotalSmoothReading::AllArrows}) {
    EXPECT_FALSE(is_totally_smooth(a, a.all(), reading).holds);
    EXPECT_TRUE(is_totally_smooth(b, b.all(), reading).holds);
  }
  auto bare = build_structure({"a", "b"}, fx::single_copies({"a", "b"}), {}, 1);
  for (Mask x : submasks(bare.all())) EXPECT_TRUE(is_totally_smooth(bare, x).holds);
}

TEST(TotallySmooth, Level3SolutionUnderEachReading) {
  auto s = fx::level3_solution();
  for (Mask x : submasks(s.all())) EXPECT_TRUE(is_totally_smooth(s, x).holds) << s.show(x);
  // the invalid x→y arrow has no counterpart from {y,y'} under the all-arrows reading
  auto lit = is_totally_smooth(s, s.all(), TotalSmoothReading::AllArrows);
  EXPECT_FALSE(lit.holds);
  EXPECT_EQ(lit.witness->arrows, std::vector<std::string>{"alpha1"});
}

TEST(EssentiallySmooth, TotalVsEssential) {
  auto s = fx::total_vs_essential();
  Mask all = s.all();
  EXPECT_EQ(mu(s, all), s.mask({"a", "c"}));
  EXPECT_TRUE(is_essentially_smooth(s, all).holds);
  EXPECT_FALSE(is_totally_smooth(s, all).holds);
  // b is attacked by a inside {a,b,c}, so it is not a minimal witness for <c,0>
  EXPECT_FALSE(is_classically_smooth(s, {all}).holds);
  auto bare = build_structure({"a", "b"}, fx::single_copies({"a", "b"}), {}, 1);
  for (Mask x : submasks(bare.all())) EXPECT_TRUE(is_essentially_smooth(bare, x).holds);
}

TEST(ClassicallySmooth, Examples) {
  auto s = build_structure({"a", "b"}, fx::single_copies({"a", "b"}), {fx::arrow("alpha", "a", "b")}, 1);
  EXPECT_TRUE(is_classically_smooth(s, {s.all()}).holds);
  auto loop = build_structure({"a", "b"}, fx::single_copies({"a", "b"}),
                              {fx::arrow("alpha", "a", "b"), fx::arrow("alpha'", "b", "a")}, 1);
  EXPECT_EQ(mu(loop, loop.all()), Mask{0});
  EXPECT_FALSE(is_classically_smooth(loop, {loop.all()}).holds);
  try {
    is_classically_smooth(fx::need_smooth(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLevelOne);
  }
}

TEST(EssentiallySmooth, CaseSplitAgrees) {
  std::mt19937_64 rng(21);
  int smooth = 0;
  for (int i = 0; i < 1500; ++i) {
    auto s = gen::random_structure(rng, {4, 2, 10, 3});
    for (Mask x : submasks(s.all())) {
      auto v = is_essentially_smooth(s, x);
      bool all_certified = true;
      for (const auto& [p, c] : v.cases) all_certified = all_certified && c != "none";
      EXPECT_EQ(v.holds, all_certified);
      smooth += v.holds;
    }
  }
  EXPECT_GT(smooth, 0);
}

TEST(XSubXp, FactsOneTwoThree) {
  std::mt19937_64 rng(23);
  int hits = 0;
  for (int i = 0; i < 600; ++i) {
    auto s = gen::random_structure(rng, {4, 2, 10, 3});
    auto sets = submasks(s.all());
    std::vector<std::pair<Mask, Mask>> sub;
    for (Mask xp : sets)
      for (Mask x : submasks(xp))
        if (is_sqsubseteq(s, x, xp).holds) sub.emplace_back(x, xp);
    for (auto [x, xp] : sub) {
      ++hits;
      EXPECT_EQ(x, mu(s, xp));
      for (Mask mid : sets) {
        if (subset(x, mid) && subset(mid, xp)) {
          EXPECT_TRUE(is_sqsubseteq(s, x, mid).holds);
        }
      }
      for (auto [y, yp] : sub) {
        if (subset(x, yp) && subset(y, xp)) {
          EXPECT_EQ(x, y);
        }
      }
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(TotalMu, EqualMinimaUnderMutualInclusion) {
  std::mt19937_64 rng(29);
  int checked = 0;
  auto b = fx::totally_smooth(true);
  std::vector<Structure> pool{b};
  for (int i = 0; i < 2000; ++i) pool.push_back(gen::random_structure(rng, {4, 2, 8, 2}));
  for (const auto& s : pool) {
    std::vector<Mask> smooth;
    for (Mask x : submasks(s.all()))
      if (is_totally_smooth(s, x).holds) smooth.push_back(x);
    for (Mask x : smooth)
      for (Mask y : smooth) {
        Mask mx = mu(s, x), my = mu(s, y);
        if (subset(mx, y) && subset(my, x)) {
          ++checked;
          EXPECT_EQ(mx, my);
        }
      }
  }
  EXPECT_GT(checked, 100);
}

TEST(LevelOne, SmoothnessImpliesEssential) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1500; ++i) {
    auto s = gen::random_structure(rng, {4, 2, 8, 1});
    for (Mask x : submasks(s.all())) {
      bool ess = is_essentially_smooth(s, x).holds;
      if (is_classically_smooth(s, {x}).holds) {
        EXPECT_TRUE(ess);
      }
      if (is_totally_smooth(s, x).holds) {
        EXPECT_TRUE(ess);
      }
    }
  }
}

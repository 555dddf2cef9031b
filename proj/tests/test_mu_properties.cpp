#include <gtest/gtest.h>

#include <random>

#include "ibrs/fixtures.hpp"
#include "ibrs/mu_properties.hpp"
#include "support.hpp"

using namespace ibrs;
namespace fx = ibrs::fixtures;
using P = PropertyId;

TEST(Properties, NeedPrVerdicts) {
  auto t = fx::need_pr();
  for (P p : {P::Subset, P::CUM, P::RatM, P::SubsetSupset}) EXPECT_TRUE(check_property(t, p).holds) << to_string(p);
  auto pr = check_property(t, P::PR);
  EXPECT_FALSE(pr.holds);
  const auto& U = t.universe();
  EXPECT_EQ(pr.witness->X, U.mask({"a", "b"}));
  EXPECT_EQ(pr.witness->Y, U.all());
}

TEST(Properties, MuCumCdVerdicts) {
  auto t = fx::mu_cum_cd();
  EXPECT_TRUE(check_property(t, P::Subset).holds);
  EXPECT_TRUE(check_property(t, P::CUM).holds);
  EXPECT_FALSE(check_property(t, P::SubsetSupset).holds);
}

TEST(Properties, IdentitySatisfiesEverything) {
  for (int n = 1; n <= 3; ++n) {
    auto t = MuTable::identity(detail::standard_universe(n));
    for (const auto& v : check_all_properties(t)) EXPECT_TRUE(v.holds) << v.property;
  }
}

TEST(Properties, ParseNames) {
  EXPECT_EQ(parse_property("(μPR)"), P::PR);
  EXPECT_EQ(parse_property("μPR"), P::PR);
  EXPECT_EQ(parse_property("muPR"), P::PR);
  EXPECT_EQ(parse_property("mu-subset-supset"), P::SubsetSupset);
  EXPECT_EQ(parse_property("(μ=′)"), P::EqPrime);
  EXPECT_EQ(parse_property("mu-eq'"), P::EqPrime);
  for (const auto& p : property_list()) EXPECT_EQ(parse_property(p.symbol), p.id);
  try {
    parse_property("(μXYZ)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownProperty);
  }
}

TEST(Closures, Examples) {
  auto full = MuTable::identity(Universe({"a", "b", "c"}));
  for (auto c : {Closure::Intersection, Closure::Union, Closure::Complement, Closure::SetDifference, Closure::Singletons})
    EXPECT_TRUE(check_family_closure(full, c).holds);

  auto cd = fx::mu_cum_cd();
  auto v = check_family_closure(cd, Closure::Intersection);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(*v.witness->X & *v.witness->Y, cd.universe().mask({"a", "b"}));

  Universe u({"a", "b"});
  MuTable small(u);
  small.set(0, 0);
  small.set(u.mask({"a"}), u.mask({"a"}));
  EXPECT_TRUE(check_family_closure(small, Closure::Union).holds);
}

// Re-evaluates one instance of a property straight from its definition.
static bool instance_violated(const MuTable& t, P p, const PropertyWitness& w) {
  auto f = [&](Mask x) { return t(x); };
  Mask X = w.X.value_or(0), Y = w.Y.value_or(0), A = w.A.value_or(0), B = w.B.value_or(0);
  switch (p) {
    case P::Subset: return !subset(f(X), X);
    case P::Empty:
    case P::EmptyFin: return f(X) == 0 && X != 0;
    case P::PR: return subset(X, Y) && !subset(f(Y) & X, f(X));
    case P::PRPrime: return !subset(f(X) & Y, f(X & Y));
    case P::OR: return !subset(f(X | Y), f(X) | f(Y));
    case P::WOR: return !subset(f(X | Y), f(X) | Y);
    case P::DisjOR: return (X & Y) == 0 && !subset(f(X | Y), f(X) | f(Y));
    case P::CUT: return subset(f(X), Y) && subset(Y, X) && !subset(f(X), f(Y));
    case P::CM: return subset(f(X), Y) && subset(Y, X) && !subset(f(Y), f(X));
    case P::CUM: return subset(f(X), Y) && subset(Y, X) && f(Y) != f(X);
    case P::ResM: return subset(f(X), A & B) && !subset(f(X & A), B);
    case P::SubsetSupset: return subset(f(X), Y) && subset(f(Y), X) && f(X) != f(Y);
    case P::RatM: return subset(X, Y) && (X & f(Y)) != 0 && !subset(f(X), f(Y) & X);
    case P::Eq: return subset(X, Y) && (X & f(Y)) != 0 && f(X) != (f(Y) & X);
    case P::EqPrime: return (f(Y) & X) != 0 && f(X & Y) != (f(Y) & X);
    case P::Par: {
      Mask v = f(X | Y);
      return v != f(X) && v != f(Y) && v != (f(X) | f(Y));
    }
    case P::Cup: return (f(Y) & X & ~f(X)) != 0 && (f(X | Y) & Y) != 0;
    case P::CupPrime: return (f(Y) & X & ~f(X)) != 0 && f(X | Y) != f(X);
    case P::In: {
      int a = *w.a;
      if (!has(X & ~f(X), a)) return false;
      bool exists = false;
      for_each_bit(X, [&](int b) { exists = exists || !has(f(bit(a) | bit(b)), a); });
      return !exists;
    }
  }
  return false;
}

TEST(Properties, WitnessesReplay) {
  std::mt19937_64 rng(51);
  int failures = 0;
  for (int i = 0; i < 3000; ++i) {
    auto t = detail::random_table(detail::standard_universe(3), i % 2 == 0, rng);
    for (const auto& info : property_list()) {
      auto v = check_property(t, info.id);
      if (v.holds) continue;
      ++failures;
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(instance_violated(t, info.id, *v.witness)) << info.symbol;
    }
  }
  EXPECT_GT(failures, 1000);
}

TEST(Properties, RestrictingTheFamilyKeepsHoldingProperties) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 2000; ++i) {
    Universe u = detail::standard_universe(3);
    auto t = detail::random_table(u, true, rng);
    if (t.family().empty()) continue;
    Mask drop = t.family()[rng() % t.family().size()];
    MuTable r(u);
    for (Mask x : t.family())
      if (x != drop) r.set(x, t(x));
    for (const auto& info : property_list()) {
      if (info.id == P::In) continue;  // existential over {a,b}: dropping a pair removes witnesses
      if (check_property(t, info.id).holds) {
        EXPECT_TRUE(check_property(r, info.id).holds) << info.symbol;
      }
    }
  }
}

TEST(Properties, SkippedInstancesAreCounted) {
  auto cd = fx::mu_cum_cd();
  auto v = check_property(cd, P::PRPrime);
  EXPECT_GT(v.skipped, 0u);
}

TEST(Implications, PositiveRowsTwoPointsExhaustive) {
  for (const auto& row : implication_rows()) {
    if (row.kind != RowKind::Implies && row.kind != RowKind::Equivalent) continue;
    auto rep = verify_implication(row, 2, VerifyMode::Exhaustive);
    EXPECT_EQ(rep.status, "no counterexample found") << row.id;
    EXPECT_EQ(rep.tables_checked, 625u);
    EXPECT_GT(rep.tables_matching, 0u) << row.id;
  }
}

TEST(Implications, PositiveRowsThreePointsFiltered) {
  for (const auto& row : implication_rows()) {
    if (row.kind != RowKind::Implies && row.kind != RowKind::Equivalent) continue;
    auto rep = verify_implication(row, 3, VerifyMode::Filtered);
    EXPECT_EQ(rep.status, "no counterexample found") << row.id;
    EXPECT_EQ(rep.tables_checked, 60750u);
  }
}

TEST(Implications, NegativeRowsReturnKnownTables) {
  auto r4 = verify_implication("4", 2, VerifyMode::Exhaustive);
  EXPECT_EQ(r4.status, "counterexample");
  EXPECT_TRUE(r4.known);
  EXPECT_EQ(*r4.counterexample, fx::need_pr());
  EXPECT_EQ(r4.violated->property, "(μPR)");

  auto r9 = verify_implication("9", 2, VerifyMode::Exhaustive);
  EXPECT_TRUE(r9.known);
  EXPECT_EQ(*r9.counterexample, fx::mu_cum_cd());
  EXPECT_EQ(r9.violated->property, "(μ⊆⊇)");
}

TEST(Implications, SearchedNegativeRows) {
  auto r20 = verify_implication("20", 2, VerifyMode::Exhaustive);
  ASSERT_TRUE(r20.counterexample);
  EXPECT_TRUE(check_property(*r20.counterexample, P::PR).holds);
  EXPECT_FALSE(check_property(*r20.counterexample, P::Par).holds);

  auto r21 = verify_implication("21", 3, VerifyMode::Filtered);
  ASSERT_TRUE(r21.counterexample);
  EXPECT_FALSE(check_family_closure(*r21.counterexample, Closure::SetDifference).holds);
  EXPECT_FALSE(check_property(*r21.counterexample, P::Eq).holds);

  VerifyOptions opt;
  opt.samples = 200'000;
  auto r22 = verify_implication("22", 4, VerifyMode::Sampled, opt);
  ASSERT_TRUE(r22.counterexample);
  for (P p : {P::Subset, P::PR, P::Par, P::Eq, P::Cup}) EXPECT_TRUE(check_property(*r22.counterexample, p).holds);
  EXPECT_FALSE(check_property(*r22.counterexample, P::In).holds);
}

TEST(Implications, UnverifiableAndErrors) {
  EXPECT_EQ(verify_implication("5.2", 2, VerifyMode::Exhaustive).status, "unverifiable");
  EXPECT_EQ(verify_implication("19", 2, VerifyMode::Exhaustive).status, "unverifiable");
  try {
    verify_implication("3", 3, VerifyMode::Exhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchSpaceExceeded);
  }
  try {
    verify_implication("99", 2, VerifyMode::Exhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownProperty);
  }
}

TEST(Implications, SampledIsSeedDeterministic) {
  VerifyOptions opt;
  opt.samples = 5000;
  opt.seed = 9;
  auto a = verify_implication("10", 3, VerifyMode::Sampled, opt);
  auto b = verify_implication("10", 3, VerifyMode::Sampled, opt);
  EXPECT_EQ(a.tables_matching, b.tables_matching);
  EXPECT_EQ(a.status, "no counterexample found");
}

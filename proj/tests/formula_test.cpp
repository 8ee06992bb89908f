#include <gtest/gtest.h>

#include "support.hpp"

namespace isl {
namespace {

using test::F;
using test::S;

// Replacement oracle: a ≪ b iff some nonempty X ⊆ b is replaced by
// Y = a − (b − X), each element of Y charged to a strictly heavier
// element of X. Enumerates every X.
bool replacement_less(const Multiset& a, const Multiset& b) {
  std::size_t n = b.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Multiset rest = a;
    Multiset removed;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (std::size_t{1} << i)) {
        removed.push_back(b[i]);
        continue;
      }
      auto it = std::find(rest.begin(), rest.end(), b[i]);
      if (it == rest.end()) ok = false;
      else rest.erase(it);
    }
    if (!ok) continue;
    bool charged = true;
    for (Formula y : rest) {
      bool found = false;
      for (Formula x : removed) found = found || x.weight() > y.weight();
      charged = charged && found;
    }
    if (charged) return true;
  }
  return false;
}

TEST(Formula, WeightExamples) {
  EXPECT_EQ(F("p").weight(), 1u);
  EXPECT_EQ(bot().weight(), 1u);
  EXPECT_EQ(F("[]p").weight(), 2u);
  EXPECT_EQ(F("p & q").weight(), 4u);
  EXPECT_EQ(F("p | q").weight(), 3u);
  EXPECT_EQ(F("p -> q").weight(), 3u);
}

TEST(Formula, DegreeExamples) {
  EXPECT_EQ(bot().degree(), 0u);
  EXPECT_EQ(F("p").degree(), 1u);
  EXPECT_EQ(F("[](p & q)").degree(), 4u);
  EXPECT_EQ(F("~p").degree(), 2u);
}

TEST(Formula, HashConsing) {
  EXPECT_EQ(F("[](p -> q)"), box(imp(atom("p"), atom("q"))));
  EXPECT_NE(F("p & q"), F("q & p"));
  EXPECT_EQ(neg(atom("p")), imp(atom("p"), bot()));
  EXPECT_EQ(top(), imp(bot(), bot()));
}

TEST(Formula, WeightExceedsImmediateSubformulas) {
  test::Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    Formula f = g.formula(5);
    if (f.is_box()) {
      EXPECT_EQ(f.weight(), f.inner().weight() + 1);
    } else if (f.is_and() || f.is_or() || f.is_imp()) {
      EXPECT_GT(f.weight(), f.left().weight());
      EXPECT_GT(f.weight(), f.right().weight());
    } else {
      EXPECT_EQ(f.weight(), 1u);
    }
  }
}

TEST(Formula, CompareIsATotalOrder) {
  test::Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    Formula a = g.formula(3), b = g.formula(3), c = g.formula(3);
    EXPECT_EQ(compare(a, b) == 0, a == b);
    EXPECT_EQ(compare(a, b), -compare(b, a));
    if (compare(a, b) < 0 && compare(b, c) < 0) EXPECT_LT(compare(a, c), 0);
    if (a.weight() < b.weight()) EXPECT_LT(compare(a, b), 0);
  }
}

TEST(Multiset, LessExamples) {
  EXPECT_FALSE(multiset_less({F("p")}, {F("p")}));
  EXPECT_TRUE(multiset_less({}, {F("p")}));
  EXPECT_TRUE(multiset_less(sorted({F("p"), F("q")}), {F("p & q")}));
  EXPECT_FALSE(multiset_less({F("p & q")}, sorted({F("p"), F("q")})));
  // Equal weight, different formulas: neither side can be charged.
  EXPECT_FALSE(multiset_less({F("q")}, {F("p")}));
}

TEST(Multiset, LessAgreesWithReplacementOracle) {
  test::Gen g(13);
  int positives = 0;
  for (int i = 0; i < 3000; ++i) {
    Multiset a = sorted(g.multiset(4, 2)), b = sorted(g.multiset(4, 2));
    if (g.below(3) == 0) {
      // Bias towards related pairs: replace one element of b.
      a = b;
      if (!a.empty()) {
        std::size_t k = static_cast<std::size_t>(g.below(static_cast<int>(a.size())));
        Formula x = a[k];
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(k));
        if (x.weight() > 1) {
          for (int j = g.below(3); j > 0; --j) {
            Formula y = g.formula(1);
            if (y.weight() < x.weight()) a.push_back(y);
          }
        }
        a = sorted(a);
      }
    }
    bool want = replacement_less(a, b);
    positives += want;
    ASSERT_EQ(multiset_less(a, b), want) << render(a) << " vs " << render(b);
  }
  EXPECT_GT(positives, 300);
}

TEST(Multiset, StrictOrderProperties) {
  test::Gen g(14);
  for (int i = 0; i < 1500; ++i) {
    Multiset a = sorted(g.multiset(3, 2)), b = sorted(g.multiset(3, 2)), c = sorted(g.multiset(3, 2));
    EXPECT_FALSE(multiset_less(a, a));
    if (multiset_less(a, b)) EXPECT_FALSE(multiset_less(b, a));
    if (multiset_less(a, b) && multiset_less(b, c)) EXPECT_TRUE(multiset_less(a, c));
  }
}

TEST(Sequent, BoxCount) {
  EXPECT_EQ(box_count(S("[]p, []p, q => r")), 1u);
  EXPECT_EQ(box_count(S("p => []q")), 0u);
  EXPECT_EQ(box_count(S("[]p, []q =>")), 2u);
}

TEST(Sequent, AntecedentIsCanonical) {
  EXPECT_EQ(S("q, p, []r => p"), S("[]r, p, q => p"));
  EXPECT_NE(S("p, p => q"), S("p => q"));
}

TEST(Sequent, OrderExamples) {
  EXPECT_TRUE(sequent_less(S("[]p, []q =>"), S("[]p =>"), {2}));
  EXPECT_TRUE(sequent_less(S("p =>"), S("p & q =>"), {0}));
  EXPECT_FALSE(sequent_less(S("p => q"), S("p => q"), {0}));
  EXPECT_THROW(sequent_less(S("[]p, []q =>"), S("p =>"), {1}), ContractError);
}

TEST(Sequent, OrderIsStrictPartialOrder) {
  test::Gen g(15);
  for (int i = 0; i < 1500; ++i) {
    Sequent a = g.sequent(3, 2), b = g.sequent(3, 2), c = g.sequent(3, 2);
    SearchOrderContext ctx{std::max({box_count(a), box_count(b), box_count(c)})};
    EXPECT_FALSE(sequent_less(a, a, ctx));
    if (sequent_less(a, b, ctx)) EXPECT_FALSE(sequent_less(b, a, ctx));
    if (sequent_less(a, b, ctx) && sequent_less(b, c, ctx)) EXPECT_TRUE(sequent_less(a, c, ctx));
  }
}

}  // namespace
}  // namespace isl

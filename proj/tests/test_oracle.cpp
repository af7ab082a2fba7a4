#include "support.hpp"
#include "weakorder/check.hpp"
#include "weakorder/gen.hpp"
#include "weakorder/io.hpp"
#include "weakorder/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace weakorder;
using namespace weakorder::test;

namespace {

std::vector<IntVector> primitive_grid(long bound) {
  std::vector<IntVector> out;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back(iv({p, q}));
  return out;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(arc_0_90()), ArcClass::init(iv({0, 1}), false));
  EXPECT_EQ(classify(arc_45_180()), ArcClass::tail(iv({1, 1}), true));
  EXPECT_EQ(classify(top(Frame::standard(2))), ArcClass::full());
  EXPECT_EQ(classify(bottom(Frame::standard(2))), ArcClass::empty());
  EXPECT_THROW(classify(top(Frame::standard(3))), DimensionMismatch);
}

TEST(ArcOps, Examples) {
  auto init90 = ArcClass::init(iv({0, 1}), false);
  auto init45 = ArcClass::init(iv({1, 1}), false);
  auto tail45 = ArcClass::tail(iv({1, 1}), true);
  EXPECT_EQ(arc_join(init90, tail45), ArcClass::full());
  EXPECT_EQ(arc_join(init45, init90), init90);
  EXPECT_EQ(arc_complement(ArcClass::full()), ArcClass::empty());
  EXPECT_EQ(arc_complement(init90), ArcClass::tail(iv({0, 1}), true));
  EXPECT_EQ(arc_meet(init90, tail45), ArcClass::empty());
  EXPECT_TRUE(arc_leq(init45, init90));
  EXPECT_FALSE(arc_leq(init90, tail45));
  EXPECT_THROW(ArcClass::init(iv({0, -1}), false), DegenerateInput);
  EXPECT_THROW(ArcClass::tail(iv({2, 2}), true), DegenerateInput);
}

TEST(ArcOps, AlgebraOnFamily) {
  auto family = planar_family(3);
  std::vector<ArcClass> arcs;
  for (const auto& x : family) arcs.push_back(classify(x));
  for (const auto& a : arcs) {
    ASSERT_EQ(arc_complement(arc_complement(a)), a);
    ASSERT_EQ(arc_join(a, a), a);
  }
  for (std::size_t i = 0; i < arcs.size(); i += 3)
    for (std::size_t j = 0; j < arcs.size(); j += 2) {
      ASSERT_EQ(arc_join(arcs[i], arcs[j]), arc_join(arcs[j], arcs[i]));
      for (std::size_t k = 0; k < arcs.size(); k += 17)
        ASSERT_EQ(arc_join(arc_join(arcs[i], arcs[j]), arcs[k]),
                  arc_join(arcs[i], arc_join(arcs[j], arcs[k])));
    }
}

// Every planar element with small coordinates, checked on a fine ray grid:
// its membership set is empty, everything, an initial arc or a terminal arc
// (read off the sorted grid without using classify), and classify names it.
TEST(Classify, BruteForceBound5) {
  auto gens = primitive_grid(5);
  auto grid = primitive_grid(12);
  std::vector<IntVector> upper;
  for (const auto& r : grid)
    if (in_positive_half(r)) upper.push_back(r);
  std::sort(upper.begin(), upper.end(), [](const IntVector& a, const IntVector& b) {
    return sgn(a[0] * b[1] - a[1] * b[0]) > 0;
  });

  std::set<std::string> seen;
  for (const auto& b1 : gens)
    for (const auto& b2 : gens) {
      if (b1[0] * b2[1] - b1[1] * b2[0] == 0) continue;
      std::vector<IntVector> basis{b1, b2};
      auto x = standard_element(frame_from_basis(std::span<const IntVector>(basis)));
      if (!seen.insert(serialize_element(x)).second) continue;
      auto arc = classify(x);
      for (const auto& r : grid) {
        bool m = member(r, x);
        ASSERT_EQ(m, arc_contains(arc, r)) << serialize_element(x) << " ray " << to_string(r);
        if (!in_positive_half(r)) ASSERT_FALSE(m);
      }
      std::vector<bool> pattern;
      for (const auto& r : upper) pattern.push_back(member(r, x));
      std::size_t changes = 0;
      for (std::size_t i = 1; i < pattern.size(); ++i) changes += pattern[i] != pattern[i - 1];
      ASSERT_LE(changes, 1u) << serialize_element(x);
      if (changes == 0)
        ASSERT_EQ(arc.kind, pattern[0] ? ArcClass::Kind::Full : ArcClass::Kind::Empty);
      else
        ASSERT_EQ(arc.kind, pattern[0] ? ArcClass::Kind::Init : ArcClass::Kind::Tail);
    }
  EXPECT_GT(seen.size(), 100u);
}

TEST(Falsifier, Examples) {
  auto found = subset_falsifier(arc_0_90(), arc_0_45(), 1000, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(member(*found, arc_0_90()));
  EXPECT_FALSE(member(*found, arc_0_45()));
  // (1,2) at about 63 degrees separates the two arcs.
  EXPECT_TRUE(member(iv({1, 2}), arc_0_90()));
  EXPECT_FALSE(member(iv({1, 2}), arc_0_45()));
  EXPECT_FALSE(subset_falsifier(arc_0_90(), arc_0_90(), 1000, 2).has_value());
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto x = random_structured_element(rng, 4, 20);
    auto y = random_structured_element(rng, 4, 20);
    ASSERT_FALSE(subset_falsifier(x, join(x, y), 10000, rng.next()).has_value());
  }
}

TEST(OracleEquivalence, RandomPairsAndFamily) {
  CheckOptions opts;
  opts.iters = 300;
  opts.arc_bound = 5;
  auto r = check_oracle_equivalence(opts);
  EXPECT_TRUE(r.passed) << r.witness;
}

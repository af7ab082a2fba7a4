#include "support.hpp"
#include "weakorder/gen.hpp"

#include <gtest/gtest.h>

using namespace weakorder;
using namespace weakorder::test;

TEST(Frame, ValidatesInvariants) {
  EXPECT_THROW(fr(2, {{1, 1}, {1, 0}}), InvalidFrame);
  EXPECT_THROW(fr(2, {{0, 2}, {-1, 0}}), InvalidFrame);
  EXPECT_THROW(fr(2, {{0, 0}, {1, 0}}), InvalidFrame);
  EXPECT_THROW(fr(2, {{1, 0, 0}}), InvalidFrame);
  EXPECT_THROW(fr(2, {}), InvalidFrame);
  EXPECT_NO_THROW(fr(3, {{1, 2, 0}, {-2, 1, 5}}));
  EXPECT_EQ(Frame::standard(2), fr(2, {{-1, 0}, {0, -1}}));
}

TEST(LexSign, Examples) {
  auto e = Frame::standard(2);
  EXPECT_EQ(lex_sign(iv({1, 0}), e), LexSign::Negative);
  EXPECT_EQ(lex_sign(iv({0, -1}), e), LexSign::Positive);
  EXPECT_EQ(lex_sign(iv({0, 0, 1}), fr(3, {{-1, 0, 0}, {0, -1, 0}})), LexSign::OutsideSpan);
  EXPECT_THROW(lex_sign(iv({0, 0}), e), DegenerateInput);
}

TEST(ConeContains, Examples) {
  EXPECT_TRUE(cone_contains(Frame::standard(2), iv({3, 0})));
  EXPECT_FALSE(cone_contains(fr(2, {{1, 0}, {0, 1}}), iv({1, 0})));
  EXPECT_TRUE(cone_contains(fr(2, {{0, 1}, {-1, 0}}), iv({1, 1})));
}

TEST(SupportNormal, Examples) {
  EXPECT_EQ(support_normal(Frame::standard(2)), iv({0, -1}));
  EXPECT_EQ(support_normal(fr(2, {{0, 1}, {-1, 0}})), iv({-1, 0}));
  EXPECT_EQ(support_normal(fr(2, {{1, 1}, {-1, 1}})), iv({-1, 1}));
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(Frame::standard(2)), fr(2, {{1, 0}, {0, 1}}));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = random_frame(rng, 4, 20);
    ASSERT_EQ(negate(negate(f)), f);
    auto x = random_ray(rng, 4, 20);
    if (lex_sign(x, f) == LexSign::Negative) ASSERT_EQ(lex_sign(x, negate(f)), LexSign::Positive);
  }
}

TEST(Restrict, Examples) {
  std::vector<IntVector> e12{iv({1, 0, 0}), iv({0, 1, 0})};
  EXPECT_EQ(restrict(Frame::standard(3), Subspace::spanned_by(3, e12)),
            fr(3, {{-1, 0, 0}, {0, -1, 0}}));
  auto h = Subspace::whole(3).hyperplane(iv({0, 1, 1}));
  auto r = restrict(Frame::standard(3), h);
  EXPECT_EQ(r, fr(3, {{-1, 0, 0}, {0, 1, -1}}));
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_ray_in(rng, h, 20);
    ASSERT_EQ(cone_contains(r, x), cone_contains(Frame::standard(3), x)) << to_string(x);
  }
  std::vector<IntVector> e1{iv({1, 0})};
  EXPECT_EQ(restrict(fr(2, {{-1, -1}, {1, -1}}), Subspace::spanned_by(2, e1)), fr(2, {{1, 0}}));
}

TEST(Restrict, Errors) {
  std::vector<IntVector> e3{iv({0, 0, 1})};
  auto partial = fr(3, {{-1, 0, 0}, {0, -1, 0}});
  EXPECT_THROW(restrict(partial, Subspace::spanned_by(3, e3)), NotInSpan);
  std::vector<IntVector> none;
  EXPECT_THROW(restrict(partial, Subspace::spanned_by(3, none)), DegenerateInput);
}

TEST(HalfspacePair, Examples) {
  EXPECT_TRUE(halfspace_pair_contains(qv({"-1", "0"}), qv({"0", "-1"}), qv({"-1", "-1"})));
  EXPECT_FALSE(halfspace_pair_contains(qv({"-1", "0"}), qv({"0", "-1"}), qv({"1", "0"})));
  EXPECT_FALSE(halfspace_pair_contains(qv({"1", "0", "0"}), qv({"0", "1", "0"}),
                                       qv({"0", "0", "1"})));
  EXPECT_TRUE(halfspace_pair_contains(qv({"1", "0"}), qv({"0", "1"}), qv({"0", "0"})));
  EXPECT_THROW(halfspace_pair_contains(qv({"1", "0"}), qv({"2", "0"}), qv({"1", "1"})),
               DegenerateInput);
}

TEST(ConeProperties, RandomFramesDims2To6) {
  Rng rng(23);
  for (std::size_t d = 2; d <= 6; ++d)
    for (int i = 0; i < 40; ++i) {
      auto f = random_frame(rng, d, 20);
      ASSERT_TRUE(f.is_valid());
      ASSERT_TRUE(negate(f).is_valid());
      const auto& u = support_normal(f);
      ASSERT_TRUE(cone_contains(f, ExactKernel::negated(u)));
      for (int k = 0; k < 100; ++k) {
        auto x = random_ray(rng, d, 20);
        bool in = cone_contains(f, x);
        ASSERT_NE(in, cone_contains(negate(f), x));
        if (in) ASSERT_LE(sgn(dot(x, u)), 0);
      }
      // Rescaling one frame vector leaves the cone unchanged.
      std::vector<Vector> scaled;
      for (const auto& r : f.vectors()) scaled.push_back(to_rational(r));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 1));
      for (auto& c : scaled[j]) c *= 7;
      ASSERT_EQ(frame_from_basis(std::span<const Vector>(scaled)), f);
    }
}

TEST(ConeProperties, RestrictAgreesOnSubspace) {
  Rng rng(29);
  for (std::size_t d = 2; d <= 6; ++d)
    for (int i = 0; i < 40; ++i) {
      auto f = random_frame(rng, d, 20);
      auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(d) - 1));
      std::vector<IntVector> gens;
      for (std::size_t j = 0; j < k; ++j) gens.push_back(random_ray(rng, d, 20));
      auto s = Subspace::spanned_by(d, gens);
      auto r = restrict(f, s);
      ASSERT_TRUE(r.is_valid());
      ASSERT_EQ(Subspace::span_of(r), s);
      for (int t = 0; t < 100; ++t) {
        auto x = random_ray_in(rng, s, 20);
        ASSERT_EQ(cone_contains(r, x), cone_contains(f, x));
      }
    }
}

TEST(BasisLexSign, MatchesFrame) {
  Rng rng(31);
  for (std::size_t d = 2; d <= 6; ++d) {
    auto basis = random_basis(rng, d, 20);
    auto f = frame_from_basis(std::span<const IntVector>(basis));
    for (int t = 0; t < 1000; ++t) {
      auto x = random_ray(rng, d, 20);
      ASSERT_EQ(basis_lex_sign(x, basis), lex_sign(x, f));
    }
  }
}

TEST(FloatFrame, MirrorsExact) {
  auto f = to_float(fr(2, {{-1, -1}, {1, -1}}));
  EXPECT_TRUE(cone_contains<FloatKernel>(f, FloatVector{-1, 2}));
  EXPECT_FALSE(cone_contains<FloatKernel>(f, FloatVector{1, 0}));
}

#include <gtest/gtest.h>

#include <set>

#include "flopwin/windows.hpp"

using namespace flopwin;

namespace {

const GitPresentation& P() {
  static const GitPresentation p = universal_flop_length2();
  return p;
}

// Hexagon membership written out by hand: |x| <= 1, |y| <= 1, |x + y| <= 1 around δ.
std::set<Weight> hexagon_points(const Rational& s, bool closed) {
  std::set<Weight> out;
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      Rational u = x - s, v = y - s, w = Rational(x + y) - 2 * s;
      auto ok = [&](const Rational& q) { return closed ? abs(q) <= 1 : abs(q) < 1; };
      if (ok(u) && ok(v) && ok(w)) out.insert(Weight{x, y});
    }
  return out;
}

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Names, WeightNames) {
  EXPECT_EQ(weight_name({0, 0}, P()), "O");
  EXPECT_EQ(weight_name({1, 0}, P()), "V");
  EXPECT_EQ(weight_name({0, -1}, P()), "V(−1)");
  EXPECT_EQ(weight_name({1, -1}, P()), "Sym²V(−1)");
  EXPECT_EQ(weight_name({2, 2}, P()), "O(2)");
}

TEST(Windows, MatchBruteForcePoints) {
  for (long j = -3; j <= 3; ++j) {
    auto w = window(P(), {FaceKind::Interval, j});
    const Rational mid = frac(2 * j + 1, 4);  // midpoint of (j/2, (j+1)/2)
    EXPECT_EQ(as_set(w.points), hexagon_points(mid, false)) << "C:" << j;
    auto b = big_window(P(), {FaceKind::Point, j});
    EXPECT_EQ(as_set(b.points), hexagon_points(Rational(Rational(j + 1) / 2), true)) << "D:" << j;
  }
}

TEST(Windows, PaperTable) {
  EXPECT_EQ(window(P(), FaceRef::parse("C:-2")).label, "⟨O(−1), V(−1)⟩");
  EXPECT_EQ(window(P(), FaceRef::parse("C:-1")).label, "⟨V(−1), O⟩");
  EXPECT_EQ(window(P(), FaceRef::parse("C:0")).label, "⟨O, V⟩");
  EXPECT_EQ(window(P(), FaceRef::parse("C:1")).label, "⟨V, O(1)⟩");
  EXPECT_EQ(window(P(), FaceRef::parse("C:2")).label, "⟨O(1), V(1)⟩");
  EXPECT_EQ(big_window(P(), FaceRef::parse("D:-1")).names(),
            (std::set<std::string>{"V(−1)", "Sym²V(−1)", "O", "V"}));
  EXPECT_EQ(big_window(P(), FaceRef::parse("D:0")).names(), (std::set<std::string>{"O", "V", "O(1)"}));
}

TEST(Windows, PicardPeriodicity) {
  for (long j = -4; j <= 4; ++j) {
    auto a = window(P(), {FaceKind::Interval, j});
    auto b = window(P(), {FaceKind::Interval, j + 2});
    std::set<Weight> shifted;
    for (const auto& m : a.points) shifted.insert(m + Weight{1, 1});
    EXPECT_EQ(shifted, as_set(b.points));
  }
}

TEST(Windows, WrongFaceKind) {
  EXPECT_THROW(window(P(), FaceRef::parse("D:0")), std::invalid_argument);
  EXPECT_THROW(big_window(P(), FaceRef::parse("C:0")), std::invalid_argument);
}

TEST(Windows, Conifold) {
  const auto c = conifold();
  auto w = window(c, FaceRef::parse("C:0"));
  EXPECT_EQ(as_set(w.points), (std::set<Weight>{Weight{0}, Weight{1}}));
  auto d = big_window(c, FaceRef::parse("D:0"));
  EXPECT_EQ(as_set(d.points), (std::set<Weight>{Weight{0}, Weight{1}, Weight{2}}));
}

TEST(Kappa, WallMinusTwo) {
  auto k = kappa_generators(P(), FaceRef::parse("D:-2"), FaceRef::parse("C:-2"));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].character, (Weight{0, 0}));
  EXPECT_EQ(k[0].subgroup, (Cocharacter{-1, -1}));
  EXPECT_EQ(k[0].canonical_name, "O_S0(O)");
}

TEST(Kappa, WallMinusOneContractionSide) {
  auto k = kappa_generators(P(), FaceRef::parse("D:-1"), FaceRef::parse("C:-1"));
  std::set<std::pair<Weight, Cocharacter>> got;
  for (const auto& g : k) got.insert({g.character, g.subgroup});
  std::set<std::pair<Weight, Cocharacter>> want = {{{-1, 1}, {0, -1}},
                                                   {{0, 1}, {-1, -1}},
                                                   {{0, 1}, {0, -1}},
                                                   {{1, 0}, {-1, -1}}};
  EXPECT_EQ(got, want);
  std::set<std::string> names;
  for (const auto& g : k) names.insert(g.canonical_name);
  EXPECT_EQ(names, (std::set<std::string>{"O_S0(V)", "σ_*O_S̃1(Q)", "σ_*O_S̃1(Q²D⁻¹)"}));
  for (const auto& g : k) EXPECT_NE(g.subgroup, (Cocharacter{0, 1}));
}

TEST(Kappa, OtherSideIsDual) {
  // χ ↦ −w₀χ, λ ↦ −w₀λ carries one side to the other
  auto a = kappa_generators(P(), FaceRef::parse("D:-1"), FaceRef::parse("C:-1"));
  auto b = kappa_generators(P(), FaceRef::parse("D:-1"), FaceRef::parse("C:0"));
  std::set<std::pair<Weight, Cocharacter>> sa, sb;
  for (const auto& g : a)
    sa.insert({Weight{-g.character[1], -g.character[0]}, Cocharacter{-g.subgroup[1], -g.subgroup[0]}});
  for (const auto& g : b) sb.insert({g.character, g.subgroup});
  EXPECT_EQ(sa, sb);
}

TEST(Kappa, Errors) {
  EXPECT_THROW(kappa_generators(P(), FaceRef::parse("D:-1"), FaceRef::parse("C:3")), std::invalid_argument);
  EXPECT_THROW(kappa_generators(P(), FaceRef::parse("C:-1"), FaceRef::parse("C:0")), std::invalid_argument);
}

TEST(Facets, MuAndNu) {
  const Zonotope z = nabla(P());
  EXPECT_EQ(mu_F(z, {1, 0}), (Cocharacter{-1, 0}));
  EXPECT_THROW(mu_F(z, {1, -1}), std::invalid_argument);
  EXPECT_TRUE(nu_filter({frac(-1, 4), frac(-1, 4)}, {0, -1}));
  EXPECT_FALSE(nu_filter({frac(-1, 4), frac(-1, 4)}, {1, 0}));  // not antidominant
  EXPECT_FALSE(nu_filter({frac(1, 4), frac(1, 4)}, {-1, -1}));
}

TEST(KTheory, AlternatingSum) {
  Resolution g{{{{Weight{0, -1}, 1}}, {{Weight{0, 0}, 1}, {Weight{1, -1}, 1}}, {{Weight{1, 0}, 1}}}};
  auto k = k_class(g);
  EXPECT_EQ((k[Weight{1, 0}]), 1);
  EXPECT_EQ((k[Weight{0, 0}]), -1);
  EXPECT_EQ((k[Weight{1, -1}]), -1);
  EXPECT_EQ((k[Weight{0, -1}]), 1);
  EXPECT_EQ(k.over({Weight{1, 0}, Weight{2, 2}}), (IVec{1, 0}));
}

#include <gtest/gtest.h>

#include <random>

#include "flopwin/quiver.hpp"

using namespace flopwin;
using namespace flopwin::quiver;

namespace {

struct Sampler {
  std::mt19937_64 rng{99};
  std::uniform_int_distribution<long> d{-4, 4};
  Rational r() { return Rational(d(rng)); }
  Mat2 tracefree() {
    Rational a = r();
    return {{{a, r()}, {r(), -a}}};
  }
  QuiverRep rep() { return from_chart({r(), r()}, {r(), r()}, tracefree(), tracefree()); }
  Mat2 invertible() {
    for (;;) {
      Mat2 g{{{r(), r()}, {r(), r()}}};
      if (det(g) != 0) return g;
    }
  }
};

QuiverRep scalar_rep(const Vec2& a, const Vec2& as, const Rational& b) {
  QuiverRep q;
  q.alpha = a;
  q.alpha_star = as;
  q.beta = identity(b);
  q.gamma = identity(-b);
  q.t = dot(as, a);
  q.delta = identity(q.t / 2) - outer(a, as);
  q.t_beta = q.t_gamma = b * b;
  q.t_delta = q.t * q.t / 4;
  return q;
}

}  // namespace

TEST(Quiver, FromChartSatisfiesRelations) {
  Sampler s;
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(relations_hold(s.rep()).holds);
}

TEST(Quiver, RelationViolationReported) {
  Sampler s;
  auto r = s.rep();
  r.t_beta += 1;
  auto rep = relations_hold(r);
  EXPECT_FALSE(rep.holds);
  ASSERT_EQ(rep.residuals.size(), 1u);
  EXPECT_EQ(rep.residuals[0].first, "beta^2 = T_beta");
  EXPECT_THROW(is_semistable(r, Stability::Theta1), std::invalid_argument);
  EXPECT_THROW(from_chart({1, 0}, {0, 1}, identity(1), zero_mat()), std::invalid_argument);
}

TEST(Quiver, ScalarLoopsAreUnstable) {
  Sampler s;
  for (int i = 0; i < 300; ++i) {
    Rational b = s.r();
    if (b == 0) b = 2;
    auto q = scalar_rep({s.r(), s.r()}, {s.r(), s.r()}, b);
    ASSERT_TRUE(relations_hold(q).holds);
    EXPECT_FALSE(is_semistable(q, Stability::Theta1));
    EXPECT_NE(stratum(q), Stratum::Semistable);
  }
}

TEST(Quiver, BaseEquationVanishes) {
  Sampler s;
  for (int i = 0; i < 2000; ++i) EXPECT_EQ(base_equation(base_map(s.rep())), 0);
}

TEST(Quiver, BaseMapIsInvariant) {
  Sampler s;
  for (int i = 0; i < 300; ++i) {
    auto r = s.rep();
    auto g = s.invertible();
    auto gr = act(g, r);
    EXPECT_TRUE(relations_hold(gr).holds);
    EXPECT_EQ(base_map(gr), base_map(r));
    EXPECT_EQ(is_semistable(gr, Stability::Theta1), is_semistable(r, Stability::Theta1));
    EXPECT_EQ(is_semistable(gr, Stability::Theta2), is_semistable(r, Stability::Theta2));
  }
}

TEST(Quiver, StrataConsistentWithStability) {
  Sampler s;
  for (int i = 0; i < 2000; ++i) {
    auto r = s.rep();
    EXPECT_EQ(stratum(r) == Stratum::Semistable, is_semistable(r, Stability::Theta1));
    if (r.alpha == Vec2{0, 0}) EXPECT_EQ(stratum(r), Stratum::S0);
  }
  QuiverRep zero = from_chart({0, 0}, {1, 1}, zero_mat(), zero_mat());
  EXPECT_EQ(stratum(zero), Stratum::S0);
  EXPECT_STREQ(to_string(Stratum::S1), "S1");
}

TEST(Quiver, KnownPoint) {
  // β = γ = [[0,1],[1,0]], α = α* = 0: v = +1 and u = w = −1
  Mat2 s{{{0, 1}, {1, 0}}};
  auto r = from_chart({0, 0}, {0, 0}, s, s);
  auto p = base_map(r);
  EXPECT_EQ(p.u, -1);
  EXPECT_EQ(p.w, -1);
  EXPECT_EQ(p.v, 1);
  EXPECT_EQ(p.t, 0);
  EXPECT_EQ(base_equation(p), 0);
}

TEST(Quiver, SingularLocus) {
  for (long b = -3; b <= 3; ++b)
    for (long c = -3; c <= 3; ++c)
      for (long t = -2; t <= 2; ++t) {
        auto p = z2_point(b, c, t);
        auto rep = singular_locus_check(p);
        EXPECT_TRUE(rep.on_singular_locus());
        EXPECT_TRUE(rep.in_z2);
        EXPECT_EQ(base_equation(p), 0);
      }
  BasePoint off{1, 0, 0, 0, 0, 0, 0};
  EXPECT_FALSE(singular_locus_check(off).on_singular_locus());
  EXPECT_FALSE(singular_locus_check(off).in_z2);
  EXPECT_TRUE(singular_locus_check(BasePoint{}).in_z1);
  EXPECT_EQ(conic_discriminant(-1, 1, -1), 0);
}

#include <gtest/gtest.h>

#include <random>

#include "flopwin/characters.hpp"

using namespace flopwin::coh;

namespace {

using Weights = std::vector<std::pair<long, long>>;

Weights weights_of(const Irrep& r) {
  Weights w;
  for (long i = 0; i <= r.p - r.q; ++i) w.push_back({r.p - i, r.q + i});
  return w;
}

// Sym^2 by listing unordered pairs of weight vectors.
Character brute_sym2(const Weights& w) {
  Character c;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i; j < w.size(); ++j) c.add({w[i].first + w[j].first, w[i].second + w[j].second}, 1);
  return c;
}

}  // namespace

TEST(Characters, IrrepCharacters) {
  EXPECT_EQ(irrep_character(V()), Character::monomial(1, 0) + Character::monomial(0, 1));
  EXPECT_EQ(irrep_character(D()), Character::monomial(1, 1));
  EXPECT_EQ(irrep_character(S2Vm1()),
            Character::monomial(1, -1) + Character::monomial(0, 0) + Character::monomial(-1, 1));
  EXPECT_THROW(Irrep(0, 1), std::invalid_argument);
  EXPECT_EQ(irrep_name(S2Vm1()), "Sym^2V(-1)");
}

TEST(Characters, ClebschGordan) {
  auto v = irrep_character(V());
  EXPECT_EQ(decompose(v * v), (std::map<Irrep, long>{{Irrep(2, 0), 1}, {Irrep(1, 1), 1}}));
  EXPECT_EQ(decompose(v * irrep_character(Vstar())), (std::map<Irrep, long>{{Irrep(1, -1), 1}, {Irrep(0, 0), 1}}));
  EXPECT_EQ(decompose(brute_sym2(weights_of(S2Vm1()))),
            (std::map<Irrep, long>{{Irrep(2, -2), 1}, {Irrep(0, 0), 1}}));
}

TEST(Characters, DecomposeRejectsVirtual) {
  EXPECT_THROW(decompose(irrep_character(O()) - irrep_character(V())), std::invalid_argument);
  EXPECT_THROW(decompose(Character::monomial(1, 0)), std::invalid_argument);  // not symmetric
}

TEST(Characters, RoundTripRandom) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-3, 3), m(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<Irrep, long> rep;
    for (int k = 0; k < 4; ++k) {
      long a = d(rng), b = d(rng);
      long mult = m(rng);
      if (mult) rep[Irrep(std::max(a, b), std::min(a, b))] += mult;
    }
    EXPECT_EQ(decompose(character_of(rep)), rep);
  }
}

TEST(Characters, DualAndSymmetry) {
  auto c = irrep_character(Irrep(3, -1));
  EXPECT_TRUE(c.is_symmetric());
  EXPECT_EQ(decompose(c.dual()), (std::map<Irrep, long>{{Irrep(1, -3), 1}}));
  EXPECT_EQ(c.dim(), 5);
}

TEST(SymSeries, Basics) {
  auto s = sym_graded({V()}, 3);
  EXPECT_EQ(decompose(s[2]), (std::map<Irrep, long>{{Irrep(2, 0), 1}}));
  EXPECT_EQ(multiplicity(V(), s), (std::vector<long>{0, 1, 0, 0}));
  auto zero = sym_graded({}, 3);
  EXPECT_EQ(multiplicity(O(), zero), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(multiplicity(O(), sym_graded({V(), Vstar()}, 2))[2], 1);
  // Sym² of Sym²V(−1) agrees with the brute-force pair list
  EXPECT_EQ(sym_graded({S2Vm1()}, 2)[2], brute_sym2(weights_of(S2Vm1())));
}

TEST(SymSeries, InvariantsOfS0) {
  auto g = sym_graded({Vstar(), S2Vm1(), S2Vm1()}, 12);
  auto m = multiplicity(O(), g);
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(m[static_cast<std::size_t>(n)], n % 2 ? 0 : (n / 2 + 2) * (n / 2 + 1) / 2);
}

TEST(SymSeries, FibreAlgebraVanishing) {
  auto m = multiplicity(Vstar(), sym_graded({V(), S2Vm1(), S2Vm1()}, 15));
  for (long x : m) EXPECT_EQ(x, 0);
}

TEST(SymSeries, CentralCharacterObstruction) {
  // summands with nonnegative determinant weight p+q only produce irreps with p+q >= 0
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Irrep> summands;
    while (summands.size() < 3) {
      long a = d(rng), b = d(rng);
      Irrep r(std::max(a, b), std::min(a, b));
      if (r.p + r.q >= 0) summands.push_back(r);
    }
    for (const auto& c : sym_graded(summands, 5))
      for (const auto& [irr, k] : decompose(c)) EXPECT_GE(irr.p + irr.q, 0);
  }
}

TEST(Parsing, IrrepLabels) {
  EXPECT_EQ(parse_irrep("1,-1"), S2Vm1());
  EXPECT_EQ(parse_irrep("V*"), Vstar());
  EXPECT_EQ(parse_irrep("S2Vm1"), S2Vm1());
  EXPECT_THROW(parse_irrep("W"), std::invalid_argument);
  EXPECT_THROW(parse_irrep("0,1"), std::invalid_argument);
  EXPECT_THROW(parse_irrep("1x,0"), std::invalid_argument);
}

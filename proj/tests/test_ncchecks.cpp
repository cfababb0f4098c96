#include <gtest/gtest.h>

#include "flopwin/nccatalog.hpp"
#include "flopwin/ncchecks.hpp"

using namespace flopwin;
using namespace flopwin::nc;

namespace {

struct Acon {
  RewriteSystem rs{acon(), 10};
  Poly t = parse("t", rs.presentation());
  Poly c = parse("[beta, gamma]", rs.presentation());
};

}  // namespace

TEST(Kernels, TAndCommutator) {
  Acon a;
  EXPECT_TRUE(kernel_equals_ideal(a.rs, a.t, Side::Right, a.c, 10));
  EXPECT_TRUE(kernel_equals_ideal(a.rs, a.c, Side::Right, a.t, 10));
  EXPECT_TRUE(kernel_equals_ideal(a.rs, a.t, Side::Left, a.c, 10));
  // negative control: the kernel of t is not (t)
  EXPECT_FALSE(kernel_equals_ideal(a.rs, a.t, Side::Right, a.t, 10));
}

TEST(Kernels, DimsAgreeWithQuotients) {
  // dim ker(·t)_k = dim A_k − dim (tA)_{k+1} = dim A_k − (dim A_{k+1} − dim (A/t)_{k+1})
  Acon a;
  auto ker = graded_kernel(a.rs, a.t, Side::Right, 10).dims;
  auto A = a.rs.dims();
  auto Q = hilbert(with_relations(acon(), {"t"}, "acon/t"), 10);
  for (long k = 0; k <= 9; ++k) {
    auto i = static_cast<std::size_t>(k);
    EXPECT_EQ(ker[i], A[i] - (A[i + 1] - Q[i + 1])) << k;
  }
}

TEST(Resolutions, PeriodicExact) {
  Acon a;
  EXPECT_TRUE(resolution_check(a.rs, {{a.t, 1}, {a.c, 3}, {a.t, 4}, {a.c, 6}}, 10).exact);
  EXPECT_TRUE(resolution_check(a.rs, {{a.c, 2}, {a.t, 3}, {a.c, 5}, {a.t, 6}}, 10).exact);
}

TEST(Resolutions, BadShiftsFail) {
  Acon a;
  auto r = resolution_check(a.rs, {{a.t, 2}, {a.c, 4}}, 10);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.failed_position, 1);
  // t followed by t is a complex only if t² = 0, which it is not
  auto s = resolution_check(a.rs, {{a.t, 1}, {a.t, 2}}, 10);
  EXPECT_FALSE(s.exact);
}

TEST(Ses, ShiftTwo) {
  auto s = ses_dims_check(12);
  EXPECT_TRUE(s.holds);
  EXPECT_EQ(s.a, hilbert(acon(), 12));
}

TEST(FiberProduct, GeneratedAndDims) {
  auto f = fiber_product(10);
  EXPECT_TRUE(f.relations_hold);
  EXPECT_TRUE(f.generates);
  EXPECT_TRUE(f.lands_in_product);
  EXPECT_TRUE(f.surjective);
  EXPECT_EQ(f.generated, f.dims);
  EXPECT_EQ(f.dims, hilbert(acon(), 10));
  // independent count: dim C[t,b,c]_k + dim End(G)_k − dim C[b,c]_k
  for (long k = 0; k <= 10; ++k)
    EXPECT_EQ(f.dims[static_cast<std::size_t>(k)], (k + 2) * (k + 1) / 2 + (k + 2) * (k + 2) / 4 - (k + 1)) << k;
}

TEST(Substitution, HypersurfaceAndSingularLocus) {
  RewriteSystem a(acon(), 12);
  EXPECT_TRUE(substitute_and_reduce(a, base_ring(), base_dictionary(), hypersurface_text()).is_zero());
  for (const auto& g : singular_generators_text())
    EXPECT_TRUE(substitute_and_reduce(a, base_ring(), base_dictionary(), g).is_zero()) << g;
  // negative control: y alone is not zero
  EXPECT_FALSE(substitute_and_reduce(a, base_ring(), base_dictionary(), "y").is_zero());
}

TEST(Substitution, WrongSignFails) {
  RewriteSystem a(acon(), 12);
  auto dict = base_dictionary();
  dict["v"] = "-1/2*(beta*gamma + gamma*beta)";
  EXPECT_FALSE(substitute_and_reduce(a, base_ring(), dict, hypersurface_text()).is_zero());
}

TEST(Laufer, SliceMatchesTarget) {
  auto l = laufer_slice(12);
  EXPECT_TRUE(l.match);
  EXPECT_TRUE(l.beta_cubed_zero);
  EXPECT_EQ(l.slice, (GradedDims{1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0}));
}

TEST(Centrality, Elements) {
  RewriteSystem a(acon(), 10);
  const auto& P = a.presentation();
  EXPECT_TRUE(is_central(a, parse("beta^2", P)));
  EXPECT_TRUE(is_central(a, parse("gamma^2", P)));
  EXPECT_TRUE(is_central(a, parse("t", P)));
  EXPECT_FALSE(is_central(a, parse("beta", P)));
  EXPECT_FALSE(is_central(a, parse("[beta, gamma]", P)));
}

TEST(Ore, FreeBasis) {
  auto o = ore_basis_check(12);
  EXPECT_TRUE(o.central);
  EXPECT_TRUE(o.free_basis);
  EXPECT_EQ(o.dims, o.expected);
}

TEST(Glue, TotalDims) {
  auto g = glue(Ctbc(), with_relations(acon(), {"t"}, "acon/t"), hilbert(Cbc(), 8), {"t"}, {"[beta, gamma]"}, 8);
  EXPECT_EQ(g.total[0], 3);
  EXPECT_EQ(g.total[1], 7);
  for (long k = 0; k <= 8; ++k) {
    auto i = static_cast<std::size_t>(k);
    EXPECT_EQ(g.total[i], g.top[i] + g.bottom[i] + g.bimodule[i]);
  }
  EXPECT_THROW(glue(Ctbc(), endG(), GradedDims{1, 1, 1}, {"t"}, {"beta"}, 2), std::invalid_argument);
}

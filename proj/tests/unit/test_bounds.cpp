#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stabkit/bounds.hpp"
#include "stabkit/catalog.hpp"
#include "stabkit/scenario.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace testing_support;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::builtin();
  return c;
}

SurgeryDisc discs(const std::string& knot, const std::string& spec) {
  return resolve_disc(catalog(), resolve_knot(catalog(), knot), spec);
}

std::string power(const std::string& base, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? "+" : "") + base;
  return out;
}

}  // namespace

TEST(Bounds, QuantityNames) {
  EXPECT_STREQ(to_string(Quantity::D1), "d1");
  EXPECT_STREQ(to_string(Quantity::D2), "d2");
  EXPECT_STREQ(to_string(Quantity::D2Metabelian), "d2_metabelian");
}

TEST(Bounds, D1Examples) {
  auto unknot = unknotted_sphere();
  for (std::size_t m = 1; m <= 4; ++m) {
    auto k = resolve_two_knot(catalog(), "double(9_46.right)^" + std::to_string(m));
    EXPECT_EQ(d1_lower_bound(k, unknot), m);
    EXPECT_EQ(d1_lower_bound(unknot, k), m);
    EXPECT_EQ(d1_lower_bound(k, k), 0u);
  }
  auto two = resolve_two_knot(catalog(), "double(9_46.right)^2");
  auto five = resolve_two_knot(catalog(), "double(9_46.right)^5");
  EXPECT_EQ(d1_lower_bound(two, five), 3u);
}

TEST(Bounds, D2AbelianExamples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto k = "sum^" + std::to_string(n) + "(9_46)";
    auto l = disc_kernel_q(discs(k, power("left", n)));
    auto r = disc_kernel_q(discs(k, power("right", n)));
    EXPECT_EQ(d2_lower_bound_abelian(l, r), n);
    EXPECT_EQ(d2_lower_bound_abelian(r, l), n);
    EXPECT_EQ(d2_lower_bound_abelian(l, l), 0u);
  }
  auto l = disc_kernel_q(discs("9_46", "left"));
  auto r = disc_kernel_q(discs("9_46", "right"));
  EXPECT_THROW(d2_lower_bound_abelian(l, disc_kernel_q(discs("6_1", "std"))), Error);
  EXPECT_EQ(d2_lower_bound_abelian(l, r), 1u);
}

TEST(Bounds, D2UpperExamples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto k = "sum^" + std::to_string(n) + "(9_46)";
    EXPECT_EQ(d2_upper_bound(discs(k, power("left", n)), discs(k, power("right", n))), n);
  }
  auto mixed = d2_upper_bound(discs("sum^3(9_46)", "left+right+left"), discs("sum^3(9_46)", "left+left+left"));
  EXPECT_EQ(mixed, 1u);
  EXPECT_EQ(d2_upper_bound(discs("9_46", "left"), discs("9_46", "left")), 0u);
  EXPECT_FALSE(d2_upper_bound(discs("9_46", "left"), discs("6_1", "std")).has_value());
  auto s = resolve_satellite(catalog(), "thmC(N=5)");
  EXPECT_EQ(d2_upper_bound(s), 5u);
}

TEST(Bounds, MonotonicityExamples) {
  auto c = PresentedModule<Integer>(Matrix<Integer>{{3, 0}, {0, 3}});
  auto m = direct_sum(c, c);
  Matrix<Integer> gen(4, 1);
  gen(0, 0) = 1;
  gen(2, 0) = 1;
  auto r = stabilization_monotonicity_check(m, Submodule<Integer>(m, gen));
  EXPECT_EQ(r.before, 4u);
  EXPECT_EQ(r.after, 3u);
  EXPECT_TRUE(r.holds);
  auto zero = stabilization_monotonicity_check(m, Submodule<Integer>(m, Matrix<Integer>(4, 1)));
  EXPECT_EQ(zero.after, zero.before);
  EXPECT_THROW(stabilization_monotonicity_check(c, Submodule<Integer>(m, gen)), Error);
  EXPECT_THROW(stabilization_monotonicity_check(m, Submodule<Integer>(m, Matrix<Integer>::identity(4))), Error);
}

TEST(BoundsProperty, MonotonicityAgainstBruteForce) {
  int checked = 0;
  for (int i = 0; i < 400 && checked < 220; ++i) {
    std::size_t n = uniform(1, 3);
    Matrix<Integer> rel(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      rel(a, a) = Integer(uniform(2, 6));
      for (std::size_t b = a + 1; b < n; ++b) rel(a, b) = Integer(uniform(-3, 3));
    }
    PresentedModule<Integer> m(rel);
    Matrix<Integer> g(n, 1);
    for (std::size_t a = 0; a < n; ++a) g(a, 0) = Integer(uniform(-4, 4));
    auto r = stabilization_monotonicity_check(m, Submodule<Integer>(m, g));
    ASSERT_TRUE(r.holds);
    try {
      auto table = oracle::finite_module(to_oracle(rel), n);
      auto quotient = oracle::finite_module(to_oracle(hstack(rel, g)), n);
      ASSERT_EQ(oracle::brute_generating_rank(table), r.before);
      ASSERT_EQ(oracle::brute_generating_rank(quotient), r.after);
      ++checked;
    } catch (const oracle::CapExceeded&) {
    }
  }
  EXPECT_GE(checked, 200);
}

TEST(Bounds, FullReportDiscPair) {
  auto rep = full_report(DiscPair{discs("sum^3(9_46)", "left+left+left"), discs("sum^3(9_46)", "right+right+right")});
  EXPECT_EQ(rep.quantity, Quantity::D2);
  EXPECT_EQ(rep.lower, 3u);
  EXPECT_EQ(rep.upper, 3u);
  EXPECT_EQ(rep.components.at("abelian"), 3u);
  EXPECT_FALSE(rep.provenance.empty());

  auto same = full_report(DiscPair{discs("9_46", "left"), discs("9_46", "left")});
  EXPECT_EQ(same.lower, 0u);
  EXPECT_EQ(same.upper, 0u);
}

TEST(Bounds, FullReportTwoKnots) {
  auto rep = full_report(TwoKnotPair{resolve_two_knot(catalog(), "double(9_46.right)^3"), unknotted_sphere()});
  EXPECT_EQ(rep.quantity, Quantity::D1);
  EXPECT_EQ(rep.lower, 3u);
}

TEST(Bounds, FullReportSatellite) {
  auto rep = full_report(resolve_satellite(catalog(), "thmC(g=2)"));
  EXPECT_EQ(rep.quantity, Quantity::D2Metabelian);
  EXPECT_EQ(rep.components.at("abelian"), 0u);
  EXPECT_EQ(rep.components.at("metabelian"), 2u);
  EXPECT_EQ(rep.lower, 2u);
  EXPECT_EQ(rep.upper, 8u);
}

TEST(Bounds, LocalKnotsDoNotChangeBounds) {
  auto l = discs("sum^2(9_46)", "left+left");
  auto r = discs("sum^2(9_46)", "right+right");
  auto base = full_report(DiscPair{l, r});
  auto with = full_report(DiscPair{add_local_2knot(add_local_2knot(l)), add_local_2knot(r)});
  EXPECT_EQ(base.lower, with.lower);
  EXPECT_EQ(base.upper, with.upper);
}

TEST(Bounds, LowerNeverExceedsUpper) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto k = "sum^" + std::to_string(n) + "(9_46)";
    for (const char* a : {"left", "right"})
      for (const char* b : {"left", "right"}) {
        auto rep = full_report(DiscPair{discs(k, power(a, n)), discs(k, power(b, n))});
        ASSERT_TRUE(rep.upper.has_value());
        EXPECT_LE(rep.lower, *rep.upper);
      }
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    auto rep = full_report(resolve_satellite(catalog(), "thmC(N=" + std::to_string(n) + ")"));
    EXPECT_LE(rep.lower, *rep.upper);
  }
}

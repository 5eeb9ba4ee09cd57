#include <gtest/gtest.h>

#include <set>

#include "stabkit/metabelian.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace testing_support;

namespace {

SeifertKnot k946() { return SeifertKnot("9_46", Matrix<Integer>{{0, 2}, {1, 0}}); }
SeifertKnot k61() { return SeifertKnot("6_1", Matrix<Integer>{{1, 1}, {0, -2}}); }
SurgeryDisc disc61() { return SurgeryDisc("std", k61(), Matrix<Integer>{{1}, {1}}); }
SurgeryDisc unknot_disc() { return SurgeryDisc("std", SeifertKnot::unknot(), Matrix<Integer>(0, 0)); }

SatelliteScenario thm_c(std::size_t n) {
  return make_satellite_scenario(disc61(), {Integer(1), Integer(0)}, true, disc61(), n);
}

EisensteinInt xi_minus_2() { return EisensteinInt::w() - EisensteinInt(2); }

std::vector<std::vector<F3>> all_vectors(std::size_t n) {
  std::vector<std::vector<F3>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<F3>> next;
    for (const auto& v : out)
      for (int c = 0; c < 3; ++c) {
        auto w = v;
        w.push_back(F3(c));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool annihilates(const std::vector<std::vector<F3>>& constraints, const std::vector<F3>& x) {
  for (const auto& a : constraints) {
    F3 dot;
    for (std::size_t i = 0; i < x.size(); ++i) dot += a[i] * x[i];
    if (!dot.is_zero()) return false;
  }
  return true;
}

std::size_t support(const std::vector<F3>& x) {
  std::size_t n = 0;
  for (auto c : x) n += !c.is_zero();
  return n;
}

}  // namespace

TEST(Metabelian, EisensteinAlexanderModules) {
  auto m = eisenstein_alexander(k61());
  EXPECT_EQ(order(m), canonical((EisensteinInt(2) * EisensteinInt::w() - EisensteinInt(1)) * xi_minus_2()));
  EXPECT_EQ(order(m).norm(), 49);
  EXPECT_EQ(order(eisenstein_alexander(k946())).norm(), 49);
  EXPECT_TRUE(is_zero_module(eisenstein_alexander(SeifertKnot::unknot())));
}

TEST(Metabelian, OneOplusBar) {
  auto m = PresentedModule<EisensteinInt>::cyclic(xi_minus_2());
  auto d = one_oplus_bar(m);
  EXPECT_TRUE(associates(order(d), xi_minus_2() * xi_minus_2().conjugate()));
  EXPECT_EQ(order(d).norm(), 49);
  // (w-2) and its conjugate are coprime, so the doubled module is cyclic.
  EXPECT_EQ(generating_rank(d), 1u);
  EXPECT_TRUE(is_zero_module(one_oplus_bar(PresentedModule<EisensteinInt>::free(0))));
  // Order 7^k up to units: both factors see every prime, gr doubles.
  auto seven = PresentedModule<EisensteinInt>::cyclic(EisensteinInt(7));
  EXPECT_EQ(generating_rank(one_oplus_bar(seven)), 2 * generating_rank(seven));
  EXPECT_EQ(conjugate(conjugate(m)), m);
  EXPECT_EQ(invariant_factors(twisted_homology_abelian_rep(k61())),
            invariant_factors(direct_sum(eisenstein_alexander(k61()), conjugate(eisenstein_alexander(k61())))));
  EXPECT_EQ(order(twisted_homology_abelian_rep(k61())).norm(), 49 * 49);
  EXPECT_TRUE(is_zero_module(twisted_homology_abelian_rep(SeifertKnot::unknot())));
}

TEST(Metabelian, Obstruction) {
  auto ob = metabelian_obstruction(k61(), disc61());
  EXPECT_TRUE(ob.nonzero);
  auto f = invariant_factors(ob.module);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(associates(f[0], xi_minus_2()));
  EXPECT_EQ(f[0].norm(), 7);

  auto u = metabelian_obstruction(SeifertKnot::unknot(), unknot_disc());
  EXPECT_FALSE(u.nonzero);
  EXPECT_TRUE(is_zero_module(u.module));

  auto left = metabelian_obstruction(k946(), SurgeryDisc("left", k946(), Matrix<Integer>{{1}, {0}}));
  EXPECT_TRUE(left.nonzero);
  EXPECT_TRUE(associates(order(left.module), EisensteinInt(2) * EisensteinInt::w() - EisensteinInt(1)));
  EXPECT_THROW(metabelian_obstruction(k946(), disc61()), Error);
}

TEST(Metabelian, ScenarioValidation) {
  EXPECT_NO_THROW(thm_c(4));
  auto fails = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(fails([] { make_satellite_scenario(disc61(), {Integer(0), Integer(0)}, true, disc61(), 1); }),
            ErrorKind::Hypothesis);
  EXPECT_EQ(fails([] { make_satellite_scenario(disc61(), {Integer(1), Integer(0)}, false, disc61(), 1); }),
            ErrorKind::Hypothesis);
  EXPECT_EQ(fails([] { make_satellite_scenario(disc61(), {Integer(1)}, true, disc61(), 1); }),
            ErrorKind::DimensionMismatch);
  // 9_46 has A(K) = Q/(t-2) + Q/(2t-1), cyclic, but no class generates through (1,0).
  SurgeryDisc left("left", k946(), Matrix<Integer>{{1}, {0}});
  EXPECT_EQ(fails([&] { make_satellite_scenario(left, {Integer(1), Integer(0)}, true, disc61(), 1); }),
            ErrorKind::Hypothesis);
  EXPECT_NO_THROW(make_satellite_scenario(left, {Integer(1), Integer(1)}, true, disc61(), 1));
}

TEST(Metabelian, CharacterSpace) {
  EXPECT_EQ(character_space_dimension(thm_c(4)), 4u);
  EXPECT_EQ(character_space_dimension(thm_c(0)), 0u);
  EXPECT_EQ(character_space_dimension(branched_double_cover(k946())), 2u);
  EXPECT_EQ(character_space_dimension(branched_double_cover(SeifertKnot::unknot())), 0u);
  EXPECT_EQ(character_space_dimension(PresentedModule<Integer>::free(1)), 1u);
}

TEST(Metabelian, CharacterFormatting) {
  Character c{{F3(1), F3(0), F3(2), F3(1)}};
  EXPECT_EQ(c.to_string(), "[1,0,2,1]");
  EXPECT_EQ(c.nonzero_count(), 3u);
  EXPECT_EQ(Character{}.to_string(), "[]");
}

TEST(Metabelian, TwistedKernels) {
  auto s = thm_c(3);
  auto zero = satellite_twisted_kernels(s, Character{std::vector<F3>(3)});
  EXPECT_TRUE(span_equal(zero.p1, zero.p2));
  EXPECT_EQ(invariant_factors(submodule_presentation(zero.p1)), invariant_factors(submodule_presentation(zero.p2)));

  auto one = make_satellite_scenario(disc61(), {Integer(1), Integer(0)}, true, disc61(), 1);
  auto pair = satellite_twisted_kernels(one, Character{{F3(1)}});
  auto quot = quotient_of_submodules(pair.p2, pair.p1);
  EXPECT_GE(generating_rank(quot), 1u);
  EXPECT_EQ(order(quot), EisensteinInt(7));

  auto mixed = satellite_twisted_kernels(s, Character{{F3(1), F3(0), F3(2)}});
  EXPECT_EQ(generating_rank(quotient_of_submodules(mixed.p2, mixed.p1)), 2u);
  EXPECT_TRUE(span_equal(satellite_twisted_kernel(s, Character{{F3(1), F3(0), F3(2)}}, DiscChoice::One), mixed.p1));
  EXPECT_THROW(satellite_twisted_kernels(s, Character{{F3(1)}}), Error);

  auto rational = satellite_rational_kernels(s);
  EXPECT_TRUE(span_equal(rational.product_kernel, rational.antidiagonal));
}

TEST(Metabelian, CharacterSelectionExamples) {
  auto all = character_selection({}, 5);
  EXPECT_EQ(all.components, std::vector<F3>(5, F3(1)));
  std::vector<std::vector<F3>> e1{{F3(1), F3(0), F3(0)}};
  auto c = character_selection(e1, 3);
  EXPECT_TRUE(annihilates(e1, c.components));
  EXPECT_GE(c.nonzero_count(), 2u);
  EXPECT_TRUE(c.components[0].is_zero());
  EXPECT_EQ(character_selection({}, 0).size(), 0u);
}

TEST(MetabelianProperty, CharacterSelectionExhaustive) {
  for (int i = 0; i < 240; ++i) {
    std::size_t n = uniform(1, 9);
    std::size_t m = uniform(0, static_cast<int>(n));
    if (i % 3 == 0) {
      n = 8;
      m = 3;
    }
    std::vector<std::vector<F3>> constraints(m, std::vector<F3>(n));
    for (auto& a : constraints)
      for (auto& x : a) x = F3(uniform(0, 2));
    auto chi = character_selection(constraints, n);
    ASSERT_EQ(chi.size(), n);
    ASSERT_TRUE(annihilates(constraints, chi.components));
    ASSERT_GE(chi.nonzero_count() + m, n);
    if (n <= 7) {
      // Exhaustive confirmation that the promised support is attainable.
      std::size_t best = 0;
      for (const auto& v : all_vectors(n))
        if (annihilates(constraints, v)) best = std::max(best, support(v));
      ASSERT_GE(best + m, n);
      ASSERT_LE(chi.nonzero_count(), best);
    }
  }
}

TEST(Metabelian, SatelliteLowerBound) {
  for (std::size_t g = 1; g <= 3; ++g) {
    auto b = theorem_c_lower_bound(thm_c(4 * g));
    EXPECT_EQ(b.lower, g);
    EXPECT_EQ(b.characters, 4 * g);
    ASSERT_EQ(b.witnesses.size(), g);
    for (const auto& w : b.witnesses) {
      EXPECT_GE(w.quotient_rank, w.guaranteed);
      EXPECT_GT(w.quotient_rank, 2 * w.handles);
      EXPECT_EQ(w.character.nonzero_count(), w.quotient_rank);
    }
  }
  EXPECT_EQ(theorem_c_lower_bound(thm_c(0)).lower, 0u);
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(theorem_c_lower_bound(thm_c(n)).lower, (n + 3) / 4);
}

TEST(Metabelian, SatelliteHypotheses) {
  auto s = make_satellite_scenario(disc61(), {Integer(1), Integer(0)}, true, unknot_disc(), 4);
  try {
    theorem_c_lower_bound(s);
    FAIL() << "expected a hypothesis failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Hypothesis);
    EXPECT_NE(std::string(e.what()).find("obstruction vanishes"), std::string::npos);
  }
  SurgeryDisc left("left", k946(), Matrix<Integer>{{1}, {0}});
  auto two_dim = make_satellite_scenario(left, {Integer(1), Integer(1)}, true, disc61(), 4);
  EXPECT_THROW(theorem_c_lower_bound(two_dim), Error);
}

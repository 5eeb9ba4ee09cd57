#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stabkit/module.hpp"
#include "stabkit/specialize.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace testing_support;

namespace {

using QModule = PresentedModule<LaurentPolyQ>;
using QSub = Submodule<LaurentPolyQ>;
using ZModule = PresentedModule<Integer>;
using ZSub = Submodule<Integer>;

LaurentPolyQ q(const char* s) { return parse_laurent_q(s); }

QModule a_6_1() {
  return QModule(Matrix<LaurentPolyQ>{{q("-1 + t"), q("t")}, {q("-1"), q("2 - 2*t")}});
}

QModule a_9_46() {
  return QModule(Matrix<LaurentPolyQ>{{LaurentPolyQ(), q("-1 + 2*t")}, {q("-2 + t"), LaurentPolyQ()}});
}

/// Random Z-presentation with n generators and nonzero determinant of size at most `max_order`.
Matrix<Integer> random_finite_relations(std::size_t n, long max_order) {
  while (true) {
    auto m = random_matrix<Integer>(n, n, [] { return random_integer(4); });
    auto d = oracle::cofactor_det(to_rows(m), Integer(0), Integer(1));
    if (d != 0 && abs(d) <= max_order) return m;
  }
}

std::vector<std::size_t> table_span(const oracle::FiniteModuleTable& t, const Matrix<Integer>& gens) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    oracle::IntVector v;
    for (const auto& x : gens.column(j)) v.push_back(x.get_si());
    idx.push_back(t.index_of(v));
  }
  return oracle::closure(t, idx);
}

std::size_t brute_gr(const Matrix<Integer>& relations) {
  return oracle::brute_generating_rank(oracle::finite_module(to_oracle(relations), relations.rows()));
}

}  // namespace

TEST(Modules, GeneratingRankExamples) {
  for (std::size_t m = 0; m <= 5; ++m)
    EXPECT_EQ(generating_rank(direct_sum(std::vector<QModule>(m, QModule::cyclic(q("-2 + t"))))), m);
  EXPECT_EQ(generating_rank(direct_sum(QModule::cyclic(q("-2 + t")), QModule::cyclic(q("-1 + 2*t")))), 1u);
  EXPECT_EQ(generating_rank(QModule::free(0)), 0u);
  EXPECT_EQ(generating_rank(QModule::free(2)), 2u);
  EXPECT_EQ(free_rank(QModule::free(2)), 2u);
}

TEST(Modules, CoprimeSummandsAfterIntegerSpecialization) {
  // t -> 3 sends Q[t]/(t-2) + Q[t]/(2t-1) to Z/1 + Z/5.
  Matrix<Integer> rel{{1, 0}, {0, 5}};
  EXPECT_EQ(brute_gr(rel), 1u);
  EXPECT_EQ(generating_rank(ZModule(rel)), 1u);
}

TEST(Modules, Orders) {
  EXPECT_EQ(order(a_9_46()), canonical(q("-1 + 2*t") * q("-2 + t")));
  EXPECT_EQ(order(QModule::free(1)), LaurentPolyQ());
  EXPECT_EQ(order(QModule::free(0)), q("1"));
  EXPECT_EQ(order(ZModule(Matrix<Integer>{{2, 1}, {1, -4}})), 9);
}

TEST(Modules, SubmodulePresentation) {
  auto a = a_6_1();
  QSub s(a, Matrix<LaurentPolyQ>{{q("1")}, {q("-1")}});
  auto p = submodule_presentation(s);
  EXPECT_EQ(generating_rank(p), 1u);
  EXPECT_EQ(order(p), canonical(q("-1 + 2*t")));
  EXPECT_EQ(invariant_factors(submodule_presentation(QSub::whole(a))), invariant_factors(a));
  EXPECT_TRUE(is_zero_module(submodule_presentation(QSub::zero(a))));
}

TEST(Modules, NineFortySixKernels) {
  auto a = a_9_46();
  QSub p1(a, Matrix<LaurentPolyQ>{{q("0")}, {q("2")}});
  QSub p2(a, Matrix<LaurentPolyQ>{{q("1")}, {q("0")}});
  EXPECT_TRUE(is_zero_module(submodule_presentation(submodule_intersection(p1, p2))));
  auto quot = quotient_of_submodules(p2, p1);
  EXPECT_EQ(order(quot), canonical(q("-1 + 2*t")));
  EXPECT_TRUE(span_equal(submodule_intersection(p1, p1), p1));
  EXPECT_TRUE(is_zero_module(quotient_of_submodules(p1, submodule_sum(p1, p2))));
  EXPECT_EQ(invariant_factors(quotient_of_submodules(p2, QSub::zero(a))),
            invariant_factors(submodule_presentation(p2)));
  EXPECT_TRUE(span_equal(submodule_sum(p1, p2), QSub::whole(a)));
}

TEST(Modules, AmbientMismatch) {
  QSub s1 = QSub::whole(a_9_46()), s2 = QSub::whole(a_6_1());
  try {
    submodule_intersection(s1, s2);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
  EXPECT_THROW(quotient_of_submodules(s1, s2), Error);
}

TEST(Modules, Maps) {
  auto a = a_9_46();
  auto id = ModuleMap<LaurentPolyQ>::identity(a);
  EXPECT_TRUE(is_zero_module(submodule_presentation(map_kernel(id))));
  EXPECT_TRUE(is_zero_module(map_cokernel(id)));
  auto target = QModule::cyclic(q("-2 + t"));
  auto zero = ModuleMap<LaurentPolyQ>::zero(a, target);
  EXPECT_TRUE(span_equal(map_kernel(zero), QSub::whole(a)));
  EXPECT_EQ(invariant_factors(map_cokernel(zero)), invariant_factors(target));
  // Projection onto the (t-2) summand is well defined; onto (2t-1) from the wrong coordinate is not.
  ModuleMap<LaurentPolyQ> proj(a, target, Matrix<LaurentPolyQ>{{q("0"), q("1")}});
  EXPECT_EQ(order(submodule_presentation(map_kernel(proj))), canonical(q("-1 + 2*t")));
  try {
    ModuleMap<LaurentPolyQ>(a, target, Matrix<LaurentPolyQ>{{q("1"), q("0")}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvariantViolation);
  }
}

TEST(Modules, SpecializedPresentations) {
  Matrix<IntLaurentPoly> p{{parse_laurent_int("-1 + t"), parse_laurent_int("t")},
                           {parse_laurent_int("-1"), parse_laurent_int("2 - 2*t")}};
  auto z = specialize_module_minus_one(p);
  EXPECT_EQ(z.relations(), (Matrix<Integer>{{-2, -1}, {-1, 4}}));
  EXPECT_EQ(invariant_factors(z), std::vector<Integer>{9});
  auto e = specialize_module_xi3(p);
  EXPECT_EQ(order(e).norm(), 49);
  EXPECT_EQ(generating_rank(specialize_module_xi3(Matrix<IntLaurentPoly>(2, 0))), 2u);
}

TEST(ModulesOracle, FiniteTables) {
  auto t = oracle::finite_module({{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(oracle::brute_generating_rank(t), 1u);
  auto t33 = oracle::finite_module({{3, 0}, {0, 3}}, 2);
  EXPECT_EQ(oracle::brute_generating_rank(t33), 2u);
  auto t0 = oracle::finite_module({{1}}, 1);
  EXPECT_EQ(t0.size(), 1u);
  EXPECT_EQ(oracle::brute_generating_rank(t0), 0u);
  EXPECT_THROW(oracle::finite_module({{500, 0}, {0, 500}}, 2, {}, 200), oracle::CapExceeded);
  auto s = oracle::closure(t33, {t33.basis[0]});
  auto ops = oracle::brute_submodule_ops(t33, s, s);
  EXPECT_EQ(ops.intersection, s);
  EXPECT_EQ(ops.sum, s);
}

TEST(ModulesProperty, SubmoduleOpsAgainstBruteForce) {
  for (int i = 0; i < 220; ++i) {
    std::size_t n = uniform(1, 2);
    auto rel = random_finite_relations(n, 60);
    if (i % 5 == 0) {
      n = 1;
      rel = Matrix<Integer>{{9}};
    }
    ZModule m(rel);
    auto t = oracle::finite_module(to_oracle(rel), n);
    auto g1 = random_matrix<Integer>(n, uniform(0, 2), [] { return random_integer(5); });
    auto g2 = random_matrix<Integer>(n, uniform(0, 2), [] { return random_integer(5); });
    ZSub s1(m, g1), s2(m, g2);
    auto b1 = table_span(t, g1), b2 = table_span(t, g2);
    auto ops = oracle::brute_submodule_ops(t, b1, b2);
    auto inter = submodule_intersection(s1, s2);
    auto sum = submodule_sum(s1, s2);
    ASSERT_EQ(table_span(t, inter.generators()), ops.intersection) << to_string(rel);
    ASSERT_EQ(table_span(t, sum.generators()), ops.sum) << to_string(rel);
    ASSERT_EQ(order(submodule_presentation(inter)), Integer(ops.intersection.size()));
    ASSERT_EQ(generating_rank(submodule_presentation(inter)),
              oracle::brute_generating_rank(t, ops.intersection));
    // |S2 / (S1 ∩ S2)| = |S2| / |S1 ∩ S2|
    ASSERT_EQ(order(quotient_of_submodules(s2, s1)) * Integer(ops.intersection.size()), Integer(b2.size()));
    ASSERT_EQ(span_contains(s1, s2), std::includes(b1.begin(), b1.end(), b2.begin(), b2.end()));
  }
}

TEST(ModulesProperty, GeneratingRankLemmaOverZ) {
  for (int i = 0; i < 220; ++i) {
    std::size_t n = uniform(1, 3);
    auto rel = random_finite_relations(n, n == 3 ? 32 : 80);
    ZModule m(rel);
    auto gens = random_matrix<Integer>(n, uniform(1, 2), [] { return random_integer(4); });
    ZSub s(m, gens);
    auto t = oracle::finite_module(to_oracle(rel), n);
    std::size_t gr_m = oracle::brute_generating_rank(t);
    std::size_t gr_s = oracle::brute_generating_rank(t, table_span(t, gens));
    std::size_t gr_q = brute_gr(hstack(rel, gens));
    ASSERT_EQ(generating_rank(m), gr_m) << to_string(rel);
    ASSERT_EQ(generating_rank(submodule_presentation(s)), gr_s) << to_string(rel) << to_string(gens);
    ASSERT_EQ(generating_rank(quotient_module(s)), gr_q);
    ASSERT_LE(gr_q, gr_m);         // surjection
    ASSERT_LE(gr_s, gr_m);         // submodule
    ASSERT_GE(gr_q + gr_s, gr_m);  // short exact sequence
  }
}

TEST(ModulesProperty, GeneratingRankOverEisensteinAgainstBruteForce) {
  std::size_t checked = 0;
  while (checked < 200) {
    std::size_t n = uniform(1, 2);
    auto rel = random_matrix<EisensteinInt>(n, n, [] { return random_eisenstein(3); });
    auto d = oracle::cofactor_det(to_rows(rel), EisensteinInt(), EisensteinInt(1));
    if (d.is_zero() || d.norm() > 64) continue;
    auto z = eisenstein_to_z(rel);
    oracle::FiniteModuleTable t;
    try {
      t = oracle::finite_module(z.relations, 2 * n, {z.w_action});
    } catch (const oracle::CapExceeded&) {
      continue;
    }
    ASSERT_EQ(t.size(), d.norm().get_ui());
    ASSERT_EQ(generating_rank(PresentedModule<EisensteinInt>(rel)), oracle::brute_generating_rank(t))
        << to_string(rel);
    ++checked;
  }
}

TEST(ModulesProperty, LaurentSpecializedAtMinusOne) {
  std::size_t checked = 0;
  while (checked < 200) {
    std::size_t n = uniform(1, 2);
    auto p = random_matrix<IntLaurentPoly>(n, n, [] { return random_int_laurent(uniform(0, 2), 2); });
    auto z = specialize_module_minus_one(p);
    auto d = oracle::cofactor_det(to_rows(z.relations()), Integer(0), Integer(1));
    if (d == 0 || abs(d) > 100) continue;
    ASSERT_EQ(generating_rank(z), brute_gr(z.relations()));
    ASSERT_EQ(order(z), abs(d));
    ASSERT_LE(generating_rank(z), n);
    ++checked;
  }
}

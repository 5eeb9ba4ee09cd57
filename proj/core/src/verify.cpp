#include "stabkit/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "stabkit/bounds.hpp"
#include "stabkit/error.hpp"
#include "stabkit/metabelian.hpp"
#include "stabkit/scenario.hpp"
#include "stabkit/specialize.hpp"

namespace stabkit {

namespace {

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

LaurentPolyQ q(const std::string& s) { return parse_laurent_q(s); }

template <EuclideanRing R>
std::string show(const R& x) {
  return RingTraits<R>::format(canonical(x));
}

template <EuclideanRing R>
void expect_order(const PresentedModule<R>& m, const R& want, const std::string& what) {
  R got = order(m);
  expect(associates(got, want), what + ": order " + show(got) + ", expected " + show(want));
}

template <EuclideanRing R>
void expect_gr(const PresentedModule<R>& m, std::size_t want, const std::string& what) {
  std::size_t got = generating_rank(m);
  expect(got == want, what + ": gr " + std::to_string(got) + ", expected " + std::to_string(want));
}

LaurentPolyQ power(const LaurentPolyQ& p, std::size_t n) {
  LaurentPolyQ out = RingTraits<LaurentPolyQ>::one();
  for (std::size_t i = 0; i < n; ++i) out = out * p;
  return out;
}

class Runner {
 public:
  void run(const std::string& group, const std::string& anchor,
           const std::function<std::string()>& body) {
    CheckResult r{group, anchor, false, {}, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

void example_9_46(Runner& run, const Catalog& cat) {
  const auto& e = cat.at("9_46");
  const SeifertKnot& k = e.knot;
  const LaurentPolyQ a = q("-2 + t"), b = q("-1 + 2*t");

  run.run("C1", "9_46 presentation tV - V^T", [&] {
    Matrix<IntLaurentPoly> want{{IntLaurentPoly(), parse_laurent_int("-1 + 2*t")},
                                {parse_laurent_int("-2 + t"), IntLaurentPoly()}};
    auto got = alexander_presentation(k);
    expect(got == want, "presentation " + to_string(got));
    return to_string(got);
  });
  run.run("C1", "A(9_46) order (2t-1)(t-2), gr 1", [&] {
    auto m = alexander_module_q(k);
    expect_order(m, a * b, "A(9_46)");
    expect_gr(m, 1, "A(9_46)");
    return "order " + show(order(m)) + ", gr 1";
  });
  run.run("C1", "9_46 alpha_1 class generates the (t-2) summand", [&] {
    auto c = curve_class(k, {Integer(1), Integer(0)});
    expect(c == std::vector<Integer>{Integer(0), Integer(2)}, "class of alpha_1 is not (0,2)");
    auto s = Submodule<LaurentPolyQ>(
        alexander_module_q(k),
        Matrix<LaurentPolyQ>::column_vector({LaurentPolyQ(Rational(c[0])), LaurentPolyQ(Rational(c[1]))}));
    expect_order(submodule_presentation(s), a, "span of alpha_1");
    return std::string("V^T (1,0) = (0,2), span order t - 2");
  });
  run.run("C1", "9_46 left disc kernel order t-2, quotient 2t-1", [&] {
    const auto& d = e.disc("left");
    expect_order(submodule_presentation(disc_kernel_q(d)), a, "left kernel");
    expect_order(disc_module_q(d), b, "A(left disc)");
    return std::string("kernel -2 + t, quotient ") + show(b);
  });
  run.run("C1", "9_46 right disc kernel order 2t-1", [&] {
    expect_order(submodule_presentation(disc_kernel_q(e.disc("right"))), b, "right kernel");
    return "kernel " + show(b);
  });
  run.run("C1", "ker(i_1) ∩ ker(i_2) = 0 for 9_46", [&] {
    auto i = submodule_intersection(disc_kernel_q(e.disc("left")), disc_kernel_q(e.disc("right")));
    expect(is_zero_module(submodule_presentation(i)), "intersection is nonzero");
    return std::string("intersection 0");
  });
  run.run("ex", "kernels 9_46 left,right: P2/(P1 ∩ P2) = P2", [&] {
    auto knot = resolve_knot(cat, "9_46");
    auto p1 = disc_kernel_q(resolve_disc(cat, knot, "left"));
    auto p2 = disc_kernel_q(resolve_disc(cat, knot, "right"));
    auto quot = quotient_of_submodules(p2, p1);
    expect_order(quot, b, "P2/(P1 ∩ P2)");
    expect_gr(quot, 1, "P2/(P1 ∩ P2)");
    return "order " + show(b);
  });
}

void example_disc_sums(Runner& run, const Catalog& cat) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::string ns = std::to_string(n);
    run.run("C2", "d2(#^" + ns + " 9_46 left, right) = " + ns, [&, n, ns] {
      auto knot = resolve_knot(cat, "sum^" + ns + "(9_46)");
      auto left = resolve_disc(cat, knot, "left^" + ns);
      auto right = resolve_disc(cat, knot, "right^" + ns);
      auto p1 = submodule_presentation(disc_kernel_q(left));
      expect_gr(p1, n, "P1");
      expect_order(p1, power(q("-2 + t"), n), "P1");
      auto r = full_report(DiscPair{left, right});
      expect(r.lower == n, "lower bound " + std::to_string(r.lower));
      expect(r.upper && *r.upper == n, "upper bound is not " + ns);
      return "lower " + ns + ", upper " + ns;
    });
  }
}

void example_doubles(Runner& run, const Catalog& cat) {
  const auto& e = cat.at("9_46");
  run.run("C3", "double of 9_46 right disc = Q[t^±1]/(t-2)", [&] {
    const auto& d = e.disc("right");
    auto a = alexander_module_q(e.knot);
    auto dm = disc_module_q(d);
    const std::size_t n = a.ngens();
    Matrix<LaurentPolyQ> f(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      f(i, i) = RingTraits<LaurentPolyQ>::one();
      f(n + i, i) = -RingTraits<LaurentPolyQ>::one();
    }
    auto coker = map_cokernel(ModuleMap<LaurentPolyQ>(a, direct_sum(dm, dm), f));
    expect_order(coker, q("-2 + t"), "cokernel");
    expect_gr(coker, 1, "cokernel");
    auto model = double_of_disc(d);
    expect_order(model.module, q("-2 + t"), "double_of_disc");
    return std::string("order -2 + t, gr 1");
  });
  for (std::size_t m = 1; m <= 4; ++m) {
    std::string ms = std::to_string(m);
    run.run("C3", "d1(#^" + ms + " double(9_46.right), unknot) >= " + ms, [&, m, ms] {
      auto k = resolve_two_knot(cat, "double(9_46.right)^" + ms);
      auto u = resolve_two_knot(cat, "unknot");
      expect_gr(k.module, m, "#^" + ms + " double");
      auto r = full_report(TwoKnotPair{k, u});
      expect(r.lower == m, "d1 lower bound " + std::to_string(r.lower));
      return "gr " + ms + ", d1 >= " + ms;
    });
  }
  run.run("ex", "gr(⊕^m Q[t^±1]/(t-2)) = m", [&] {
    for (std::size_t m = 0; m <= 6; ++m)
      expect_gr(direct_sum(std::vector<PresentedModule<LaurentPolyQ>>(
                    m, PresentedModule<LaurentPolyQ>::cyclic(q("-2 + t")))),
                m, "m = " + std::to_string(m));
    return std::string("m = 0..6");
  });
}

void example_6_1(Runner& run, const Catalog& cat) {
  const auto& e = cat.at("6_1");
  const SeifertKnot& k = e.knot;
  const auto& d = e.disc("std");
  const LaurentPolyQ a = q("-2 + t"), b = q("-1 + 2*t");

  run.run("C4", "A(6_1) cyclic of order (2t-1)(t-2)", [&] {
    auto m = alexander_module_q(k);
    expect_gr(m, 1, "A(6_1)");
    expect_order(m, a * b, "A(6_1)");
    return "order " + show(order(m));
  });
  run.run("C4", "6_1 curve (1,1) has class (1,-1)", [&] {
    auto c = curve_class(k, {Integer(1), Integer(1)});
    expect(c == std::vector<Integer>{Integer(1), Integer(-1)}, "class is not (1,-1)");
    return std::string("(1,-1)");
  });
  run.run("C4", "6_1 disc kernel = (t-2)A(R)", [&] {
    auto kernel = disc_kernel_q(d);
    auto m = kernel.ambient();
    Matrix<LaurentPolyQ> scaled = Matrix<LaurentPolyQ>::identity(m.ngens()).map(
        [&](const LaurentPolyQ& x) { return x * a; });
    expect(span_equal(kernel, Submodule<LaurentPolyQ>(m, scaled)), "kernel differs from (t-2)A(R)");
    expect_order(submodule_presentation(kernel), b, "kernel");
    expect_order(disc_module_q(d), a, "A(R)/kernel");
    return "kernel order " + show(b) + ", quotient order " + show(a);
  });
  run.run("C4", "H_1(Σ_2(6_1)) = Z_9", [&] {
    auto h1 = branched_double_cover(k);
    expect(h1.relations() == Matrix<Integer>{{-2, -1}, {-1, 4}},
           "presentation at t = -1 is " + to_string(h1.relations()));
    auto f = invariant_factors(h1);
    expect(f.size() == 1 && f[0] == 9, "invariant factors differ from (9)");
    return std::string("coker [[-2,-1],[-1,4]] = Z_9");
  });
  run.run("C4", "6_1 branched disc kernel = 3Z_9", [&] {
    auto bk = disc_branched_kernel(d);
    auto h1 = bk.ambient();
    Submodule<Integer> three(h1, Matrix<Integer>::identity(h1.ngens()).map(
                                     [](const Integer& x) { return Integer(3 * x); }));
    expect(span_equal(bk, three), "kernel differs from 3*H_1");
    expect(order(quotient_module(bk)) == 3, "kernel index is not 3");
    return std::string("index 3");
  });
  run.run("C4", "6_1 Eisenstein obstruction = Z_7", [&] {
    auto ob = metabelian_obstruction(k, d);
    expect(ob.nonzero, "obstruction vanishes");
    auto f = invariant_factors(ob.module);
    expect(f.size() == 1 && f[0].norm() == 7, "obstruction is not Z[w]/(prime of norm 7)");
    EisensteinInt x = EisensteinInt::w() - EisensteinInt(2);
    expect(x * x.conjugate() == EisensteinInt(7), "(w-2)(w^2-2) != 7");
    return "Z[w]/(" + to_string(canonical_associate(f[0])) + "), norm 7";
  });
  run.run("ex", "kernels unchanged by local 2-knots", [&] {
    for (const auto* disc : {&d, &cat.at("9_46").disc("left"), &cat.at("9_46").disc("right")}) {
      auto dec = add_local_2knot(*disc);
      expect(dec.local_2knots() == disc->local_2knots() + 1, "decoration count");
      expect(span_equal(disc_kernel_q(dec), disc_kernel_q(*disc)), disc->name() + ": kernel changed");
      expect(span_equal(disc_branched_kernel(dec), disc_branched_kernel(*disc)),
             disc->name() + ": branched kernel changed");
      expect(span_equal(disc_kernel_xi(dec), disc_kernel_xi(*disc)),
             disc->name() + ": Eisenstein kernel changed");
    }
    return std::string("6_1.std, 9_46.left, 9_46.right");
  });
}

void example_satellites(Runner& run, const Catalog& cat) {
  run.run("ex", "character space of #^4 6_1 has dimension 4", [&] {
    auto s = resolve_satellite(cat, "thmC(N=4)");
    std::size_t dim = character_space_dimension(s);
    expect(dim == 4, "dimension " + std::to_string(dim));
    return std::string("Z_9 per summand");
  });
  run.run("ex", "zero character: twisted kernels coincide", [&] {
    auto s = resolve_satellite(cat, "thmC(g=1)");
    auto pair = satellite_twisted_kernels(s, Character{std::vector<F3>(s.copies)});
    expect(span_equal(pair.p1, pair.p2), "kernels differ");
    expect(invariant_factors(submodule_presentation(pair.p1)) ==
               invariant_factors(submodule_presentation(pair.p2)),
           "presentations differ");
    return std::string("P1 = P2");
  });
  for (std::size_t g = 1; g <= 3; ++g) {
    std::string gs = std::to_string(g);
    run.run("C5", "thmC(g=" + gs + "): abelian 0, metabelian " + gs + ", upper " +
                      std::to_string(4 * g),
            [&, g] {
              auto s = resolve_satellite(cat, "thmC(g=" + std::to_string(g) + ")");
              auto rational = satellite_rational_kernels(s);
              expect(span_equal(rational.product_kernel, rational.antidiagonal),
                     "Q[t^±1] kernels differ");
              auto r = full_report(s);
              expect(r.components.at("abelian") == 0, "abelian bound " +
                                                          std::to_string(r.components.at("abelian")));
              expect(r.components.at("metabelian") == g,
                     "metabelian bound " + std::to_string(r.components.at("metabelian")));
              expect(r.lower == g, "lower bound " + std::to_string(r.lower));
              expect(r.upper && *r.upper == 4 * g, "upper bound is not 4g");
              return "lower " + std::to_string(r.lower) + ", upper " + std::to_string(*r.upper);
            });
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const Catalog& catalog) {
  Runner run;
  example_9_46(run, catalog);
  example_disc_sums(run, catalog);
  example_doubles(run, catalog);
  example_6_1(run, catalog);
  example_satellites(run, catalog);
  return std::move(run.results);
}

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace

std::string format_verification(const std::vector<CheckResult>& results, bool timing) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, display_width(r.anchor));
  std::ostringstream out;
  std::size_t failed = 0;
  double total = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    total += r.seconds;
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(4) << r.group << r.anchor
        << std::string(width + 2 - display_width(r.anchor), ' ') << r.detail;
    if (timing) out << "  (" << std::fixed << std::setprecision(3) << r.seconds << "s)";
    out << '\n';
  }
  out << results.size() - failed << "/" << results.size() << " checks passed";
  if (timing) out << " in " << std::fixed << std::setprecision(2) << total << "s";
  out << '\n';
  return out.str();
}

}  // namespace stabkit

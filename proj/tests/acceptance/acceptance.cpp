#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "stabkit/bounds.hpp"
#include "stabkit/catalog.hpp"
#include "stabkit/laurent.hpp"
#include "stabkit/metabelian.hpp"
#include "stabkit/scenario.hpp"

using namespace stabkit;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

LaurentPolyQ q(const std::string& s) { return parse_laurent_q(s); }

std::string repeat(const std::string& term, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? "+" : "") + term;
  return out;
}

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

int failures = 0;

void criterion(const std::string& id, double budget, const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= budget) {
    ok = false;
    detail += " (over budget)";
  }
  failures += !ok;
  std::printf("%s %s  %.3fs < %.0fs  %s\n", ok ? "PASS" : "FAIL", id.c_str(), secs, budget, detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const Catalog cat = Catalog::builtin();

  criterion("AC1", 1, [&] {
    auto k = resolve_knot(cat, "9_46");
    auto a = alexander_module_q(k.knot);
    require(associates(order(a), q("2*t - 1") * q("t - 2")), "order of A(9_46)");
    require(generating_rank(a) == 1, "gr of A(9_46)");
    auto left = disc_kernel_q(resolve_disc(cat, k, "left"));
    auto right = disc_kernel_q(resolve_disc(cat, k, "right"));
    require(associates(order(submodule_presentation(left)), q("t - 2")), "left kernel order");
    require(associates(order(submodule_presentation(right)), q("2*t - 1")), "right kernel order");
    require(is_zero_module(submodule_presentation(submodule_intersection(left, right))), "intersection");
    return std::string("order (2t-1)(t-2), gr 1, kernels t-2 / 2t-1, intersection 0");
  });

  criterion("AC2", 5, [&] {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto k = resolve_knot(cat, "sum^" + std::to_string(n) + "(9_46)");
      DiscPair p{resolve_disc(cat, k, repeat("left", n)), resolve_disc(cat, k, repeat("right", n))};
      auto r = full_report(p);
      require(r.lower == n && r.upper == n, "n = " + std::to_string(n) + ": bounds " +
                                                std::to_string(r.lower) + ".." +
                                                (r.upper ? std::to_string(*r.upper) : "inf"));
    }
    return std::string("d2 lower = upper = n for n = 1..4");
  });

  criterion("AC3", 5, [&] {
    auto d = resolve_two_knot(cat, "double(9_46.right)");
    auto f = invariant_factors(d.module);
    require(f.size() == 1 && associates(f[0], q("t - 2")), "double of the right disc");
    for (std::size_t m = 1; m <= 4; ++m) {
      auto k = resolve_two_knot(cat, "double(9_46.right)^" + std::to_string(m));
      require(generating_rank(k.module) == m, "gr at m = " + std::to_string(m));
      require(d1_lower_bound(k, unknotted_sphere()) == m, "d1 at m = " + std::to_string(m));
    }
    return std::string("Q[t±1]/(t-2); gr = d1 = m for m = 1..4");
  });

  criterion("AC4", 1, [&] {
    auto k = resolve_knot(cat, "6_1");
    auto a = alexander_module_q(k.knot);
    require(generating_rank(a) == 1, "A(6_1) cyclic");
    require(associates(order(a), q("2*t - 1") * q("t - 2")), "order of A(6_1)");
    auto disc = resolve_disc(cat, k, "std");
    auto ker = disc_kernel_q(disc);
    Submodule<LaurentPolyQ> scaled(
        a, Matrix<LaurentPolyQ>::identity(a.ngens()).map([](const LaurentPolyQ& x) { return x * q("t - 2"); }));
    require(span_equal(ker, scaled), "kernel = (t-2)A(R)");
    auto h1 = branched_double_cover(k.knot);
    auto h = invariant_factors(h1);
    require(h.size() == 1 && h[0] == 9, "H_1 = Z_9");
    auto bk = disc_branched_kernel(disc);
    auto quotient = invariant_factors(quotient_module(bk));
    require(quotient.size() == 1 && quotient[0] == 3, "branched kernel has index 3");
    auto ob = metabelian_obstruction(k.knot, disc);
    auto of = invariant_factors(ob.module);
    require(ob.nonzero && of.size() == 1 && of[0].norm() == 7, "obstruction order has norm 7");
    return std::string("cyclic, kernel (t-2)A, Z_9 with index-3 kernel, obstruction norm 7");
  });

  criterion("AC5", 30, [&] {
    for (std::size_t g = 1; g <= 3; ++g) {
      auto s = resolve_satellite(cat, "thmC(g=" + std::to_string(g) + ")");
      auto qk = satellite_rational_kernels(s);
      require(span_equal(qk.product_kernel, qk.antidiagonal), "rational kernels coincide");
      auto r = full_report(s);
      require(r.components.at("abelian") == 0, "abelian bound 0");
      require(r.components.at("metabelian") == g && r.lower == g, "metabelian bound at g = " + std::to_string(g));
      require(r.upper == 4 * g, "upper 4g");
    }
    return std::string("abelian 0, metabelian g, upper 4g for g = 1..3");
  });

  criterion("AC6", 60, [&] {
    const std::string filter = "*Property*";
    int rc = run_command(std::string("\"") + STABKIT_UNIT_TESTS + "\" --gtest_brief=1 --gtest_filter='" + filter +
                         "' > /dev/null");
    require(rc == 0, "property suites failed (exit " + std::to_string(rc) + ")");
    return std::string("SNF Z/Q[t]/Z[w], Eisenstein remainder, gr lemma, gr drop, character selection");
  });

  criterion("AC7", 120, [&] {
    int rc = run_command(std::string("\"") + STABKIT_CLI + "\" verify > /dev/null");
    require(rc == 0, "verify exit " + std::to_string(rc));
    return std::string("verify exit 0");
  });

  return failures == 0 ? 0 : 1;
}

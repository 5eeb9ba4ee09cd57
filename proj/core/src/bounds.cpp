#include "stabkit/bounds.hpp"

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

std::string upper_text(const std::optional<std::size_t>& u) {
  return u ? std::to_string(*u) : std::string("inf");
}

bool same_curve_span(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  auto free = PresentedModule<Integer>::free(a.rows());
  return span_equal(Submodule<Integer>(free, a), Submodule<Integer>(free, b));
}

Matrix<Integer> block(const Matrix<Integer>& curves, std::size_t offset, std::size_t genus) {
  Matrix<Integer> out(2 * genus, genus);
  for (std::size_t i = 0; i < 2 * genus; ++i)
    for (std::size_t j = 0; j < genus; ++j) out(i, j) = curves(2 * offset + i, offset + j);
  return out;
}

BoundReport report_two_knots(const TwoKnotPair& p) {
  BoundReport r;
  r.quantity = Quantity::D1;
  std::size_t a = generating_rank(p.first.module);
  std::size_t b = generating_rank(p.second.module);
  r.lower = d1_lower_bound(p.first, p.second);
  r.components["abelian"] = r.lower;
  r.provenance.push_back("gr(A(K1)) = " + std::to_string(a) + ", gr(A(K2)) = " + std::to_string(b));
  r.provenance.push_back(
      "stabilization exact sequence: a 1-handle quotients by a cyclic module, so gr drops by at "
      "most 1; d1 >= |" +
      std::to_string(a) + " - " + std::to_string(b) + "| = " + std::to_string(r.lower));
  r.provenance.push_back("upper bound: no construction recorded, inf");
  return r;
}

BoundReport report_discs(const DiscPair& p) {
  BoundReport r;
  r.quantity = Quantity::D2;
  auto k1 = disc_kernel_q(p.first);
  auto k2 = disc_kernel_q(p.second);
  detail::require_same_ambient(k1, k2);
  std::size_t q21 = generating_rank(quotient_of_submodules(k2, k1));
  std::size_t q12 = generating_rank(quotient_of_submodules(k1, k2));
  r.lower = std::max(q21, q12);
  r.upper = d2_upper_bound(p.first, p.second);
  r.components["abelian"] = r.lower;
  r.provenance.push_back("kernels P1 = ker(A(K) -> A(" + p.first.name() + ")), P2 = ker(A(K) -> A(" +
                         p.second.name() + ")) over Q[t^±1]");
  r.provenance.push_back("quotient form: gr(P2/(P1 ∩ P2)) = " + std::to_string(q21) +
                         ", gr(P1/(P1 ∩ P2)) = " + std::to_string(q12) +
                         "; h handles add h generators to each kernel, so d2 >= " +
                         std::to_string(r.lower));
  if (r.upper)
    r.provenance.push_back("surgery on a common Seifert surface: " + upper_text(r.upper) +
                           " handles connect the discs, d2 <= " + upper_text(r.upper));
  else
    r.provenance.push_back("discs not on a common Seifert surface: no upper bound, inf");
  return r;
}

BoundReport report_satellite(const SatelliteScenario& s) {
  BoundReport r;
  r.quantity = Quantity::D2Metabelian;
  auto rational = satellite_rational_kernels(s);
  std::size_t abelian = d2_lower_bound_abelian(rational.product_kernel, rational.antidiagonal);
  auto metabelian = theorem_c_lower_bound(s);
  r.components["abelian"] = abelian;
  r.components["metabelian"] = metabelian.lower;
  r.lower = std::max(abelian, metabelian.lower);
  r.upper = d2_upper_bound(s);
  r.provenance.push_back("satellite modules agree with A(R) summand-wise; Q[t^±1] kernels coincide, "
                         "abelian quotient-form bound " + std::to_string(abelian));
  for (const auto& line : metabelian.chain) r.provenance.push_back("metabelian: " + line);
  r.provenance.push_back("per-summand disc variants: one handle per summand, d2 <= " +
                         upper_text(r.upper));
  return r;
}

}  // namespace

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::D1: return "d1";
    case Quantity::D2: return "d2";
    case Quantity::D2Metabelian: return "d2_metabelian";
  }
  return "?";
}

std::size_t d1_lower_bound(const TwoKnotModel& k1, const TwoKnotModel& k2) {
  std::size_t a = generating_rank(k1.module);
  std::size_t b = generating_rank(k2.module);
  return a > b ? a - b : b - a;
}

std::optional<std::size_t> d2_upper_bound(const SurgeryDisc& d1, const SurgeryDisc& d2) {
  if (!(d1.knot() == d2.knot())) return std::nullopt;
  if (d1.block_genera() != d2.block_genera())
    return same_curve_span(d1.curves(), d2.curves()) ? 0 : d1.knot().genus();
  std::size_t total = 0, offset = 0;
  for (std::size_t g : d1.block_genera()) {
    if (!same_curve_span(block(d1.curves(), offset, g), block(d2.curves(), offset, g))) total += g;
    offset += g;
  }
  return total;
}

std::optional<std::size_t> d2_upper_bound(const SatelliteScenario& s) { return s.copies; }

BoundReport full_report(const Scenario& scenario) {
  BoundReport r = std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TwoKnotPair>)
          return report_two_knots(s);
        else if constexpr (std::is_same_v<T, DiscPair>)
          return report_discs(s);
        else
          return report_satellite(s);
      },
      scenario);
  if (r.upper && r.lower > *r.upper)
    throw Error(ErrorKind::InvariantViolation, "lower bound " + std::to_string(r.lower) +
                                                   " exceeds upper bound " + upper_text(r.upper));
  return r;
}

}  // namespace stabkit

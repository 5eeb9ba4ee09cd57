#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/knot.hpp"
#include "stabkit/metabelian.hpp"
#include "stabkit/module.hpp"

namespace stabkit {

enum class Quantity { D1, D2, D2Metabelian };

/// "d1", "d2", "d2_metabelian"
const char* to_string(Quantity q) noexcept;

/// Lower and upper bounds for a distance; `upper` empty means infinity.
struct BoundReport {
  Quantity quantity = Quantity::D2;
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  /// Individual lower bounds by method, e.g. "abelian", "metabelian".
  std::map<std::string, std::size_t> components;
  std::vector<std::string> provenance;
};

/// |gr(A(K1)) - gr(A(K2))|; a 1-handle changes gr by at most one.
std::size_t d1_lower_bound(const TwoKnotModel& k1, const TwoKnotModel& k2);

/// max(gr(P1 / (P1 ∩ P2)), gr(P2 / (P1 ∩ P2))), the quotient form of the
/// kernel bound.
template <EuclideanRing R>
std::size_t d2_lower_bound_abelian(const Submodule<R>& p1, const Submodule<R>& p2) {
  return std::max(generating_rank(quotient_of_submodules(p1, p2)),
                  generating_rank(quotient_of_submodules(p2, p1)));
}

/// Surgery discs on the same Seifert surface: the total genus of the
/// boundary-sum blocks whose surgery curves differ. Otherwise infinity.
std::optional<std::size_t> d2_upper_bound(const SurgeryDisc& d1, const SurgeryDisc& d2);

/// Per-summand satellite variants: one handle per summand.
std::optional<std::size_t> d2_upper_bound(const SatelliteScenario& s);

struct MonotonicityReport {
  std::size_t before = 0;  // gr(M)
  std::size_t after = 0;   // gr(M / c)
  bool holds = false;      // before - 1 <= after <= before
};

template <EuclideanRing R>
MonotonicityReport stabilization_monotonicity_check(const PresentedModule<R>& m,
                                                    const Submodule<R>& c) {
  if (!(c.ambient() == m))
    throw Error(ErrorKind::AmbientMismatch, "cyclic submodule does not live in the module");
  if (span_basis(c.generators()).cols() > 1)
    throw Error(ErrorKind::InvalidInput, "stabilization quotient must be by a cyclic submodule");
  MonotonicityReport r;
  r.before = generating_rank(m);
  r.after = generating_rank(quotient_module(c));
  r.holds = r.after <= r.before && r.after + 1 >= r.before;
  return r;
}

struct TwoKnotPair {
  TwoKnotModel first;
  TwoKnotModel second;
};

struct DiscPair {
  SurgeryDisc first;
  SurgeryDisc second;
};

using Scenario = std::variant<TwoKnotPair, DiscPair, SatelliteScenario>;

/// Runs every applicable bound; lower is the max, upper the min.
BoundReport full_report(const Scenario& scenario);

}  // namespace stabkit

#include "stabkit/metabelian.hpp"

#include <algorithm>
#include <sstream>

#include "stabkit/error.hpp"
#include "stabkit/specialize.hpp"

namespace stabkit {

namespace {

Matrix<EisensteinInt> to_eisenstein(const Matrix<Integer>& m) {
  return m.map([](const Integer& x) { return EisensteinInt(x); });
}

Matrix<EisensteinInt> conjugate_entries(const Matrix<EisensteinInt>& m) {
  return m.map([](const EisensteinInt& x) { return x.conjugate(); });
}

std::vector<F3> unit_vector(std::size_t n, std::size_t i) {
  std::vector<F3> v(n);
  v[i] = F3(1);
  return v;
}

std::size_t support(const std::vector<F3>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](F3 x) { return !x.is_zero(); }));
}

bool annihilates(const std::vector<std::vector<F3>>& constraints, const std::vector<F3>& x) {
  for (const auto& a : constraints) {
    F3 dot;
    for (std::size_t i = 0; i < x.size(); ++i) dot += a[i] * x[i];
    if (!dot.is_zero()) return false;
  }
  return true;
}

/// Basis of { x : a . x = 0 for all constraints a }, one vector per free column of the RREF.
std::vector<std::vector<F3>> nullspace_f3(std::vector<std::vector<F3>> rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                           [c](const auto& row) { return !row[c].is_zero(); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    F3 inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      F3 f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<F3>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<F3> v(n);
    v[f] = F3(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<F3> exhaustive_selection(const std::vector<std::vector<F3>>& basis, std::size_t n) {
  std::vector<F3> best(n);
  std::vector<int> coeff(basis.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == 2) coeff[k++] = 0;
    if (k == coeff.size()) break;
    ++coeff[k];
    std::vector<F3> x(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t i = 0; i < n; ++i) x[i] += F3(coeff[b]) * basis[b][i];
    if (support(x) > support(best)) best = x;
  }
  return best;
}

/// gr of ker(ι2) / (ker(ι1) ∩ ker(ι2)) for one summand.
std::size_t summand_quotient_rank(const SatelliteScenario& s, const Character& chi,
                                  std::size_t i) {
  Character single{{chi.components[i]}};
  SatelliteScenario one = s;
  one.copies = 1;
  auto pair = satellite_twisted_kernels(one, single);
  return generating_rank(quotient_of_submodules(pair.p2, pair.p1));
}

}  // namespace

EisensteinModule eisenstein_alexander(const SeifertKnot& knot) {
  return specialize_module_xi3(alexander_presentation(knot));
}

EisensteinSubmodule disc_kernel_xi(const SurgeryDisc& disc) {
  return EisensteinSubmodule(eisenstein_alexander(disc.knot()), to_eisenstein(curve_classes(disc)));
}

EisensteinModule conjugate(const EisensteinModule& m) {
  return EisensteinModule(conjugate_entries(m.relations()));
}

EisensteinSubmodule conjugate(const EisensteinSubmodule& s) {
  return EisensteinSubmodule(conjugate(s.ambient()), conjugate_entries(s.generators()));
}

EisensteinModule one_oplus_bar(const EisensteinModule& m) { return direct_sum(m, conjugate(m)); }

EisensteinSubmodule one_oplus_bar(const EisensteinSubmodule& s) {
  return direct_sum(std::vector<EisensteinSubmodule>{s, conjugate(s)});
}

EisensteinModule twisted_homology_abelian_rep(const SeifertKnot& knot) {
  return one_oplus_bar(eisenstein_alexander(knot));
}

MetabelianObstruction metabelian_obstruction(const SeifertKnot& j0, const SurgeryDisc& d0) {
  if (!(d0.knot() == j0))
    throw Error(ErrorKind::InvalidInput,
                "disc " + d0.name() + " does not bound knot " + j0.name());
  MetabelianObstruction out{quotient_module(disc_kernel_xi(d0)), false};
  out.nonzero = !is_zero_module(out.module);
  return out;
}

std::size_t Character::nonzero_count() const { return support(components); }

std::string Character::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out << ',';
    out << components[i].value();
  }
  out << ']';
  return out.str();
}

std::size_t character_space_dimension(const PresentedModule<Integer>& h1) {
  std::size_t dim = 0;
  for (const auto& f : invariant_factors(h1))
    if (mpz_divisible_ui_p(f.get_mpz_t(), 3)) ++dim;
  return dim;
}

std::size_t character_space_dimension(const SatelliteScenario& s) {
  return s.copies * character_space_dimension(branched_double_cover(s.base()));
}

SatelliteScenario make_satellite_scenario(SurgeryDisc base_disc, std::vector<Integer> eta,
                                          bool eta_winding_zero, SurgeryDisc companion_disc,
                                          std::size_t copies) {
  const SeifertKnot& r = base_disc.knot();
  auto a = alexander_module_q(r);
  if (generating_rank(a) > 1)
    throw Error(ErrorKind::Hypothesis,
                "A(R) cyclic: A(" + r.name() + ") needs " + std::to_string(generating_rank(a)) +
                    " generators");
  if (eta.size() != a.ngens())
    throw Error(ErrorKind::DimensionMismatch,
                "eta has " + std::to_string(eta.size()) + " coordinates, A(" + r.name() +
                    ") has " + std::to_string(a.ngens()) + " generators");
  std::vector<LaurentPolyQ> eta_q;
  for (const auto& x : eta) eta_q.push_back(LaurentPolyQ(Rational(x)));
  Submodule<LaurentPolyQ> span(a, Matrix<LaurentPolyQ>::column_vector(eta_q));
  if (!span_equal(span, Submodule<LaurentPolyQ>::whole(a)))
    throw Error(ErrorKind::Hypothesis, "eta generates A(R): the class of eta does not generate A(" +
                                           r.name() + ")");
  if (!eta_winding_zero)
    throw Error(ErrorKind::Hypothesis, "eta has winding number zero");
  auto h1 = branched_double_cover(r);
  if (order(h1) == 0)
    throw Error(ErrorKind::Hypothesis, "H_1(Σ_2(R)) finite: H_1 of the branched cover is infinite");
  if (character_space_dimension(h1) == 0)
    throw Error(ErrorKind::Hypothesis,
                "H_1(Σ_2(R)) has 3-torsion: no Z_3 characters on the branched cover of " + r.name());
  return SatelliteScenario{std::move(base_disc), std::move(eta), eta_winding_zero,
                           DiscPairModel(std::move(companion_disc)), copies};
}

EisensteinKernelPair satellite_twisted_kernels(const SatelliteScenario& s, const Character& chi) {
  if (chi.size() != s.copies)
    throw Error(ErrorKind::DimensionMismatch,
                "character has " + std::to_string(chi.size()) + " components, scenario has " +
                    std::to_string(s.copies) + " summands");
  EisensteinSubmodule r_kernel = one_oplus_bar(disc_kernel_xi(s.base_disc));
  EisensteinSubmodule j_kernel = disc_kernel_xi(s.companion.base_disc());
  auto pair = disc_pair_kernels(j_kernel.ambient(), j_kernel.generators());
  EisensteinSubmodule j_p1 = one_oplus_bar(pair.product_kernel);
  EisensteinSubmodule j_p2 = one_oplus_bar(pair.antidiagonal);

  std::vector<EisensteinSubmodule> p1, p2;
  for (const auto& c : chi.components) {
    if (c.is_zero()) {
      p1.push_back(r_kernel);
      p2.push_back(r_kernel);
    } else {
      p1.push_back(direct_sum(std::vector<EisensteinSubmodule>{r_kernel, j_p1}));
      p2.push_back(direct_sum(std::vector<EisensteinSubmodule>{r_kernel, j_p2}));
    }
  }
  EisensteinSubmodule k1 = direct_sum(p1);
  EisensteinSubmodule k2 = direct_sum(p2);
  return {k1.ambient(), k1, k2};
}

EisensteinSubmodule satellite_twisted_kernel(const SatelliteScenario& s, const Character& chi,
                                             DiscChoice choice) {
  auto pair = satellite_twisted_kernels(s, chi);
  return choice == DiscChoice::One ? pair.p1 : pair.p2;
}

DiscPairKernels<LaurentPolyQ> satellite_rational_kernels(const SatelliteScenario& s) {
  auto kernel = disc_kernel_q(s.base_disc);
  std::vector<Submodule<LaurentPolyQ>> parts(s.copies, kernel);
  auto k = direct_sum(parts);
  return {k.ambient(), k, k};
}

Character character_selection(const std::vector<std::vector<F3>>& constraints, std::size_t n) {
  if (constraints.size() > n)
    throw Error(ErrorKind::InvalidInput, "character selection needs at most N constraints");
  for (const auto& a : constraints)
    if (a.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "constraint vector has the wrong length");
  auto basis = nullspace_f3(constraints, n);
  std::vector<F3> x(n);
  for (const auto& b : basis) {
    std::vector<F3> best;
    for (int c : {1, 2}) {
      std::vector<F3> y = x;
      for (std::size_t i = 0; i < n; ++i) y[i] += F3(c) * b[i];
      if (best.empty() || support(y) > support(best)) best = std::move(y);
    }
    x = std::move(best);
  }
  if (support(x) + constraints.size() < n || !annihilates(constraints, x))
    x = exhaustive_selection(basis, n);
  if (support(x) + constraints.size() < n || !annihilates(constraints, x))
    throw Error(ErrorKind::Internal, "character selection found no admissible character");
  return Character{std::move(x)};
}

MetabelianBound theorem_c_lower_bound(const SatelliteScenario& s) {
  const SeifertKnot& j0 = s.companion.base_knot();
  auto obstruction = metabelian_obstruction(j0, s.companion.base_disc());
  if (!obstruction.nonzero)
    throw Error(ErrorKind::Hypothesis, "obstruction vanishes: A_w(" + j0.name() +
                                           ")/ker(A_w(J0) -> A_w(D0)) is zero");

  auto h1 = branched_double_cover(s.base());
  if (character_space_dimension(h1) != 1)
    throw Error(ErrorKind::Hypothesis,
                "one Z_3 character per summand: Hom(H_1(Σ_2(" + s.base().name() +
                    ")), Z_3) has dimension " + std::to_string(character_space_dimension(h1)));
  auto bk = disc_branched_kernel(s.base_disc);
  Submodule<Integer> three_h1(h1, Matrix<Integer>::identity(h1.ngens()).map(
                                         [](const Integer& x) { return Integer(3 * x); }));
  if (!span_contains(three_h1, bk))
    throw Error(ErrorKind::Hypothesis,
                "characters extend over the disc exterior: branched disc kernel of " +
                    s.base_disc.name() + " is not contained in 3*H_1(Σ_2(R))");

  MetabelianBound out;
  const std::size_t n = character_space_dimension(s);
  out.characters = n;
  while (4 * out.lower < n) ++out.lower;

  out.chain.push_back("obstruction A_w(J0)/ker(i0) nonzero, order " +
                      to_string(canonical_associate(order(obstruction.module))));
  out.chain.push_back("Hom(H_1(Σ_2(K)), Z_3) = Z_3^" + std::to_string(n));
  out.chain.push_back("branched disc kernel contained in 3*H_1, so every character extends");

  // Summands contribute according to whether their component vanishes.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::size_t rank_zero = unset, rank_nonzero = unset;
  for (std::size_t h = 0; h < out.lower; ++h) {
    std::vector<std::vector<F3>> constraints;
    for (std::size_t k = 0; k < 2 * h; ++k) constraints.push_back(unit_vector(n, k));
    MetabelianWitness w;
    w.handles = h;
    w.character = character_selection(constraints, n);
    w.guaranteed = n - 2 * h;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t& slot = w.character.components[i].is_zero() ? rank_zero : rank_nonzero;
      if (slot == unset) slot = summand_quotient_rank(s, w.character, i);
      w.quotient_rank += slot;
    }
    if (w.quotient_rank < w.guaranteed)
      throw Error(ErrorKind::InvariantViolation,
                  "quotient rank " + std::to_string(w.quotient_rank) + " below " +
                      std::to_string(w.guaranteed) + " for h = " + std::to_string(h));
    out.chain.push_back("h = " + std::to_string(h) + ": chi = " + w.character.to_string() +
                        ", gr(ker i2 / (ker i1 ∩ ker i2)) = " + std::to_string(w.quotient_rank) +
                        " >= N - 2h = " + std::to_string(w.guaranteed) + " > 2h");
    out.witnesses.push_back(std::move(w));
  }
  out.chain.push_back("least h with 2h >= N - 2h is " + std::to_string(out.lower));
  return out;
}

}  // namespace stabkit

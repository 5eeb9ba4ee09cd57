#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/eisenstein.hpp"
#include "stabkit/f3.hpp"
#include "stabkit/knot.hpp"
#include "stabkit/module.hpp"

namespace stabkit {

using EisensteinModule = PresentedModule<EisensteinInt>;
using EisensteinSubmodule = Submodule<EisensteinInt>;

/// A(K) ⊗ Z[w] with t acting as w.
EisensteinModule eisenstein_alexander(const SeifertKnot& knot);

/// Curve classes of the disc, viewed in eisenstein_alexander(knot).
EisensteinSubmodule disc_kernel_xi(const SurgeryDisc& disc);

/// Entry-wise w -> w^2 on the presentation (the conjugate module structure).
EisensteinModule conjugate(const EisensteinModule& m);
EisensteinSubmodule conjugate(const EisensteinSubmodule& s);

/// M ⊕ conj(M)
EisensteinModule one_oplus_bar(const EisensteinModule& m);
EisensteinSubmodule one_oplus_bar(const EisensteinSubmodule& s);

/// Twisted H_1 for the diagonal representation w^e ⊕ w^-e: A_w ⊕ conj(A_w).
EisensteinModule twisted_homology_abelian_rep(const SeifertKnot& knot);

struct MetabelianObstruction {
  EisensteinModule module;  // A_w(J0) / ker(A_w(J0) -> A_w(D0))
  bool nonzero = false;
};

MetabelianObstruction metabelian_obstruction(const SeifertKnot& j0, const SurgeryDisc& d0);

/// Homomorphism to Z_3 given per connected summand.
struct Character {
  std::vector<F3> components;

  std::size_t size() const noexcept { return components.size(); }
  std::size_t nonzero_count() const;
  /// e.g. "[1,0,2,1]"
  std::string to_string() const;
};

/// N copies of the satellite R_eta(J), J = J0 # -J0, with discs built from
/// base_disc on R and either D0 ♮ -D0 (choice One) or the spun disc (Two)
/// on J. The infection curve is recorded by its class in A(R) and must
/// generate A(R); winding number zero is a flag.
struct SatelliteScenario {
  SurgeryDisc base_disc;
  std::vector<Integer> eta;
  bool eta_winding_zero = true;
  DiscPairModel companion;
  std::size_t copies = 0;

  const SeifertKnot& base() const { return base_disc.knot(); }
};

/// Checks the structural hypotheses: A_Q(R) cyclic, eta generates it with
/// winding number zero, H_1(Σ_2(R)) finite with 3-torsion.
SatelliteScenario make_satellite_scenario(SurgeryDisc base_disc, std::vector<Integer> eta,
                                          bool eta_winding_zero, SurgeryDisc companion_disc,
                                          std::size_t copies);

enum class DiscChoice { One, Two };

struct EisensteinKernelPair {
  EisensteinModule ambient;
  EisensteinSubmodule p1;
  EisensteinSubmodule p2;
};

/// Kernels of the twisted H_1 of the knot exterior into each disc exterior,
/// assembled summand by summand. A summand with nonzero character splits as
/// (R part) ⊕ A_w(J)^{1⊕1̄} with kernel (R kernel) ⊕ ker(A_w(J) -> A_w(D_j))^{1⊕1̄};
/// a summand with zero character contributes only the R part. The R part is
/// the same for both discs and is modelled by A_w(R)^{1⊕1̄} with the
/// conjugate-doubled disc kernel.
EisensteinKernelPair satellite_twisted_kernels(const SatelliteScenario& s, const Character& chi);
EisensteinSubmodule satellite_twisted_kernel(const SatelliteScenario& s, const Character& chi,
                                             DiscChoice choice);

/// Untwisted kernels over Q[t±1]. The satellite has A(R_eta(J)) = A(R) and
/// both discs restrict to the same kernel, so P1 and P2 coincide.
DiscPairKernels<LaurentPolyQ> satellite_rational_kernels(const SatelliteScenario& s);

/// dim_F3 Hom(H_1(Σ_2(#^N R)), Z_3).
std::size_t character_space_dimension(const SatelliteScenario& s);
std::size_t character_space_dimension(const PresentedModule<Integer>& h1);

/// A character vanishing on every constraint vector with at least N - m
/// nonzero components, m = constraints.size().
Character character_selection(const std::vector<std::vector<F3>>& constraints, std::size_t n);

struct MetabelianWitness {
  std::size_t handles = 0;       // candidate h that the computation rules out
  Character character;           // vanishes on the 2h constraint vectors
  std::size_t guaranteed = 0;    // N - 2h
  std::size_t quotient_rank = 0; // gr(ker ι2 / (ker ι1 ∩ ker ι2)) over Z[w]
};

struct MetabelianBound {
  std::size_t lower = 0;
  std::size_t characters = 0;  // N
  std::vector<MetabelianWitness> witnesses;
  std::vector<std::string> chain;
};

/// Least h with 2h >= N - 2h, after checking the hypotheses (nonzero
/// obstruction for J0; disc kernel of R inside 3·H_1(Σ_2(R))) and computing,
/// for each smaller h, a character and the Z[w] quotient rank it forces.
MetabelianBound theorem_c_lower_bound(const SatelliteScenario& s);

}  // namespace stabkit

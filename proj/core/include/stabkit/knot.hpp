#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/integer.hpp"
#include "stabkit/laurent.hpp"
#include "stabkit/matrix.hpp"
#include "stabkit/module.hpp"

namespace stabkit {

/// Knot given by a Seifert matrix V on a genus-g surface. V - V^T must be
/// unimodular with determinant 1 (a symplectic basis of H_1 of the surface).
class SeifertKnot {
 public:
  SeifertKnot() = default;
  SeifertKnot(std::string name, Matrix<Integer> seifert);

  static SeifertKnot unknot();

  const std::string& name() const noexcept { return name_; }
  std::size_t genus() const noexcept { return seifert_.rows() / 2; }
  const Matrix<Integer>& seifert() const noexcept { return seifert_; }

  friend bool operator==(const SeifertKnot& a, const SeifertKnot& b) {
    return a.seifert_ == b.seifert_;
  }

 private:
  std::string name_;
  Matrix<Integer> seifert_;
};

/// Ribbon disc from surgery on the Seifert surface along g curves.
///
/// `curves` is 2g x g; column i holds the H_1(F) coordinates of the i-th
/// surgery curve. The curves must be 0-framed and pairwise algebraically
/// disjoint, c^T (V + V^T) c = 0, and span a direct summand of H_1(F).
/// A disc built by boundary connected sum remembers the genus of each block.
class SurgeryDisc {
 public:
  SurgeryDisc() = default;
  SurgeryDisc(std::string name, SeifertKnot knot, Matrix<Integer> curves);

  const std::string& name() const noexcept { return name_; }
  const SeifertKnot& knot() const noexcept { return knot_; }
  const Matrix<Integer>& curves() const noexcept { return curves_; }
  const std::vector<std::size_t>& block_genera() const noexcept { return blocks_; }
  /// Number of local knotted 2-spheres summed in; never affects kernels.
  std::size_t local_2knots() const noexcept { return local_2knots_; }

 private:
  friend SurgeryDisc boundary_connect_sum(const std::vector<SurgeryDisc>& discs);
  friend SurgeryDisc add_local_2knot(const SurgeryDisc& disc);

  std::string name_;
  SeifertKnot knot_;
  Matrix<Integer> curves_;
  std::vector<std::size_t> blocks_;
  std::size_t local_2knots_ = 0;
};

/// Closed 2-knot given as a connected sum of doubles D ∪ D of surgery discs.
struct TwoKnotModel {
  std::vector<SurgeryDisc> summands;
  PresentedModule<LaurentPolyQ> module;
};

/// t V - V^T, whose columns are the relations of the Alexander module.
Matrix<IntLaurentPoly> alexander_presentation(const SeifertKnot& knot);

PresentedModule<LaurentPolyQ> alexander_module_q(const SeifertKnot& knot);

/// Order of the rational Alexander module (the Alexander polynomial up to units).
LaurentPolyQ alexander_polynomial(const SeifertKnot& knot);

/// Alexander-module coordinates of the class of a surface curve: V^T c.
std::vector<Integer> curve_class(const SeifertKnot& knot, const std::vector<Integer>& curve);

/// V^T C: the curve classes of a disc as columns.
Matrix<Integer> curve_classes(const SurgeryDisc& disc);

/// ker(A_Q(K) -> A_Q(D)), spanned by the curve classes.
Submodule<LaurentPolyQ> disc_kernel_q(const SurgeryDisc& disc);

/// A_Q(D) modelled as A_Q(K) / disc_kernel_q(D).
PresentedModule<LaurentPolyQ> disc_module_q(const SurgeryDisc& disc);

/// Block-diagonal Seifert matrix.
SeifertKnot connected_sum(const std::vector<SeifertKnot>& knots);
SurgeryDisc boundary_connect_sum(const std::vector<SurgeryDisc>& discs);

/// -K with Seifert matrix -V^T.
SeifertKnot mirror_reverse(const SeifertKnot& knot);

/// H_1 of the 2-fold branched cover, presented by (tV - V^T)|_{t=-1}.
PresentedModule<Integer> branched_double_cover(const SeifertKnot& knot);

/// ker(H_1(Σ_2(K)) -> H_1(Σ_2(D^4, D))), spanned by curve classes at t = -1.
Submodule<Integer> disc_branched_kernel(const SurgeryDisc& disc);

/// The 2-knot D ∪_K D: cokernel of A_Q(K) -> A_Q(D) ⊕ A_Q(D), x -> (q(x), sign * q(x)).
TwoKnotModel double_of_disc(const SurgeryDisc& disc, int sign = -1);

TwoKnotModel unknotted_sphere();

TwoKnotModel two_knot_sum(const std::vector<TwoKnotModel>& parts);

/// Connected sum with a local knotted 2-sphere; only the decoration changes.
SurgeryDisc add_local_2knot(const SurgeryDisc& disc);

/// Kernels for J = J0 # -J0 with its two ribbon discs, under the
/// identification A(J) = A(J0) ⊕ A(J0): the disc D0 ♮ -D0 has kernel
/// ker(i0) ⊕ ker(i0), the spun disc has the antidiagonal {(x, -x)}.
template <EuclideanRing R>
struct DiscPairKernels {
  PresentedModule<R> ambient;
  Submodule<R> product_kernel;
  Submodule<R> antidiagonal;
};

template <EuclideanRing R>
DiscPairKernels<R> disc_pair_kernels(const PresentedModule<R>& base,
                                     const Matrix<R>& base_kernel_generators) {
  const std::size_t n = base.ngens();
  PresentedModule<R> ambient = direct_sum(base, base);
  Matrix<R> anti(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    anti(i, i) = RingTraits<R>::one();
    anti(n + i, i) = -RingTraits<R>::one();
  }
  return {ambient,
          Submodule<R>(ambient, block_diagonal(base_kernel_generators, base_kernel_generators)),
          Submodule<R>(ambient, anti)};
}

/// J0 with its preferred disc D0; J = J0 # -J0 carries the two discs above.
class DiscPairModel {
 public:
  DiscPairModel() = default;
  explicit DiscPairModel(SurgeryDisc base) : base_(std::move(base)) {}

  const SurgeryDisc& base_disc() const noexcept { return base_; }
  const SeifertKnot& base_knot() const noexcept { return base_.knot(); }

  DiscPairKernels<LaurentPolyQ> kernels_q() const;

 private:
  SurgeryDisc base_;
};

}  // namespace stabkit

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/error.hpp"
#include "stabkit/matrix.hpp"
#include "stabkit/ring.hpp"
#include "stabkit/smith.hpp"

namespace stabkit {

/// R^ngens modulo the column span of `relations` (ngens rows).
template <EuclideanRing R>
class PresentedModule {
 public:
  PresentedModule() = default;
  explicit PresentedModule(Matrix<R> relations) : relations_(std::move(relations)) {}

  static PresentedModule free(std::size_t n) { return PresentedModule(Matrix<R>(n, 0)); }
  /// R / (r)
  static PresentedModule cyclic(const R& r) { return PresentedModule(Matrix<R>{{r}}); }

  static constexpr RingTag ring() { return RingTraits<R>::tag; }
  std::size_t ngens() const noexcept { return relations_.rows(); }
  const Matrix<R>& relations() const noexcept { return relations_; }

  friend bool operator==(const PresentedModule& a, const PresentedModule& b) {
    return a.relations_ == b.relations_;
  }

 private:
  Matrix<R> relations_;
};

template <EuclideanRing R>
PresentedModule<R> direct_sum(const std::vector<PresentedModule<R>>& parts) {
  std::vector<Matrix<R>> blocks;
  for (const auto& p : parts) blocks.push_back(p.relations());
  return PresentedModule<R>(block_diagonal(blocks));
}

template <EuclideanRing R>
PresentedModule<R> direct_sum(const PresentedModule<R>& a, const PresentedModule<R>& b) {
  return direct_sum(std::vector<PresentedModule<R>>{a, b});
}

/// Invariant factors in divisibility order, one per nonunit slot of the Smith
/// form padded to ngens; a free summand contributes a 0.
template <EuclideanRing R>
std::vector<R> invariant_factors(const PresentedModule<R>& m, const std::stop_token& stop = {}) {
  SmithOptions opts{false, false, stop};
  auto snf = smith_normal_form(m.relations(), opts);
  std::vector<R> out = std::move(snf.invariant_factors);
  const std::size_t n = m.ngens(), k = m.relations().cols();
  for (std::size_t i = std::min(n, k); i < n; ++i) out.push_back(RingTraits<R>::zero());
  return out;
}

/// Minimal number of generators.
template <EuclideanRing R>
std::size_t generating_rank(const PresentedModule<R>& m) {
  return invariant_factors(m).size();
}

template <EuclideanRing R>
bool is_zero_module(const PresentedModule<R>& m) {
  return generating_rank(m) == 0;
}

template <EuclideanRing R>
std::size_t free_rank(const PresentedModule<R>& m) {
  std::size_t n = 0;
  for (const auto& f : invariant_factors(m))
    if (RingTraits<R>::is_zero(f)) ++n;
  return n;
}

/// Product of invariant factors as a canonical associate; 0 when free rank
/// is positive, 1 for the zero module.
template <EuclideanRing R>
R order(const PresentedModule<R>& m) {
  R out = RingTraits<R>::one();
  for (const auto& f : invariant_factors(m)) out = out * f;
  return canonical(out);
}

/// Span of generator columns inside a presented module.
template <EuclideanRing R>
class Submodule {
 public:
  Submodule() = default;
  Submodule(PresentedModule<R> ambient, Matrix<R> generators)
      : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    if (generators_.rows() != ambient_.ngens()) {
      if (generators_.cols() == 0)
        generators_ = Matrix<R>(ambient_.ngens(), 0);
      else
        throw Error(ErrorKind::DimensionMismatch,
                    "submodule generators have " + std::to_string(generators_.rows()) +
                        " rows, ambient has " + std::to_string(ambient_.ngens()) + " generators");
    }
  }

  static Submodule zero(const PresentedModule<R>& ambient) {
    return Submodule(ambient, Matrix<R>(ambient.ngens(), 0));
  }
  static Submodule whole(const PresentedModule<R>& ambient) {
    return Submodule(ambient, Matrix<R>::identity(ambient.ngens()));
  }

  const PresentedModule<R>& ambient() const noexcept { return ambient_; }
  const Matrix<R>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.cols(); }

 private:
  PresentedModule<R> ambient_;
  Matrix<R> generators_;
};

namespace detail {

template <EuclideanRing R>
void require_same_ambient(const Submodule<R>& a, const Submodule<R>& b) {
  if (!(a.ambient() == b.ambient()))
    throw Error(ErrorKind::AmbientMismatch, "submodules live in different ambient modules");
}

/// First `m` coordinates of the kernel of [A | B]: { x : A x in span(B) }.
template <EuclideanRing R>
Matrix<R> preimage_of_span(const Matrix<R>& a, const Matrix<R>& b) {
  const std::size_t m = a.cols();
  Matrix<R> ker = kernel_basis(hstack(a, b));
  return span_basis(ker.top_rows(m));
}

}  // namespace detail

/// Whether v is zero in span(S) + relations, i.e. v lies in S.
template <EuclideanRing R>
bool contains(const Submodule<R>& s, const std::vector<R>& v) {
  auto e = column_echelon(hstack(s.generators(), s.ambient().relations()), false);
  return in_column_span(e, v);
}

/// span(inner) is contained in span(outer).
template <EuclideanRing R>
bool span_contains(const Submodule<R>& outer, const Submodule<R>& inner) {
  detail::require_same_ambient(outer, inner);
  auto e = column_echelon(hstack(outer.generators(), outer.ambient().relations()), false);
  for (std::size_t j = 0; j < inner.size(); ++j)
    if (!in_column_span(e, inner.generators().column(j))) return false;
  return true;
}

/// Span equality, decided by mutual containment.
template <EuclideanRing R>
bool span_equal(const Submodule<R>& a, const Submodule<R>& b) {
  return span_contains(a, b) && span_contains(b, a);
}

/// The abstract module spanned by S: R^m / { x : G x in span(relations) }.
template <EuclideanRing R>
PresentedModule<R> submodule_presentation(const Submodule<R>& s) {
  return PresentedModule<R>(detail::preimage_of_span(s.generators(), s.ambient().relations()));
}

template <EuclideanRing R>
Submodule<R> submodule_sum(const Submodule<R>& a, const Submodule<R>& b) {
  detail::require_same_ambient(a, b);
  return Submodule<R>(a.ambient(), span_basis(hstack(a.generators(), b.generators())));
}

/// span(S1) ∩ span(S2), from solutions of G1 a - G2 b in span(relations).
template <EuclideanRing R>
Submodule<R> submodule_intersection(const Submodule<R>& s1, const Submodule<R>& s2) {
  detail::require_same_ambient(s1, s2);
  Matrix<R> coeffs =
      detail::preimage_of_span(s1.generators(), hstack(s2.generators(), s1.ambient().relations()));
  return Submodule<R>(s1.ambient(), span_basis(s1.generators() * coeffs));
}

/// span(S2) / (span(S1) ∩ span(S2)), as R^m2 / { x : G2 x in span([G1 | relations]) }.
template <EuclideanRing R>
PresentedModule<R> quotient_of_submodules(const Submodule<R>& s2, const Submodule<R>& s1) {
  detail::require_same_ambient(s1, s2);
  return PresentedModule<R>(
      detail::preimage_of_span(s2.generators(), hstack(s1.generators(), s1.ambient().relations())));
}

/// ambient / span(S)
template <EuclideanRing R>
PresentedModule<R> quotient_module(const Submodule<R>& s) {
  return PresentedModule<R>(hstack(s.ambient().relations(), s.generators()));
}

template <EuclideanRing R>
Submodule<R> direct_sum(const std::vector<Submodule<R>>& parts) {
  std::vector<PresentedModule<R>> ambients;
  std::vector<Matrix<R>> gens;
  for (const auto& p : parts) {
    ambients.push_back(p.ambient());
    gens.push_back(p.generators());
  }
  return Submodule<R>(direct_sum(ambients), block_diagonal(gens));
}

/// Homomorphism given on generators; construction checks that every source
/// relation maps into the span of the target relations.
template <EuclideanRing R>
class ModuleMap {
 public:
  ModuleMap(PresentedModule<R> source, PresentedModule<R> target, Matrix<R> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
      throw Error(ErrorKind::DimensionMismatch, "module map matrix has the wrong shape");
    auto e = column_echelon(target_.relations(), false);
    Matrix<R> images = matrix_ * source_.relations();
    for (std::size_t j = 0; j < images.cols(); ++j)
      if (!in_column_span(e, images.column(j)))
        throw Error(ErrorKind::InvariantViolation,
                    "module map is not well defined: source relation " + std::to_string(j) +
                        " does not map to zero");
  }

  static ModuleMap identity(const PresentedModule<R>& m) {
    return ModuleMap(m, m, Matrix<R>::identity(m.ngens()));
  }
  static ModuleMap zero(const PresentedModule<R>& source, const PresentedModule<R>& target) {
    return ModuleMap(source, target, Matrix<R>(target.ngens(), source.ngens()));
  }

  const PresentedModule<R>& source() const noexcept { return source_; }
  const PresentedModule<R>& target() const noexcept { return target_; }
  const Matrix<R>& matrix() const noexcept { return matrix_; }

 private:
  PresentedModule<R> source_;
  PresentedModule<R> target_;
  Matrix<R> matrix_;
};

/// { x : f(x) in span(target relations) }
template <EuclideanRing R>
Submodule<R> map_kernel(const ModuleMap<R>& f) {
  return Submodule<R>(f.source(), detail::preimage_of_span(f.matrix(), f.target().relations()));
}

template <EuclideanRing R>
Submodule<R> map_image(const ModuleMap<R>& f) {
  return Submodule<R>(f.target(), f.matrix());
}

/// target with the columns of f appended to its relations.
template <EuclideanRing R>
PresentedModule<R> map_cokernel(const ModuleMap<R>& f) {
  return PresentedModule<R>(hstack(f.target().relations(), f.matrix()));
}

}  // namespace stabkit

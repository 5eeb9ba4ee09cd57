#include "stabkit/knot.hpp"

#include <string>

#include "stabkit/smith.hpp"
#include "stabkit/specialize.hpp"

namespace stabkit {

namespace {

// Fraction-free Gaussian elimination.
Integer bareiss_determinant(Matrix<Integer> a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Matrix<LaurentPolyQ> to_q(const Matrix<Integer>& m) {
  return m.map([](const Integer& x) { return LaurentPolyQ(Rational(x)); });
}

}  // namespace

SeifertKnot::SeifertKnot(std::string name, Matrix<Integer> seifert)
    : name_(std::move(name)), seifert_(std::move(seifert)) {
  if (seifert_.rows() != seifert_.cols() || seifert_.rows() % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "Seifert matrix of '" + name_ +
                                             "' must be square of even size, got " +
                                             std::to_string(seifert_.rows()) + "x" +
                                             std::to_string(seifert_.cols()));
  Integer det = bareiss_determinant(seifert_ - seifert_.transpose());
  if (det != 1)
    throw Error(ErrorKind::InvariantViolation, "Seifert matrix of '" + name_ +
                                                   "' is not a Seifert form: det(V - V^T) = " +
                                                   det.get_str() + ", expected 1");
}

SeifertKnot SeifertKnot::unknot() { return SeifertKnot("unknot", Matrix<Integer>(0, 0)); }

SurgeryDisc::SurgeryDisc(std::string name, SeifertKnot knot, Matrix<Integer> curves)
    : name_(std::move(name)), knot_(std::move(knot)), curves_(std::move(curves)) {
  const std::size_t g = knot_.genus();
  if (curves_.rows() == 0 && curves_.cols() == 0) curves_ = Matrix<Integer>(2 * g, 0);
  if (curves_.rows() != 2 * g || curves_.cols() != g)
    throw Error(ErrorKind::InvalidInput,
                "disc '" + name_ + "' on genus " + std::to_string(g) + " knot '" + knot_.name() +
                    "' needs a " + std::to_string(2 * g) + "x" + std::to_string(g) +
                    " curve matrix, got " + std::to_string(curves_.rows()) + "x" +
                    std::to_string(curves_.cols()));
  const Matrix<Integer>& v = knot_.seifert();
  Matrix<Integer> form = curves_.transpose() * (v + v.transpose()) * curves_;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      if (form(i, j) == 0) continue;
      const std::string where =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j)
        throw Error(ErrorKind::InvariantViolation,
                    "curves not 0-framed: c^T(V+V^T)c = " + form(i, j).get_str() + " at " + where);
      throw Error(ErrorKind::InvariantViolation,
                  "curves not metabolizing: c_i^T(V+V^T)c_j = " + form(i, j).get_str() + " at " +
                      where);
    }
  auto snf = smith_normal_form(curves_, SmithOptions{false, false, {}});
  if (snf.rank != g || !snf.invariant_factors.empty())
    throw Error(ErrorKind::InvariantViolation,
                "curves of disc '" + name_ + "' do not span a direct summand of H_1(F)");
  blocks_ = {g};
}

Matrix<IntLaurentPoly> alexander_presentation(const SeifertKnot& knot) {
  const auto& v = knot.seifert();
  const std::size_t n = v.rows();
  Matrix<IntLaurentPoly> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = IntLaurentPoly(0, {Integer(-v(j, i)), Integer(v(i, j))});
  return out;
}

PresentedModule<LaurentPolyQ> alexander_module_q(const SeifertKnot& knot) {
  return rational_module(alexander_presentation(knot));
}

LaurentPolyQ alexander_polynomial(const SeifertKnot& knot) {
  return order(alexander_module_q(knot));
}

std::vector<Integer> curve_class(const SeifertKnot& knot, const std::vector<Integer>& curve) {
  if (curve.size() != 2 * knot.genus())
    throw Error(ErrorKind::DimensionMismatch,
                "curve has " + std::to_string(curve.size()) + " coordinates, expected " +
                    std::to_string(2 * knot.genus()));
  return knot.seifert().transpose() * curve;
}

Matrix<Integer> curve_classes(const SurgeryDisc& disc) {
  return disc.knot().seifert().transpose() * disc.curves();
}

Submodule<LaurentPolyQ> disc_kernel_q(const SurgeryDisc& disc) {
  return Submodule<LaurentPolyQ>(alexander_module_q(disc.knot()), to_q(curve_classes(disc)));
}

PresentedModule<LaurentPolyQ> disc_module_q(const SurgeryDisc& disc) {
  return quotient_module(disc_kernel_q(disc));
}

SeifertKnot connected_sum(const std::vector<SeifertKnot>& knots) {
  if (knots.size() == 1) return knots.front();
  std::vector<Matrix<Integer>> blocks;
  std::string name = "sum(";
  for (std::size_t i = 0; i < knots.size(); ++i) {
    blocks.push_back(knots[i].seifert());
    name += (i ? "," : "") + knots[i].name();
  }
  return SeifertKnot(knots.empty() ? "unknot" : name + ")", block_diagonal(blocks));
}

SurgeryDisc boundary_connect_sum(const std::vector<SurgeryDisc>& discs) {
  if (discs.size() == 1) return discs.front();
  std::vector<SeifertKnot> knots;
  std::vector<Matrix<Integer>> curves;
  std::string name;
  std::vector<std::size_t> blocks;
  std::size_t local = 0;
  for (const auto& d : discs) {
    knots.push_back(d.knot());
    curves.push_back(d.curves());
    name += (name.empty() ? "" : "+") + d.name();
    blocks.insert(blocks.end(), d.blocks_.begin(), d.blocks_.end());
    local += d.local_2knots_;
  }
  SurgeryDisc out(name, connected_sum(knots), block_diagonal(curves));
  out.blocks_ = std::move(blocks);
  out.local_2knots_ = local;
  return out;
}

SeifertKnot mirror_reverse(const SeifertKnot& knot) {
  return SeifertKnot("-" + knot.name(), -knot.seifert().transpose());
}

PresentedModule<Integer> branched_double_cover(const SeifertKnot& knot) {
  return specialize_module_minus_one(alexander_presentation(knot));
}

Submodule<Integer> disc_branched_kernel(const SurgeryDisc& disc) {
  // V^T C has integer entries, so t = -1 leaves it unchanged.
  return Submodule<Integer>(branched_double_cover(disc.knot()), curve_classes(disc));
}

TwoKnotModel double_of_disc(const SurgeryDisc& disc, int sign) {
  PresentedModule<LaurentPolyQ> source = alexander_module_q(disc.knot());
  PresentedModule<LaurentPolyQ> half = disc_module_q(disc);
  const std::size_t n = source.ngens();
  Matrix<LaurentPolyQ> q(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = LaurentPolyQ(Rational(1));
    q(n + i, i) = LaurentPolyQ(Rational(sign));
  }
  ModuleMap<LaurentPolyQ> map(source, direct_sum(half, half), q);
  return {{disc}, map_cokernel(map)};
}

TwoKnotModel unknotted_sphere() { return {{}, PresentedModule<LaurentPolyQ>()}; }

TwoKnotModel two_knot_sum(const std::vector<TwoKnotModel>& parts) {
  TwoKnotModel out;
  std::vector<PresentedModule<LaurentPolyQ>> modules;
  for (const auto& p : parts) {
    out.summands.insert(out.summands.end(), p.summands.begin(), p.summands.end());
    modules.push_back(p.module);
  }
  out.module = direct_sum(modules);
  return out;
}

SurgeryDisc add_local_2knot(const SurgeryDisc& disc) {
  SurgeryDisc out = disc;
  ++out.local_2knots_;
  return out;
}

DiscPairKernels<LaurentPolyQ> DiscPairModel::kernels_q() const {
  auto k = disc_kernel_q(base_);
  return disc_pair_kernels(k.ambient(), k.generators());
}

}  // namespace stabkit

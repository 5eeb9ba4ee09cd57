#include "stabkit/specialize.hpp"

#include "stabkit/error.hpp"

namespace stabkit {

EisensteinInt specialize_at_xi3(const IntLaurentPoly& p) {
  // Bucket coefficients by exponent mod 3: t^k -> 1, w, w^2 = -1 - w.
  Integer c[3] = {0, 0, 0};
  for (const auto& [e, coeff] : p.terms()) c[((e % 3) + 3) % 3] += coeff;
  return {c[0] - c[2], c[1] - c[2]};
}

Integer specialize_at_minus_one(const IntLaurentPoly& p) {
  Integer out = 0;
  for (const auto& [e, coeff] : p.terms()) {
    if (e % 2 == 0)
      out += coeff;
    else
      out -= coeff;
  }
  return out;
}

Rational specialize_at(const IntLaurentPoly& p, const Rational& q) {
  if (q == 0) throw Error(ErrorKind::InvalidInput, "cannot specialize t at 0");
  Rational out = 0;
  const Rational inv = Rational(1) / q;
  for (const auto& [e, coeff] : p.terms()) {
    Rational power = 1;
    const Rational& base = e >= 0 ? q : inv;
    for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    out += Rational(coeff) * power;
  }
  return out;
}

}  // namespace stabkit

namespace stabkit {

PresentedModule<EisensteinInt> specialize_module_xi3(const Matrix<IntLaurentPoly>& presentation) {
  return PresentedModule<EisensteinInt>(
      presentation.map([](const IntLaurentPoly& p) { return specialize_at_xi3(p); }));
}

PresentedModule<Integer> specialize_module_minus_one(const Matrix<IntLaurentPoly>& presentation) {
  return PresentedModule<Integer>(
      presentation.map([](const IntLaurentPoly& p) { return specialize_at_minus_one(p); }));
}

PresentedModule<LaurentPolyQ> rational_module(const Matrix<IntLaurentPoly>& presentation) {
  return PresentedModule<LaurentPolyQ>(
      presentation.map([](const IntLaurentPoly& p) { return to_rational(p); }));
}

}  // namespace stabkit

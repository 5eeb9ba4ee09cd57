#pragma once

#include "stabkit/eisenstein.hpp"
#include "stabkit/integer.hpp"
#include "stabkit/laurent.hpp"

namespace stabkit {

/// Ring homomorphisms out of Z[t^±1] given by t -> target.

/// t -> w, reduced with w^2 = -1 - w.
EisensteinInt specialize_at_xi3(const IntLaurentPoly& p);
/// t -> -1.
Integer specialize_at_minus_one(const IntLaurentPoly& p);
/// t -> q for q != 0.
Rational specialize_at(const IntLaurentPoly& p, const Rational& q);

}  // namespace stabkit

#include "stabkit/matrix.hpp"
#include "stabkit/module.hpp"

namespace stabkit {

enum class SpecializationTarget { Xi3, MinusOne };

/// Entry-wise specialization of a presentation over Z[t^±1]; generators are unchanged.
PresentedModule<EisensteinInt> specialize_module_xi3(const Matrix<IntLaurentPoly>& presentation);
PresentedModule<Integer> specialize_module_minus_one(const Matrix<IntLaurentPoly>& presentation);
/// Base change Z[t^±1] -> Q[t^±1].
PresentedModule<LaurentPolyQ> rational_module(const Matrix<IntLaurentPoly>& presentation);

}  // namespace stabkit

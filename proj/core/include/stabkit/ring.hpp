#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "stabkit/eisenstein.hpp"
#include "stabkit/error.hpp"
#include "stabkit/f3.hpp"
#include "stabkit/integer.hpp"
#include "stabkit/laurent.hpp"

namespace stabkit {

enum class RingTag { QLaurent, Eisenstein, Integers, F3 };

const char* to_string(RingTag tag) noexcept;

/// Per-ring Euclidean structure. Specializations provide:
///   zero(), one(), is_zero, is_unit, size (Euclidean size, totally ordered),
///   divmod, normalize (canonical associate together with the unit that
///   produces it: canonical == unit * x), format, parse.
template <class R>
struct RingTraits;

template <class R>
struct Normalized {
  R value;
  R unit;  // value == unit * input
};

template <>
struct RingTraits<Integer> {
  using Size = Integer;
  static constexpr RingTag tag = RingTag::Integers;
  static constexpr std::string_view name = "Z";
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& x) { return x == 0; }
  static bool is_unit(const Integer& x) { return x == 1 || x == -1; }
  static Size size(const Integer& x) { return abs(x); }
  /// Floor division, so the remainder has the sign of den.
  static std::pair<Integer, Integer> divmod(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "integer division by zero");
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return {q, r};
  }
  static Normalized<Integer> normalize(const Integer& x) {
    if (x < 0) return {Integer(-x), Integer(-1)};
    return {x, Integer(1)};
  }
  static std::string format(const Integer& x) { return x.get_str(); }
  static Integer parse(const std::string& s) { return parse_integer(s); }
};

template <>
struct RingTraits<LaurentPolyQ> {
  using Size = std::int64_t;
  static constexpr RingTag tag = RingTag::QLaurent;
  static constexpr std::string_view name = "Q[t^±1]";
  static LaurentPolyQ zero() { return {}; }
  static LaurentPolyQ one() { return LaurentPolyQ(Rational(1)); }
  static bool is_zero(const LaurentPolyQ& x) { return x.is_zero(); }
  static bool is_unit(const LaurentPolyQ& x) { return !x.is_zero() && x.degree_span() == 0; }
  static Size size(const LaurentPolyQ& x) { return x.degree_span(); }
  static std::pair<LaurentPolyQ, LaurentPolyQ> divmod(const LaurentPolyQ& num,
                                                      const LaurentPolyQ& den) {
    auto r = laurent_divmod(num, den);
    return {std::move(r.quotient), std::move(r.remainder)};
  }
  static Normalized<LaurentPolyQ> normalize(const LaurentPolyQ& x) {
    if (x.is_zero()) return {x, one()};
    LaurentPolyQ unit = LaurentPolyQ::monomial(Rational(1) / x.leading(), -x.low_exponent());
    return {unit * x, unit};
  }
  static std::string format(const LaurentPolyQ& x) { return to_string(x); }
  static LaurentPolyQ parse(const std::string& s) { return parse_laurent_q(s); }
};

template <>
struct RingTraits<EisensteinInt> {
  using Size = Integer;
  static constexpr RingTag tag = RingTag::Eisenstein;
  static constexpr std::string_view name = "Z[w]";
  static EisensteinInt zero() { return {}; }
  static EisensteinInt one() { return EisensteinInt(1); }
  static bool is_zero(const EisensteinInt& x) { return x.is_zero(); }
  static bool is_unit(const EisensteinInt& x) { return x.norm() == 1; }
  static Size size(const EisensteinInt& x) { return x.norm(); }
  static std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& num,
                                                        const EisensteinInt& den) {
    auto r = eisenstein_divmod(num, den);
    return {std::move(r.quotient), std::move(r.remainder)};
  }
  static Normalized<EisensteinInt> normalize(const EisensteinInt& x) {
    if (x.is_zero()) return {x, one()};
    for (const auto& u : eisenstein_units()) {
      EisensteinInt y = u * x;
      if (y.b() >= 0 && y.b() < y.a()) return {y, u};
    }
    throw Error(ErrorKind::Internal, "no canonical Eisenstein associate");
  }
  static std::string format(const EisensteinInt& x) { return to_string(x); }
  static EisensteinInt parse(const std::string& s) { return parse_eisenstein(s); }
};

template <>
struct RingTraits<F3> {
  using Size = int;
  static constexpr RingTag tag = RingTag::F3;
  static constexpr std::string_view name = "F3";
  static F3 zero() { return {}; }
  static F3 one() { return F3(1); }
  static bool is_zero(const F3& x) { return x.is_zero(); }
  static bool is_unit(const F3& x) { return !x.is_zero(); }
  static Size size(const F3& x) { return x.is_zero() ? 0 : 1; }
  static std::pair<F3, F3> divmod(const F3& num, const F3& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "F3 division by zero");
    return {num * den.inverse(), F3(0)};
  }
  static Normalized<F3> normalize(const F3& x) {
    if (x.is_zero()) return {x, one()};
    return {F3(1), x.inverse()};
  }
  static std::string format(const F3& x) { return to_string(x); }
  static F3 parse(const std::string& s) { return F3(std::stoi(s)); }
};

template <class R>
concept EuclideanRing = requires(const R& a, const R& b) {
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::is_unit(a) } -> std::convertible_to<bool>;
  RingTraits<R>::size(a);
  RingTraits<R>::divmod(a, b);
  RingTraits<R>::normalize(a);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
};

/// Z[t^±1] is only a carrier for presentations before specialization; it has
/// no Euclidean structure here.
template <>
struct RingTraits<IntLaurentPoly> {
  static IntLaurentPoly zero() { return {}; }
  static IntLaurentPoly one() { return IntLaurentPoly(Integer(1)); }
  static bool is_zero(const IntLaurentPoly& x) { return x.is_zero(); }
  static std::string format(const IntLaurentPoly& x) { return to_string(x); }
  static IntLaurentPoly parse(const std::string& s) { return parse_laurent_int(s); }
};

template <EuclideanRing R>
R canonical(const R& x) {
  return RingTraits<R>::normalize(x).value;
}

template <EuclideanRing R>
bool associates(const R& x, const R& y) {
  return canonical(x) == canonical(y);
}

template <EuclideanRing R>
bool divides(const R& d, const R& x) {
  using T = RingTraits<R>;
  if (T::is_zero(d)) return T::is_zero(x);
  return T::is_zero(T::divmod(x, d).second);
}

/// Exact quotient x / d; throws when d does not divide x.
template <EuclideanRing R>
R exact_quotient(const R& x, const R& d) {
  using T = RingTraits<R>;
  auto [q, r] = T::divmod(x, d);
  if (!T::is_zero(r)) throw Error(ErrorKind::Internal, "inexact division");
  return q;
}

template <EuclideanRing R>
struct Bezout {
  R gcd;  // canonical
  R s;
  R t;    // s*a + t*b == gcd
};

/// Extended Euclid; gcd(0, 0) == 0.
template <EuclideanRing R>
Bezout<R> xgcd(const R& a, const R& b) {
  using T = RingTraits<R>;
  R r0 = a, r1 = b;
  R s0 = T::one(), s1 = T::zero();
  R t0 = T::zero(), t1 = T::one();
  while (!T::is_zero(r1)) {
    auto [q, r] = T::divmod(r0, r1);
    R s2 = s0 - q * s1;
    R t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  auto n = T::normalize(r0);
  return {n.value, n.unit * s0, n.unit * t0};
}

template <EuclideanRing R>
R ring_gcd(const R& a, const R& b) {
  return xgcd(a, b).gcd;
}

}  // namespace stabkit

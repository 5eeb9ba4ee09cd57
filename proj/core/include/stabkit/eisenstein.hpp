#pragma once

#include <array>
#include <string>

#include "stabkit/integer.hpp"

namespace stabkit {

/// a + b*w in Z[w], w a primitive cube root of unity (w^2 + w + 1 = 0).
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(int a) : a_(a), b_(0) {}  // NOLINT
  EisensteinInt(const Integer& a) : a_(a), b_(0) {}  // NOLINT

  static EisensteinInt w() { return {Integer(0), Integer(1)}; }

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// a^2 - ab + b^2
  Integer norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  /// Complex conjugate, w -> w^2 = -1 - w.
  EisensteinInt conjugate() const { return {a_ - b_, -b_}; }

  EisensteinInt operator-() const { return {-a_, -b_}; }
  EisensteinInt& operator+=(const EisensteinInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisensteinInt& operator-=(const EisensteinInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  EisensteinInt& operator*=(const EisensteinInt& o) {
    *this = *this * o;
    return *this;
  }
  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
    Integer bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }

 private:
  Integer a_{0};
  Integer b_{0};
};

/// The six units 1, 1+w, w, -1, -1-w, -w, ordered by argument 0, pi/3, ..., 5pi/3.
const std::array<EisensteinInt, 6>& eisenstein_units();

struct EisensteinDivMod {
  EisensteinInt quotient;
  EisensteinInt remainder;
};

/// Quotient rounds the exact ratio coordinate-wise in the (1, w) basis to the
/// nearest integer, ties toward negative infinity; N(remainder) < N(den).
/// Throws ErrorKind::DivisionByZero when den is zero.
EisensteinDivMod eisenstein_divmod(const EisensteinInt& num, const EisensteinInt& den);

/// The associate with argument in [0, pi/3): equivalently 0 <= b < a.
EisensteinInt canonical_associate(const EisensteinInt& x);

std::string to_string(const EisensteinInt& x);
EisensteinInt parse_eisenstein(const std::string& text);

}  // namespace stabkit

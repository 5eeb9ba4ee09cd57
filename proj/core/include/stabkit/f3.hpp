#pragma once

#include <cstdint>
#include <string>

namespace stabkit {

/// Residue class modulo 3.
class F3 {
 public:
  constexpr F3() = default;
  constexpr F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}  // NOLINT

  constexpr int value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }
  /// x^{-1}; 1 and 2 are self-inverse mod 3.
  constexpr F3 inverse() const noexcept { return *this; }

  constexpr F3 operator-() const noexcept { return F3(3 - v_); }
  constexpr F3& operator+=(F3 o) noexcept { return *this = F3(v_ + o.v_); }
  constexpr F3& operator-=(F3 o) noexcept { return *this = F3(v_ + 3 - o.v_); }
  constexpr F3& operator*=(F3 o) noexcept { return *this = F3(v_ * o.v_); }
  friend constexpr F3 operator+(F3 a, F3 b) noexcept { return a += b; }
  friend constexpr F3 operator-(F3 a, F3 b) noexcept { return a -= b; }
  friend constexpr F3 operator*(F3 a, F3 b) noexcept { return a *= b; }
  friend constexpr bool operator==(F3 a, F3 b) noexcept { return a.v_ == b.v_; }
  friend constexpr bool operator!=(F3 a, F3 b) noexcept { return a.v_ != b.v_; }

 private:
  std::uint8_t v_ = 0;
};

inline std::string to_string(F3 x) { return std::to_string(x.value()); }

}  // namespace stabkit

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/error.hpp"
#include "stabkit/integer.hpp"

namespace stabkit {

/// Laurent polynomial sum_k c_k t^k with finitely many nonzero coefficients.
///
/// Stored densely from the lowest nonzero exponent; both ends are trimmed so
/// the zero polynomial has no coefficients at all and equality is
/// coefficient-wise.
template <class Coeff>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Coeff& c) : low_(0), coeffs_{c} { trim(); }  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Coeff(c)) {}                  // NOLINT
  LaurentPoly(std::int64_t low, std::vector<Coeff> coeffs)
      : low_(low), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LaurentPoly monomial(const Coeff& c, std::int64_t exponent) {
    return LaurentPoly(exponent, std::vector<Coeff>{c});
  }
  static LaurentPoly t() { return monomial(Coeff(1), 1); }
  static LaurentPoly from_terms(const std::map<std::int64_t, Coeff>& terms) {
    LaurentPoly out;
    for (const auto& [e, c] : terms) out += monomial(c, e);
    return out;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t low_exponent() const noexcept { return low_; }
  std::int64_t high_exponent() const noexcept {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// max exponent - min exponent; 0 for constants and for zero.
  std::int64_t degree_span() const noexcept {
    return coeffs_.empty() ? 0 : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  Coeff coefficient(std::int64_t exponent) const {
    if (coeffs_.empty() || exponent < low_ || exponent > high_exponent())
      return Coeff(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }
  const Coeff& leading() const { return coeffs_.back(); }
  const Coeff& trailing() const { return coeffs_.front(); }

  std::map<std::int64_t, Coeff> terms() const {
    std::map<std::int64_t, Coeff> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
    return out;
  }

  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly out = *this;
    if (!out.coeffs_.empty()) out.low_ += k;
    return out;
  }

  /// t -> t^{-1}
  LaurentPoly inverted() const {
    if (coeffs_.empty()) return {};
    std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-high_exponent(), std::move(rev));
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return LaurentPoly<Out>(low_, std::move(out));
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) { return accumulate(rhs, 1); }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return accumulate(rhs, -1); }
  LaurentPoly& operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
  }
  friend LaurentPoly operator*(const Coeff& c, const LaurentPoly& p) {
    return LaurentPoly(c) * p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  LaurentPoly& accumulate(const LaurentPoly& rhs, int sign) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? rhs : -rhs;
      return *this;
    }
    const std::int64_t lo = std::min(low_, rhs.low_);
    const std::int64_t hi = std::max(high_exponent(), rhs.high_exponent());
    std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(rhs.low_ - lo) + i];
      if (sign > 0)
        slot += rhs.coeffs_[i];
      else
        slot -= rhs.coeffs_[i];
    }
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  void trim() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t back = coeffs_.size();
    while (coeffs_[back - 1] == 0) --back;
    if (front > 0 || back < coeffs_.size()) {
      coeffs_ = std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(front),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(back));
      low_ += static_cast<std::int64_t>(front);
    }
  }

  std::int64_t low_ = 0;
  std::vector<Coeff> coeffs_;
};

using LaurentPolyQ = LaurentPoly<Rational>;
using IntLaurentPoly = LaurentPoly<Integer>;

struct LaurentDivMod {
  LaurentPolyQ quotient;
  LaurentPolyQ remainder;
};

/// Euclidean division in Q[t^±1] with size = degree span.
/// Throws ErrorKind::DivisionByZero when den is zero.
LaurentDivMod laurent_divmod(const LaurentPolyQ& num, const LaurentPolyQ& den);

/// Minimum exponent 0, leading coefficient 1; zero maps to zero.
LaurentPolyQ canonical_associate(const LaurentPolyQ& p);

LaurentPolyQ laurent_gcd(const LaurentPolyQ& p, const LaurentPolyQ& q);

LaurentPolyQ to_rational(const IntLaurentPoly& p);

std::string to_string(const LaurentPolyQ& p);
std::string to_string(const IntLaurentPoly& p);
LaurentPolyQ parse_laurent_q(const std::string& text);
IntLaurentPoly parse_laurent_int(const std::string& text);

}  // namespace stabkit

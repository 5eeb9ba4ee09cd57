#include <cctype>
#include <map>
#include <string>

#include "stabkit/eisenstein.hpp"
#include "stabkit/error.hpp"
#include "stabkit/laurent.hpp"
#include "stabkit/ring.hpp"

namespace stabkit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Hypothesis: return "hypothesis failure";
    case ErrorKind::Cancelled: return "cancelled";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

const char* to_string(RingTag tag) noexcept {
  switch (tag) {
    case RingTag::QLaurent: return "Q[t^±1]";
    case RingTag::Eisenstein: return "Z[w]";
    case RingTag::Integers: return "Z";
    case RingTag::F3: return "F3";
  }
  return "?";
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw Error(ErrorKind::InvalidInput, "cannot parse " + what + ": '" + text + "'");
}

// Parses sums of terms "c", "c*x", "x", "c*x^k", "x^-k" in the variable `var`.
std::map<std::int64_t, Rational> parse_terms(const std::string& raw, char var,
                                             const std::string& what) {
  const std::string s = strip(raw);
  if (s.empty()) bad(what, raw);
  std::map<std::int64_t, Rational> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad(what, raw);
    }
    first = false;
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
      num.push_back(s[i++]);
    Rational coeff = num.empty() ? Rational(1) : parse_rational(num);
    std::int64_t exponent = 0;
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) bad(what, raw);
      ++i;
      if (i >= s.size() || s[i] != var) bad(what, raw);
    }
    if (i < s.size() && s[i] == var) {
      has_var = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        if (i < s.size() && s[i] == '-') e.push_back(s[i++]);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty() || e == "-") bad(what, raw);
        exponent = std::stoll(e);
      }
    }
    if (num.empty() && !has_var) bad(what, raw);
    terms[exponent] += sign * coeff;
  }
  return terms;
}

std::string format_coeff_term(const Rational& c, std::int64_t e, const std::string& var) {
  if (e == 0) return to_string(c);
  std::string power = var;
  if (e != 1) power += "^" + std::to_string(e);
  if (c == 1) return power;
  if (c == -1) return "-" + power;
  return to_string(c) + "*" + power;
}

std::string format_terms(const std::map<std::int64_t, Rational>& terms, const std::string& var) {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (out.empty()) {
      out = format_coeff_term(c, e, var);
    } else if (c < 0) {
      out += " - " + format_coeff_term(Rational(-c), e, var);
    } else {
      out += " + " + format_coeff_term(c, e, var);
    }
  }
  return out.empty() ? "0" : out;
}

// Round p/q to the nearest integer, ties toward negative infinity.
Integer round_half_down(const Integer& p, const Integer& q) {
  // ceil(p/q - 1/2) = ceil((2p - q) / 2q) for q > 0
  Integer num = 2 * p - q;
  Integer den = 2 * q;
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  const std::string s = strip(text);
  Integer out;
  if (s.empty() || out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) bad("integer", text);
  return out;
}

Rational parse_rational(const std::string& text) {
  const std::string s = strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational out(parse_integer(s.substr(0, slash)), den);
  out.canonicalize();
  return out;
}

LaurentDivMod laurent_divmod(const LaurentPolyQ& num, const LaurentPolyQ& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by zero");
  if (num.is_zero()) return {};
  // Work with ordinary polynomials n(t), d(t) where num = t^ln n, den = t^ld d.
  const std::int64_t ln = num.low_exponent();
  const std::int64_t ld = den.low_exponent();
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() - 1 < dd) return {LaurentPolyQ(), num};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational lead_inv = Rational(1) / d.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] * lead_inv;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d[j];
  }
  rem.resize(dd);
  return {LaurentPolyQ(ln - ld, std::move(quot)), LaurentPolyQ(ln, std::move(rem))};
}

LaurentPolyQ canonical_associate(const LaurentPolyQ& p) {
  return RingTraits<LaurentPolyQ>::normalize(p).value;
}

LaurentPolyQ laurent_gcd(const LaurentPolyQ& p, const LaurentPolyQ& q) {
  return ring_gcd(p, q);
}

LaurentPolyQ to_rational(const IntLaurentPoly& p) {
  return p.map_coefficients([](const Integer& c) { return Rational(c); });
}

std::string to_string(const LaurentPolyQ& p) { return format_terms(p.terms(), "t"); }

std::string to_string(const IntLaurentPoly& p) { return to_string(to_rational(p)); }

LaurentPolyQ parse_laurent_q(const std::string& text) {
  return LaurentPolyQ::from_terms(parse_terms(text, 't', "Laurent polynomial"));
}

IntLaurentPoly parse_laurent_int(const std::string& text) {
  std::map<std::int64_t, Integer> terms;
  for (const auto& [e, c] : parse_terms(text, 't', "integral Laurent polynomial")) {
    if (c.get_den() != 1) bad("integral Laurent polynomial", text);
    terms[e] = c.get_num();
  }
  return IntLaurentPoly::from_terms(terms);
}

const std::array<EisensteinInt, 6>& eisenstein_units() {
  static const std::array<EisensteinInt, 6> units = {
      EisensteinInt(Integer(1), Integer(0)),  EisensteinInt(Integer(1), Integer(1)),
      EisensteinInt(Integer(0), Integer(1)),  EisensteinInt(Integer(-1), Integer(0)),
      EisensteinInt(Integer(-1), Integer(-1)), EisensteinInt(Integer(0), Integer(-1)),
  };
  return units;
}

EisensteinDivMod eisenstein_divmod(const EisensteinInt& num, const EisensteinInt& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "Eisenstein division by zero");
  // num / den = num * conj(den) / N(den)
  const EisensteinInt scaled = num * den.conjugate();
  const Integer n = den.norm();
  EisensteinInt q(round_half_down(scaled.a(), n), round_half_down(scaled.b(), n));
  EisensteinInt r = num - q * den;
  return {std::move(q), std::move(r)};
}

EisensteinInt canonical_associate(const EisensteinInt& x) {
  return RingTraits<EisensteinInt>::normalize(x).value;
}

std::string to_string(const EisensteinInt& x) {
  return format_terms({{0, Rational(x.a())}, {1, Rational(x.b())}}, "w");
}

EisensteinInt parse_eisenstein(const std::string& text) {
  EisensteinInt out;
  for (const auto& [e, c] : parse_terms(text, 'w', "Eisenstein integer")) {
    if (c.get_den() != 1) bad("Eisenstein integer", text);
    // w^k depends on k mod 3: 1, w, -1 - w
    const std::int64_t k = ((e % 3) + 3) % 3;
    const EisensteinInt power = k == 0 ? EisensteinInt(1)
                                : k == 1 ? EisensteinInt::w()
                                         : EisensteinInt(Integer(-1), Integer(-1));
    out += EisensteinInt(c.get_num()) * power;
  }
  return out;
}

}  // namespace stabkit

#include "koopman/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "koopman/errors.hpp"

namespace koopman {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_mpz(const std::string& s) {
  if (!is_integer_token(s)) raise(ErrorKind::Parse, "invalid integer: '" + s + "'");
  // mpz rejects a leading '+'
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Exact base-10 expansion of a decimal literal, with optional exponent.
Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

  std::string digits;
  long frac_len = 0;
  bool saw_digit = false, saw_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      saw_digit = true;
      if (saw_dot) ++frac_len;
    } else if (c == '.' && !saw_dot) {
      saw_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i == s.size()) raise(ErrorKind::Parse, "truncated exponent in '" + s + "'");
    long v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        raise(ErrorKind::Parse, "invalid exponent in '" + s + "'");
      v = v * 10 + (s[i] - '0');
      if (v > 100000) raise(ErrorKind::Parse, "exponent out of range in '" + s + "'");
    }
    exp10 = eneg ? -v : v;
  }
  if (!saw_digit || i != s.size())
    raise(ErrorKind::Parse, "invalid rational literal: '" + s + "'");

  mpz_class mantissa = digits.empty() ? mpz_class(0) : mpz_class(digits, 10);
  if (neg) mantissa = -mantissa;
  long net = exp10 - frac_len;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0) return Rational(mantissa * pow10, 1);
  return Rational(mantissa, pow10);
}

} // namespace

Rational::Rational(long n, long d) {
  if (d == 0) raise(ErrorKind::Arithmetic, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) raise(ErrorKind::Arithmetic, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  const std::string s = trimmed(text);
  if (s.empty()) raise(ErrorKind::Parse, "empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string ns = trimmed(s.substr(0, slash));
    const std::string ds = trimmed(s.substr(slash + 1));
    mpz_class n = parse_mpz(ns);
    mpz_class d = parse_mpz(ds);
    if (d == 0) raise(ErrorKind::Parse, "zero denominator in '" + text + "'");
    if (d < 0) raise(ErrorKind::Parse, "negative denominator in '" + text + "'");
    return Rational(n, d);
  }
  if (is_integer_token(s)) return Rational(parse_mpz(s), 1);
  return parse_decimal(s);
}

std::optional<Rational> Rational::try_parse(const std::string& text) {
  try {
    return parse(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

long double Rational::to_long_double() const {
  // Double-double split: d1 carries 53 bits, d2 the next 53, which covers
  // the 64-bit long double mantissa.
  const double d1 = q_.get_d();
  if (!std::isfinite(d1)) return d1;
  const double d2 = mpq_class(q_ - mpq_class(d1)).get_d();
  return static_cast<long double>(d1) + static_cast<long double>(d2);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inv() const {
  if (is_zero()) raise(ErrorKind::Arithmetic, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) raise(ErrorKind::Arithmetic, "rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace koopman

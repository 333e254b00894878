#ifndef KOOPMAN_RATIONAL_HPP
#define KOOPMAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace koopman {

/// Exact rational scalar. Always canonical: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q);

  /// Accepts "p/q", integer literals "p", and decimal literals such as
  /// "1.25" or "-3e-2" (expanded exactly in base 10).
  static Rational parse(const std::string& text);
  static std::optional<Rational> try_parse(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  long double to_long_double() const;

  Rational abs() const;
  Rational inv() const;

  /// "p" when the denominator is 1, "p/q" otherwise. parse(str()) round-trips.
  std::string str() const;

  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_;
};

} // namespace koopman

#endif

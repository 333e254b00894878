#ifndef KOOPMAN_QUADEXT_HPP
#define KOOPMAN_QUADEXT_HPP

#include <complex>
#include <string>

#include "koopman/rational.hpp"

namespace koopman {

/// Scalar in a quadratic extension Q(sqrt(D)): value = rat + rad * sqrt(radicand).
///
/// Canonical form: radicand is a squarefree integer (square factors of an
/// arbitrary rational radicand are pulled into rad, so sqrt(-24) and
/// 2*sqrt(-6) compare equal); rad == 0 forces radicand == 0 and vice versa;
/// a positive perfect-square radicand collapses to a plain rational.
/// Arithmetic requires equal radicands, except that a rational operand
/// (rad == 0) adopts the other operand's radicand.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(const Rational& r) : rat_(r) {}
  QuadExt(long n) : rat_(Rational(n)) {}
  QuadExt(const Rational& rat, const Rational& rad, const Rational& radicand);

  /// sqrt(d) in canonical form; d < 0 yields an imaginary extension.
  static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }
  const Rational& radicand() const { return radicand_; }

  bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
  bool is_rational() const { return rad_.is_zero(); }

  QuadExt conj() const { return with_same_field(rat_, -rad_); }
  /// Field norm a^2 - b^2 * D; zero only for the zero element.
  Rational norm() const { return rat_ * rat_ - rad_ * rad_ * radicand_; }

  friend QuadExt operator-(const QuadExt& a) { return a.with_same_field(-a.rat_, -a.rad_); }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

  QuadExt& operator+=(const QuadExt& b) { *this = *this + b; return *this; }
  QuadExt& operator-=(const QuadExt& b) { *this = *this - b; return *this; }
  QuadExt& operator*=(const QuadExt& b) { *this = *this * b; return *this; }
  QuadExt& operator/=(const QuadExt& b) { *this = *this / b; return *this; }

  QuadExt inv() const;

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.rat_ == b.rat_ && a.rad_ == b.rad_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  /// radicand >= 0 maps to the real line; radicand < 0 to
  /// rat + i * rad * sqrt(|radicand|) (principal branch).
  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_long() const;

  std::string str() const;

private:
  QuadExt with_same_field(const Rational& rat, const Rational& rad) const;

  Rational rat_;
  Rational rad_;
  Rational radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& v);

/// n = s^2 * f with f squarefree; returns (s, f). n must be positive.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n);

} // namespace koopman

#endif

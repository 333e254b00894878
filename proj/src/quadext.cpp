#include "koopman/quadext.hpp"

#include <cmath>
#include <ostream>

#include "koopman/errors.hpp"

namespace koopman {

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
  if (n <= 0) raise(ErrorKind::Internal, "squarefree_decompose needs n > 0");
  mpz_class s = 1, f = 1, m = n;

  auto strip = [&](const mpz_class& d) {
    unsigned long k = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++k;
    }
    if (k >= 2) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), k / 2);
      s *= p;
    }
    if (k % 2) f *= d;
  };

  strip(2);
  mpz_class d = 3;
  while (d * d <= m) {
    strip(d);
    d += 2;
    // Past small factors the cofactor is 1, p, p^2, or pq; resolve directly.
    if (d > 65536 && m > 1) {
      if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        s *= r;
        m = 1;
      } else if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
        f *= m;
        m = 1;
      }
      if (m == 1) break;
    }
  }
  if (m > 1) f *= m;
  return {s, f};
}

QuadExt::QuadExt(const Rational& rat, const Rational& rad, const Rational& radicand)
    : rat_(rat), rad_(rad), radicand_(radicand) {
  if (rad_.is_zero() || radicand_.is_zero()) {
    rad_ = Rational(0);
    radicand_ = Rational(0);
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q; pull the square part of p*q into rad.
  const int sign = radicand_.sign();
  const mpz_class p = abs(radicand_.num());
  mpz_class pq = p * radicand_.den();
  auto [sq, f] = squarefree_decompose(pq);
  rad_ = rad_ * Rational(sq, radicand_.den());
  if (f == 1 && sign > 0) {
    rat_ += rad_;
    rad_ = Rational(0);
    radicand_ = Rational(0);
    return;
  }
  radicand_ = Rational(sign > 0 ? f : mpz_class(-f), 1);
}

QuadExt QuadExt::with_same_field(const Rational& rat, const Rational& rad) const {
  QuadExt out;
  out.rat_ = rat;
  out.rad_ = rad;
  out.radicand_ = rad.is_zero() ? Rational(0) : radicand_;
  return out;
}

namespace {

// The shared radicand of two canonical operands, or an error.
Rational merged_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.radicand() == b.radicand()) return a.radicand();
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  raise(ErrorKind::Domain, "incompatible radicands: sqrt(" + a.radicand().str() +
                               ") vs sqrt(" + b.radicand().str() + ")");
}

} // namespace

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  const Rational D = merged_radicand(a, b);
  return QuadExt(a.rat() + b.rat(), a.rad() + b.rad(), D);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  const Rational D = merged_radicand(a, b);
  return QuadExt(a.rat() - b.rat(), a.rad() - b.rad(), D);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  const Rational D = merged_radicand(a, b);
  // (r1 + s1 sqrt(D))(r2 + s2 sqrt(D)) = r1 r2 + s1 s2 D + (r1 s2 + s1 r2) sqrt(D)
  return QuadExt(a.rat() * b.rat() + a.rad() * b.rad() * D,
                 a.rat() * b.rad() + a.rad() * b.rat(), D);
}

QuadExt QuadExt::inv() const {
  if (is_zero()) raise(ErrorKind::Arithmetic, "inverse of zero");
  if (is_rational()) return QuadExt(rat_.inv());
  // (u + v sqrt(D))^-1 = (u - v sqrt(D)) / (u^2 - v^2 D)
  const Rational n = norm();
  if (n.is_zero()) raise(ErrorKind::Internal, "zero norm for nonzero element");
  return with_same_field(rat_ / n, -rad_ / n);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  if (b.is_zero()) raise(ErrorKind::Arithmetic, "division by zero");
  merged_radicand(a, b);
  return a * b.inv();
}

std::complex<double> QuadExt::to_complex() const {
  const auto v = to_complex_long();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<long double> QuadExt::to_complex_long() const {
  const long double r = rat_.to_long_double();
  if (rad_.is_zero()) return {r, 0.0L};
  const long double root = std::sqrt(std::fabs(radicand_.to_long_double()));
  const long double w = rad_.to_long_double() * root;
  if (radicand_.sign() < 0) return {r, w};
  return {r + w, 0.0L};
}

std::string QuadExt::str() const {
  if (rad_.is_zero()) return rat_.str();
  std::string root = "sqrt(" + radicand_.str() + ")";
  std::string radpart;
  if (rad_ == Rational(1))
    radpart = root;
  else if (rad_ == Rational(-1))
    radpart = "-" + root;
  else
    radpart = rad_.str() + "*" + root;
  if (rat_.is_zero()) return radpart;
  if (rad_.sign() > 0) return rat_.str() + " + " + radpart;
  // negative rad: render "a - |b|*sqrt(D)"
  const Rational mag = rad_.abs();
  if (mag == Rational(1)) return rat_.str() + " - " + root;
  return rat_.str() + " - " + mag.str() + "*" + root;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& v) {
  return os << v.str();
}

} // namespace koopman

#ifndef KOOPMAN_SCALAR_HPP
#define KOOPMAN_SCALAR_HPP

#include <complex>

#include "koopman/quadext.hpp"
#include "koopman/rational.hpp"

namespace koopman {

// Shared scalar contract for polynomial coefficients: Rational and QuadExt
// give the exact instantiations, std::complex the numeric ones.

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const QuadExt& v) { return v.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0); }
inline bool scalar_is_zero(const std::complex<long double>& v) { return v == std::complex<long double>(0.0L); }

template <class S>
S scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) { return r; }
template <>
inline QuadExt scalar_from_rational<QuadExt>(const Rational& r) { return QuadExt(r); }
template <>
inline std::complex<double> scalar_from_rational<std::complex<double>>(const Rational& r) {
  return {r.to_double(), 0.0};
}
template <>
inline std::complex<long double> scalar_from_rational<std::complex<long double>>(const Rational& r) {
  return {r.to_long_double(), 0.0L};
}

template <class S>
S scalar_zero() { return scalar_from_rational<S>(Rational(0)); }
template <class S>
S scalar_one() { return scalar_from_rational<S>(Rational(1)); }

} // namespace koopman

#endif

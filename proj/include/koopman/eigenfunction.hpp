#ifndef KOOPMAN_EIGENFUNCTION_HPP
#define KOOPMAN_EIGENFUNCTION_HPP

#include <complex>

#include "koopman/bipoly.hpp"
#include "koopman/quadext.hpp"

namespace koopman {

/// phi(x, y) = (c0 + c1 x + c2 y) / (d0 + d1 x + d2 y).
template <class S>
struct RationalEigenfunction {
  S c0 = scalar_zero<S>(), c1 = scalar_zero<S>(), c2 = scalar_zero<S>();
  S d0 = scalar_zero<S>(), d1 = scalar_zero<S>(), d2 = scalar_zero<S>();

  bool numerator_trivial() const {
    return scalar_is_zero(c0) && scalar_is_zero(c1) && scalar_is_zero(c2);
  }
  bool denominator_trivial() const {
    return scalar_is_zero(d0) && scalar_is_zero(d1) && scalar_is_zero(d2);
  }

  BivariatePoly<S> numerator_poly() const {
    BivariatePoly<S> p;
    p.add_term(0, 0, c0);
    p.add_term(1, 0, c1);
    p.add_term(0, 1, c2);
    return p;
  }

  BivariatePoly<S> denominator_poly() const {
    BivariatePoly<S> p;
    p.add_term(0, 0, d0);
    p.add_term(1, 0, d1);
    p.add_term(0, 1, d2);
    return p;
  }

  friend bool operator==(const RationalEigenfunction& a, const RationalEigenfunction& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2 &&
           a.d0 == b.d0 && a.d1 == b.d1 && a.d2 == b.d2;
  }
};

template <class S>
struct Eigenpair {
  S lambda = scalar_zero<S>();
  RationalEigenfunction<S> ef;
};

using ExactEigenfunction = RationalEigenfunction<QuadExt>;
using ExactEigenpair = Eigenpair<QuadExt>;
using ComplexEigenfunction = RationalEigenfunction<std::complex<double>>;
using ComplexEigenpair = Eigenpair<std::complex<double>>;

inline ComplexEigenfunction complexify(const ExactEigenfunction& ef) {
  return {ef.c0.to_complex(), ef.c1.to_complex(), ef.c2.to_complex(),
          ef.d0.to_complex(), ef.d1.to_complex(), ef.d2.to_complex()};
}

inline ComplexEigenpair complexify(const ExactEigenpair& p) {
  return {p.lambda.to_complex(), complexify(p.ef)};
}

} // namespace koopman

#endif

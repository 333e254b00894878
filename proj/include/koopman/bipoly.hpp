#ifndef KOOPMAN_BIPOLY_HPP
#define KOOPMAN_BIPOLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "koopman/errors.hpp"
#include "koopman/scalar.hpp"

namespace koopman {

/// Exponent pair of one monomial x^dx * y^dy.
struct Monomial {
  int dx = 0;
  int dy = 0;

  int degree() const { return dx + dy; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.dx == b.dx && a.dy == b.dy;
  }
};

/// Graded lex order with x before y: 1 < y < x < y^2 < xy < x^2 < ...
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.dx < b.dx;
  }
};

/// Sparse bivariate polynomial; never stores zero coefficients.
template <class S>
class BivariatePoly {
public:
  using TermMap = std::map<Monomial, S, MonomialLess>;

  BivariatePoly() = default;

  static BivariatePoly constant(const S& c) {
    BivariatePoly p;
    p.add_term(0, 0, c);
    return p;
  }

  static BivariatePoly term(const S& c, int dx, int dy) {
    BivariatePoly p;
    p.add_term(dx, dy, c);
    return p;
  }

  void add_term(int dx, int dy, const S& c) {
    if (scalar_is_zero(c)) return;
    const Monomial m{dx, dy};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  S coeff(int dx, int dy) const {
    auto it = terms_.find(Monomial{dx, dy});
    return it == terms_.end() ? scalar_zero<S>() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m.dx, m.dy, c);
    return out;
  }

  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m.dx, m.dy, scalar_zero<S>() - c);
    return out;
  }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(ma.dx + mb.dx, ma.dy + mb.dy, ca * cb);
    return out;
  }

  BivariatePoly scaled(const S& k) const {
    BivariatePoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.dx, m.dy, c * k);
    return out;
  }

  BivariatePoly diff_x() const {
    BivariatePoly out;
    for (const auto& [m, c] : terms_)
      if (m.dx > 0) out.add_term(m.dx - 1, m.dy, c * scalar_from_rational<S>(Rational(m.dx)));
    return out;
  }

  BivariatePoly diff_y() const {
    BivariatePoly out;
    for (const auto& [m, c] : terms_)
      if (m.dy > 0) out.add_term(m.dx, m.dy - 1, c * scalar_from_rational<S>(Rational(m.dy)));
    return out;
  }

  S eval(const S& x, const S& y) const {
    S acc = scalar_zero<S>();
    for (const auto& [m, c] : terms_) acc += c * ipow(x, m.dx) * ipow(y, m.dy);
    return acc;
  }

  /// p(x + sx, y + sy), expanded by binomials.
  BivariatePoly shifted(const S& sx, const S& sy) const {
    const BivariatePoly px = term(scalar_one<S>(), 1, 0) + constant(sx);
    const BivariatePoly py = term(scalar_one<S>(), 0, 1) + constant(sy);
    BivariatePoly out;
    for (const auto& [m, c] : terms_) {
      BivariatePoly t = constant(c);
      for (int i = 0; i < m.dx; ++i) t = t * px;
      for (int j = 0; j < m.dy; ++j) t = t * py;
      out = out + t;
    }
    return out;
  }

  /// Deterministic rendering, highest monomial first (graded lex, x before y).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << render_coeff(it->second) << ")";
      if (it->first.dx == 1) os << "*x";
      if (it->first.dx > 1) os << "*x^" << it->first.dx;
      if (it->first.dy == 1) os << "*y";
      if (it->first.dy > 1) os << "*y^" << it->first.dy;
    }
    return os.str();
  }

private:
  static S ipow(const S& v, int e) {
    S acc = scalar_one<S>();
    for (int i = 0; i < e; ++i) acc *= v;
    return acc;
  }

  static std::string render_coeff(const Rational& c) { return c.str(); }
  static std::string render_coeff(const QuadExt& c) { return c.str(); }
  template <class F>
  static std::string render_coeff(const std::complex<F>& c) {
    std::ostringstream os;
    os << static_cast<double>(c.real());
    if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << static_cast<double>(c.imag()) << "i";
    return os.str();
  }

  TermMap terms_;
};

} // namespace koopman

#endif

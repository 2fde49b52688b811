#pragma once

// The p-jet delta function
//
//   delta_p(x, y) = sum_{|m|<=p} (-1)^{|m|} / m! x^m d_m delta(y)
//
// never exists as a runtime value. Integrals against it are evaluated with
// the pairing rule  \int P(y) d_m delta(y) dy = (-1)^{|m|} (d_m P)(0).

#include <utility>

#include "jetvir/poly.hpp"

namespace jetvir::deltacalc {

/// Derivative decoration on a delta factor: d^x_mu or d^y_mu.
struct DerivSpec {
  enum Which { none, on_x, on_y };
  Which which = none;
  int mu = 0;

  static DerivSpec plain() { return {}; }
  static DerivSpec x(int mu) { return {on_x, mu}; }
  static DerivSpec y(int mu) { return {on_y, mu}; }
  friend bool operator==(const DerivSpec&, const DerivSpec&) = default;
};

/// Shifted slots integrate f(x) - f(0) instead of f.
enum class SmearMode { plain, shifted };
using SmearModes = std::pair<SmearMode, SmearMode>;

void validate(const DerivSpec& deriv, int d);

/// \int f(y) [D delta_p(x, y)] dy as a polynomial in x, by expanding delta_p.
/// plain gives f|_p, on_y gives -(d_mu f)|_p and on_x gives (d_mu f)|_{p-1}:
/// the x-derivative lowers the degree of every x^m.
Poly smear(const Poly& f, const DerivSpec& deriv, int d, int p);

/// \iint f(x) g(y) [D1 delta_p(x, y)] [D2 delta_p(y, x)] dx dy, expanded as a
/// finite double sum over |m|, |n| <= p. Shifted slots are shifted here.
Rational delta_pair_integral(const Poly& f, const Poly& g, const DerivSpec& d1, const DerivSpec& d2,
                             SmearModes modes, int d, int p);

enum class PairCase { i, ii, iii };

/// Closed forms of the three pair products:
///   i   A f(0) g(0)                                 (no derivatives)
///   ii  B d_mu f(0) g(0)                            (d^x_mu on the first factor, f shifted)
///   iii E d_nu f d_mu g + D d_mu f d_nu g at 0      (d^x_mu, d^y_nu; both shifted)
/// Case iii is covariant and also holds for mu == nu, where E + D = C.
Rational delta_pair_closed(PairCase c, const Poly& f, const Poly& g, int mu, int nu, int d, int p);

/// Decorations and smearing modes under which delta_pair_integral reduces to
/// the closed form of the given case.
struct PairSetup {
  DerivSpec d1;
  DerivSpec d2;
  SmearModes modes;
};
PairSetup pair_setup(PairCase c, int mu, int nu);

}  // namespace jetvir::deltacalc

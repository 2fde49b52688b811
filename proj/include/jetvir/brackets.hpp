#pragma once

// Lie brackets of the classical data: vector fields, g-valued functions and
// the action of vector fields on g-valued functions. Templated over the
// coefficient ring so the same code serves plain polynomials and polynomials
// with Laurent coefficients in z.
//
// Real form: the Hermitian convention i f^{abc} is replaced by real structure constants
// f^{abc} with [M^a, M^b] = f^{abc} M^c, so [X, Y]^c = f^{abc} X^a Y^b.

#include <stdexcept>
#include <vector>

#include "jetvir/poly.hpp"

namespace jetvir {

struct StructureConstants {
  int dim = 1;
  /// f[(a * dim + b) * dim + c]
  std::vector<Rational> f;

  const Rational& operator()(int a, int b, int c) const { return f[(a * dim + b) * dim + c]; }

  /// One-dimensional abelian algebra.
  static StructureConstants abelian(int dim = 1);
  /// so(3) with f^{abc} = epsilon^{abc}.
  static StructureConstants so3();

  bool totally_antisymmetric() const;
  bool satisfies_jacobi() const;
};

template <typename C>
using FieldVector = std::vector<PolyT<C>>;

namespace detail {
template <typename C>
void require_dims(const FieldVector<C>& v, std::size_t n, int d, const char* what) {
  if (v.size() != n) throw DimensionMismatch(std::string(what) + ": wrong number of components");
  for (const auto& c : v)
    if (c.dim() != d) throw DimensionMismatch(std::string(what) + ": component dimension mismatch");
}
}  // namespace detail

/// xi^mu d_mu f
template <typename C>
PolyT<C> directional(const FieldVector<C>& xi, const PolyT<C>& f) {
  const int d = f.dim();
  detail::require_dims(xi, static_cast<std::size_t>(d), d, "directional derivative");
  PolyT<C> out(d);
  for (int mu = 0; mu < d; ++mu) out += multiply(xi[mu], derive(f, mu));
  return out;
}

/// d_mu xi^mu
template <typename C>
PolyT<C> divergence(const FieldVector<C>& xi, int d) {
  detail::require_dims(xi, static_cast<std::size_t>(d), d, "divergence");
  PolyT<C> out(d);
  for (int mu = 0; mu < d; ++mu) out += derive(xi[mu], mu);
  return out;
}

/// [xi, eta]^nu = xi^mu d_mu eta^nu - eta^mu d_mu xi^nu
template <typename C>
FieldVector<C> vector_bracket(const FieldVector<C>& xi, const FieldVector<C>& eta, int d) {
  detail::require_dims(xi, static_cast<std::size_t>(d), d, "vector bracket");
  detail::require_dims(eta, static_cast<std::size_t>(d), d, "vector bracket");
  FieldVector<C> out;
  for (int nu = 0; nu < d; ++nu) out.push_back(directional(xi, eta[nu]) - directional(eta, xi[nu]));
  return out;
}

/// [X, Y]^c = f^{abc} X^a Y^b
template <typename C>
FieldVector<C> gauge_bracket(const FieldVector<C>& x, const FieldVector<C>& y, const StructureConstants& f, int d) {
  detail::require_dims(x, static_cast<std::size_t>(f.dim), d, "gauge bracket");
  detail::require_dims(y, static_cast<std::size_t>(f.dim), d, "gauge bracket");
  FieldVector<C> out(f.dim, PolyT<C>(d));
  for (int a = 0; a < f.dim; ++a)
    for (int b = 0; b < f.dim; ++b) {
      if (x[a].is_zero() || y[b].is_zero()) continue;
      PolyT<C> xy = multiply(x[a], y[b]);
      for (int c = 0; c < f.dim; ++c)
        if (sgn(f(a, b, c)) != 0) out[c] += xy * f(a, b, c);
    }
  return out;
}

/// xi^mu d_mu X^a: a g-valued function transported as a scalar.
template <typename C>
FieldVector<C> scalar_action(const FieldVector<C>& xi, const FieldVector<C>& x, int d) {
  detail::require_dims(xi, static_cast<std::size_t>(d), d, "scalar action");
  FieldVector<C> out;
  for (const auto& xa : x) out.push_back(directional(xi, xa));
  return out;
}

/// xi X = xi^mu d_mu X + d_mu xi^mu X: the weight-one density law.
template <typename C>
FieldVector<C> density_action(const FieldVector<C>& xi, const FieldVector<C>& x, int d) {
  PolyT<C> div = divergence(xi, d);
  FieldVector<C> out;
  for (const auto& xa : x) out.push_back(directional(xi, xa) + multiply(div, xa));
  return out;
}

}  // namespace jetvir

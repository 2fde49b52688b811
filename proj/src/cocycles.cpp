#include "jetvir/cocycles.hpp"

#include <stdexcept>

namespace jetvir::cocycles {

namespace {

int dim_of(const Trajectory& q) {
  if (q.empty()) throw std::invalid_argument("cocycle: trajectory needs at least one component");
  return static_cast<int>(q.size());
}

void check_vector(const VectorFieldSpec& xi, int d) {
  if (static_cast<int>(xi.size()) != d) throw DimensionMismatch("cocycle: vector field needs d components");
  for (const auto& c : xi)
    if (c.dim() != d) throw DimensionMismatch("cocycle: vector field component dimension differs from d");
}

void check_gauge(const GaugeFieldSpec& x, int d, int privileged) {
  if (x.empty()) throw std::invalid_argument("cocycle: gauge function needs at least one component");
  if (privileged < 0 || privileged >= static_cast<int>(x.size()))
    throw std::invalid_argument("cocycle: privileged direction out of range");
  for (const auto& c : x)
    if (c.dim() != d) throw DimensionMismatch("cocycle: gauge component dimension differs from d");
}

LaurentPoly along(const FieldPoly& f, const Trajectory& q) { return compose_with_trajectory(f, q); }
LaurentPoly rate(const FieldPoly& f, const Trajectory& q) { return along(f, q).derivative(); }

}  // namespace

VectorFieldSpec bracket_vect(const VectorFieldSpec& xi, const VectorFieldSpec& eta, int d) {
  return vector_bracket(xi, eta, d);
}

GaugeFieldSpec bracket_gauge(const GaugeFieldSpec& x, const GaugeFieldSpec& y, const StructureConstants& f, int d) {
  return gauge_bracket(x, y, f, d);
}

ReparamSpec bracket_rep(const ReparamSpec& f, const ReparamSpec& g) { return f * g.derivative() - g * f.derivative(); }

GaugeFieldSpec density_action(const VectorFieldSpec& xi, const GaugeFieldSpec& x, int d) {
  return jetvir::density_action(xi, x, d);
}

Rational virasoro_cocycle(const VectorFieldSpec& xi, const VectorFieldSpec& eta, const Trajectory& q,
                          const Rational& c1, const Rational& c2) {
  const int d = dim_of(q);
  check_vector(xi, d);
  check_vector(eta, d);
  LaurentPoly integrand;
  if (sgn(c1) != 0) {
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) {
        FieldPoly dxi = derive(xi[mu], nu);
        FieldPoly deta = derive(eta[nu], mu);
        if (dxi.is_zero() || deta.is_zero()) continue;
        integrand += c1 * (rate(dxi, q) * along(deta, q));
      }
  }
  if (sgn(c2) != 0) integrand += c2 * (rate(divergence(xi, d), q) * along(divergence(eta, d), q));
  return -integrand.residue();
}

Rational affine_cocycle(const GaugeFieldSpec& x, const GaugeFieldSpec& y, const Trajectory& q, const Rational& c5,
                        const Rational& c8, int privileged) {
  const int d = dim_of(q);
  check_gauge(x, d, privileged);
  check_gauge(y, d, privileged);
  if (x.size() != y.size()) throw DimensionMismatch("affine cocycle: X and Y live in different algebras");
  LaurentPoly integrand;
  if (sgn(c5) != 0)
    for (std::size_t a = 0; a < x.size(); ++a) integrand += c5 * (rate(x[a], q) * along(y[a], q));
  if (sgn(c8) != 0) integrand += c8 * (rate(x[privileged], q) * along(y[privileged], q));
  return integrand.residue();
}

Rational mixed_cocycle(const VectorFieldSpec& xi, const GaugeFieldSpec& x, const Trajectory& q, const Rational& c7,
                       int privileged) {
  const int d = dim_of(q);
  check_vector(xi, d);
  check_gauge(x, d, privileged);
  return c7 * (rate(divergence(xi, d), q) * along(x[privileged], q)).residue();
}

Rational reparam_cocycle(const ReparamSpec& f, const ReparamSpec& g, const Rational& c4) {
  const Rational k = -c4 / 12;
  return k * (f.derivative().derivative() * g.derivative()).residue();
}

Rational reparam_vector_cocycle(const ReparamSpec& f, const VectorFieldSpec& xi, const Trajectory& q,
                                const Rational& c3) {
  const int d = dim_of(q);
  check_vector(xi, d);
  const Rational k = -c3 / 2;
  return k * (f.derivative().derivative() * along(divergence(xi, d), q)).residue();
}

Rational reparam_current_cocycle(const ReparamSpec& f, const GaugeFieldSpec& x, const Trajectory& q,
                                 const Rational& c6, int privileged) {
  const int d = dim_of(q);
  check_gauge(x, d, privileged);
  const Rational k = -c6 / 2;
  return k * (f.derivative().derivative() * along(x[privileged], q)).residue();
}

std::string AntisymmetryReport::str() const {
  return "Z(a,b) = " + forward.get_str() + ", Z(b,a) = " + backward.get_str();
}

AntisymmetryReport antisymmetry_check(CocycleKind kind, const CocycleArgs& args, const Trajectory& q) {
  AntisymmetryReport r;
  if (kind == CocycleKind::virasoro) {
    r.forward = virasoro_cocycle(args.a, args.b, q, args.first, args.second);
    r.backward = virasoro_cocycle(args.b, args.a, q, args.first, args.second);
  } else {
    r.forward = affine_cocycle(args.a, args.b, q, args.first, args.second);
    r.backward = affine_cocycle(args.b, args.a, q, args.first, args.second);
  }
  return r;
}

}  // namespace jetvir::cocycles

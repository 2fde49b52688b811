#pragma once

// Residue-form extension terms of the brackets of L_xi, J_X and T_f along a
// Laurent trajectory q(z). Contour integrals are residues with the 1/(2 pi i)
// absorbed.
//
// Vector and gauge data may carry Laurent coefficients in z. The factor
// q-dot^rho d_rho F(q(z)) is then read as the total derivative
// d/dz F(q(z), z), which agrees with it for z-independent data and keeps
// every cocycle antisymmetric.

#include <string>
#include <vector>

#include "jetvir/brackets.hpp"
#include "jetvir/poly.hpp"

namespace jetvir::cocycles {

using VectorFieldSpec = std::vector<FieldPoly>;
using GaugeFieldSpec = std::vector<FieldPoly>;
using ReparamSpec = LaurentPoly;
using Trajectory = LaurentVector;

VectorFieldSpec bracket_vect(const VectorFieldSpec& xi, const VectorFieldSpec& eta, int d);
GaugeFieldSpec bracket_gauge(const GaugeFieldSpec& x, const GaugeFieldSpec& y, const StructureConstants& f, int d);
/// [f, g] = f g-dot - g f-dot
ReparamSpec bracket_rep(const ReparamSpec& f, const ReparamSpec& g);
/// xi X = xi^mu d_mu X + d_mu xi^mu X
GaugeFieldSpec density_action(const VectorFieldSpec& xi, const GaugeFieldSpec& x, int d);

/// -Res q-dot^rho (c1 d_rho d_nu xi^mu d_mu eta^nu + c2 d_rho d.xi d.eta) at q(z).
Rational virasoro_cocycle(const VectorFieldSpec& xi, const VectorFieldSpec& eta, const Trajectory& q,
                          const Rational& c1, const Rational& c2);

/// +Res q-dot^rho (c5 d_rho X^a Y^a + c8 delta^a d_rho X^a delta^b Y^b).
Rational affine_cocycle(const GaugeFieldSpec& x, const GaugeFieldSpec& y, const Trajectory& q, const Rational& c5,
                        const Rational& c8, int privileged = 0);

/// +c7 Res q-dot^rho d_rho d.xi delta^a X^a, the extension of [L_xi, J_X].
Rational mixed_cocycle(const VectorFieldSpec& xi, const GaugeFieldSpec& x, const Trajectory& q, const Rational& c7,
                       int privileged = 0);

/// -(c4 / 12) Res f-ddot g-dot, the extension of [T_f, T_g].
Rational reparam_cocycle(const ReparamSpec& f, const ReparamSpec& g, const Rational& c4);
/// -(c3 / 2) Res f-ddot d.xi(q), the extension of [T_f, L_xi].
Rational reparam_vector_cocycle(const ReparamSpec& f, const VectorFieldSpec& xi, const Trajectory& q,
                                const Rational& c3);
/// -(c6 / 2) Res f-ddot delta^a X^a(q), the extension of [T_f, J_X].
Rational reparam_current_cocycle(const ReparamSpec& f, const GaugeFieldSpec& x, const Trajectory& q,
                                 const Rational& c6, int privileged = 0);

/// On f = z^{m+1}, g = z^{1-m} the T-T cocycle equals
/// -(c4/12)(m^3 - m) * kVirasoroOrientation. With the residue conventions
/// above the sign is -1; m = 2 gives +c4/2.
inline constexpr int kVirasoroOrientation = -1;

enum class CocycleKind { virasoro, affine };

struct CocycleArgs {
  std::vector<FieldPoly> a;
  std::vector<FieldPoly> b;
  Rational first;   ///< c1 or c5
  Rational second;  ///< c2 or c8
};

struct AntisymmetryReport {
  Rational forward;
  Rational backward;
  bool passed() const { return sgn(forward + backward) == 0; }
  std::string str() const;
};

/// Evaluates Z(a, b) and Z(b, a); they must cancel exactly.
AntisymmetryReport antisymmetry_check(CocycleKind kind, const CocycleArgs& args, const Trajectory& q);

}  // namespace jetvir::cocycles

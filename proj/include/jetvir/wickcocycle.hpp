#pragma once

// Double Wick contractions of normal-ordered bilinears over the jet space.
//
// A bilinear term is  prefactor * :pi(x,z) f(x) Ins phi(x,z):  integrated
// over x, where Ins is a matrix on rho (gl(d)) tensor M (g). Contracting
// :A(z): with :B(w): twice pairs A's phi with B's pi and A's pi with B's phi,
// leaving a product of two jet delta functions that deltacalc integrates.
// Extension coefficients are read off per pole order in (z - w), with the
// observer's position q placed at the origin.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetvir/charges.hpp"
#include "jetvir/deltacalc.hpp"
#include "jetvir/poly.hpp"

namespace jetvir::wick {

using deltacalc::DerivSpec;
using deltacalc::SmearMode;

enum class FieldKind { pi, phi };

struct FieldFactor {
  FieldKind kind = FieldKind::pi;
  /// Number of z-derivatives, 0 or 1.
  int z_dots = 0;
  /// Spatial derivative direction on phi, or -1.
  int deriv = -1;

  static FieldFactor pi(int dots = 0) { return {FieldKind::pi, dots, -1}; }
  static FieldFactor phi(int dots = 0, int deriv = -1) { return {FieldKind::phi, dots, deriv}; }
};

/// Which jet delta a contraction produces: delta_p(x, y) or delta_p(y, x),
/// with x the position of the first factor.
enum class Orientation { xy, yx };

struct Propagator {
  Rational sign;
  int pole_order = 1;
  Orientation orientation = Orientation::xy;
  DerivSpec deriv;
};

/// Contraction of a(x, z) with b(y, w):
///   phi pi -> +1/(z-w) delta_p(x,y),   pi phi -> -+1/(z-w) delta_p(y,x),
/// each z-dot raising the pole order; n dots on a and m on b multiply the
/// residue by (-1)^n (n+m)!. Throws std::invalid_argument unless exactly one
/// factor is pi, or when z_dots > 1.
Propagator propagator(const FieldFactor& a, const FieldFactor& b, Statistics s);

/// Matrix insertion between pi and phi.
struct Insertion {
  enum Kind { identity, gl, g };
  Kind kind = identity;
  /// gl: T^upper_lower. g: M^upper.
  int upper = 0;
  int lower = 0;

  static Insertion I() { return {identity, 0, 0}; }
  static Insertion T(int upper, int lower) { return {gl, upper, lower}; }
  static Insertion M(int a) { return {g, a, 0}; }
};

struct RepTraces {
  GlRepTraces gl;
  GRepTraces g;
  /// Index of the privileged g direction, delta^a = [a == privileged].
  int privileged = 0;
};

/// tr over rho tensor M of the product of two insertions.
Rational trace(const Insertion& a, const Insertion& b, const RepTraces& t);

struct BilinearTerm {
  Rational prefactor{1};
  Poly coeff;
  SmearMode mode = SmearMode::plain;
  FieldFactor left = FieldFactor::pi();
  Insertion insertion;
  FieldFactor right = FieldFactor::phi();
};

/// The :xi^mu(q) p_mu: and :q-dot p: pieces, which contract through the
/// observer's (q, p) pair rather than the jet fields.
struct QSector {
  enum Kind { none, vector, reparam };
  Kind kind = none;
  std::vector<Poly> xi;
};

struct NormalBilinear {
  int d = 1;
  std::vector<BilinearTerm> terms;
  QSector q;
};

/// Pole order -> coefficient of (z - w)^{-order}.
using PoleExpansion = std::map<int, Rational>;

Rational coefficient(const PoleExpansion& e, int order);

struct ContractionOptions {
  bool field_sector = true;
  bool q_sector = true;
};

/// All double contractions of A(z) B(w). The q sector uses the closed rules
///   (L_xi, L_eta): order 2, -d_nu xi^mu(0) d_mu eta^nu(0)
///   (T, L_xi):     order 3, d_mu xi^mu(0)
///   (T, T):        order 4, d
/// and throws std::invalid_argument for any other pair of tagged operators.
PoleExpansion double_contraction(const NormalBilinear& a, const NormalBilinear& b, const RepTraces& traces, int d,
                                 int p, const ContractionOptions& opts = {});

enum GeneratorPart : unsigned {
  kTransport = 1,  ///< (xi^mu(x) - xi^mu(0)) pi d_mu phi, shifted smearing
  kRotation = 2,   ///< d_nu xi^mu(x) pi T^nu_mu phi
  kObserver = 4,   ///< xi^mu(q) p_mu
  kAllParts = 7,
};

/// J_X = \int :pi X^a(x) M^a phi:.
NormalBilinear current_generator(const std::vector<Poly>& x, int d);
/// L_xi, restricted to the selected parts.
NormalBilinear vector_generator(const std::vector<Poly>& xi, int d, unsigned parts = kAllParts);
/// T = (lambda - 1) :pi phi-dot: + lambda :pi-dot phi:, plus the observer term.
NormalBilinear reparam_generator(const Rational& lambda, int d, bool observer = true);

enum class GeneratorKind { current, vector, reparam };

struct GeneratorData {
  std::vector<Poly> field;  ///< X^a or xi^mu
  Rational lambda;
};

NormalBilinear build_generator(GeneratorKind kind, const GeneratorData& data, int d);

/// Charges measured by the engine. In one dimension the two Vir(d) channels
/// coincide, so only c1 + c2 is measured there.
struct MeasuredCharges {
  int d = 1;
  int p = 0;
  Rational lambda;
  std::array<std::optional<Rational>, 8> c;
  std::optional<Rational> c1_plus_c2;
  /// Largest pole order seen across all contractions.
  int max_pole = 0;
  /// Pole orders above 3 appeared outside the T-T channel.
  bool stray_quartic = false;

  const std::optional<Rational>& operator[](int i) const { return c[i - 1]; }
};

class SingularProbe : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Measures the charges with probe fields that isolate each channel; the
/// g-index space is two-dimensional with direction 0 privileged.
MeasuredCharges extract_charges(int d, int p, const Rational& lambda, const RepTraces& traces);

/// Mismatches between measured and closed-form charges, empty when they agree.
std::vector<std::string> compare(const MeasuredCharges& m, const ChargeSet& closed);

}  // namespace jetvir::wick

#pragma once

// Closed-form abelian charges c1..c8 and the representation-trace parameters
// they depend on. Upper signs in the formulas belong to bosonic fields.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "jetvir/rational.hpp"

namespace jetvir {

enum class Statistics { bose, fermi };

const char* name(Statistics s);
Statistics parse_statistics(std::string_view text);
/// +1 for bose, -1 for fermi.
inline int sign(Statistics s) { return s == Statistics::bose ? 1 : -1; }

/// Traces over the gl(d) representation rho:
///   tr 1 = delta_rho, tr T^mu_nu = k0 delta^mu_nu,
///   tr T^mu_rho T^nu_sigma = k1 delta^mu_sigma delta^nu_rho + k2 delta^mu_rho delta^nu_sigma.
struct GlRepTraces {
  long delta_rho = 1;
  Rational k0;
  Rational k1;
  Rational k2;
  /// Set when built from a density weight and an sl(d) Casimir.
  std::optional<Rational> kappa;
  std::optional<Rational> y_rho;

  void validate() const;
};

/// k0 = kappa delta_rho, k1 = y_rho, k2 = kappa^2 delta_rho - y_rho / d.
GlRepTraces from_sl_gl1(const Rational& kappa, const Rational& y_rho, long delta_rho, int d);

/// Traces over the g representation M:
///   tr 1 = delta_m, tr M^a = z_m delta^a, tr M^a M^b = y_m delta^ab + w_m delta^a delta^b.
struct GRepTraces {
  long delta_m = 1;
  Rational y_m;
  Rational z_m;
  Rational w_m;
  Statistics statistics = Statistics::bose;

  void validate() const;
};

struct ChargeSet {
  int d = 1;
  int p = 0;
  Rational lambda;
  GlRepTraces gl;
  GRepTraces g;
  /// c[0] = c1, ..., c[7] = c8.
  std::array<Rational, 8> c;

  const Rational& operator[](int i) const { return c[i - 1]; }
  Rational& operator[](int i) { return c[i - 1]; }
};

/// The eight charges for fields of conformal weight lambda.
ChargeSet closed_form(int d, int p, const Rational& lambda, const GlRepTraces& gl, const GRepTraces& g);

/// Level of the affine algebra in one dimension: -+ (p + 1) y_m.
Rational kac_moody_level(int p, const Rational& y_m, Statistics s);

/// JSON object {inputs: {...}, charges: {c1: "n/d", ...}}; rationals are
/// always "num/den" strings.
std::string to_json(const ChargeSet& cs, int indent = 2);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
ChargeSet charges_from_json(std::string_view text);

}  // namespace jetvir

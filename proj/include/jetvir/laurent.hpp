#pragma once

// Laurent polynomials in the contour variable z. Contour integrals reduce to
// residues: (1/2 pi i) \oint dz L(z) is the z^{-1} coefficient of L.

#include <map>
#include <string>
#include <vector>

#include "jetvir/rational.hpp"

namespace jetvir {

/// Largest |exponent| tolerated by composition before failing fast.
/// Default 64; the JETVIR_MAX_DEGREE environment variable overrides it.
int default_degree_cap();

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT: constants promote
  static LaurentPoly monomial(int exponent, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  void add_term(int exponent, const Rational& c);
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  LaurentPoly& operator*=(const LaurentPoly& o);

  /// d/dz
  LaurentPoly derivative() const;
  /// Coefficient of z^{-1}.
  Rational residue() const { return coefficient(-1); }
  LaurentPoly pow(int n, int cap = default_degree_cap()) const;

  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Rational> terms_;
};

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
inline LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
inline LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
inline LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }

inline bool is_zero(const LaurentPoly& l) { return l.is_zero(); }
inline Rational residue(const LaurentPoly& l) { return l.residue(); }

/// Vector-valued Laurent polynomial, one component per spatial direction;
/// holds a trajectory q^mu(z).
using LaurentVector = std::vector<LaurentPoly>;

std::vector<Rational> residue(const LaurentVector& v);
LaurentVector derivative(const LaurentVector& v);
bool is_constant(const LaurentVector& v);

}  // namespace jetvir

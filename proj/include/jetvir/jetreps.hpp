#pragma once

// Classical jet realizations of the current and vector-field algebras.
//
// Operators act on the jet space spanned by e_n = x^n / n! (|n| <= p),
// tensored with a representation space; entries are polynomials in the
// observer's position q. A matrix A acts by e_n -> sum_m e_m A(m, n), so
// matrix products compose operators and commutators close exactly.
//
//   J_X: multiplication by X^a(x + q) M^a, block (m, n) = binom(m, n) d_{m-n} X(q) M.
//   L_xi = xi^mu(q) d/dq^mu + K_xi(q), where K_xi is
//          (xi^mu(x + q) - xi^mu(q)) d/dx^mu + d_nu xi^mu(x + q) T^nu_mu
//          truncated at order p.
//
// The transport term in K_xi is the jet part of the improved momentum; no
// separate momentum operator is built. These matrices are the kernels of the
// bilinear generators \int pi K phi, so a field transforms with -K.

#include <vector>

#include "jetvir/brackets.hpp"
#include "jetvir/poly.hpp"

namespace jetvir::jetreps {

/// Dense square matrix of exact rationals.
struct RMatrix {
  int n = 0;
  std::vector<Rational> a;

  explicit RMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size * size)) {}
  static RMatrix identity(int size);
  Rational& operator()(int i, int j) { return a[i * n + j]; }
  const Rational& operator()(int i, int j) const { return a[i * n + j]; }

  friend RMatrix operator*(const RMatrix& x, const RMatrix& y);
  friend RMatrix operator+(const RMatrix& x, const RMatrix& y);
  friend RMatrix operator-(const RMatrix& x, const RMatrix& y);
  friend RMatrix operator*(const Rational& s, const RMatrix& x);
  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

RMatrix commutator(const RMatrix& x, const RMatrix& y);
/// Kronecker product x (outer) tensor y (inner).
RMatrix kron(const RMatrix& x, const RMatrix& y);

/// Explicit matrices of a representation. For g: mats[a] = M^a. For gl(d):
/// mats[nu * d + mu] = T^nu_mu.
struct MatrixRep {
  int size = 1;
  std::vector<RMatrix> mats;

  /// The one-dimensional abelian algebra acting by M = 1.
  static MatrixRep abelian();
  /// so(3) on R^3: (L_a)_{bc} = -epsilon_{abc}, so [L_a, L_b] = epsilon_{abc} L_c.
  static MatrixRep so3_vector();
  /// Scalar density of weight kappa: T^nu_mu = kappa delta^nu_mu.
  static MatrixRep gl_density(int d, const Rational& kappa);
  /// Vector density of weight kappa on R^d: T^nu_mu = E_{nu mu} + kappa 1.
  static MatrixRep gl_vector(int d, const Rational& kappa);

  /// Each matrix A replaced by A tensor 1_n.
  MatrixRep tensor_identity(int n) const;
  /// Each matrix A replaced by 1_n tensor A.
  MatrixRep identity_tensor(int n) const;
};

/// [M^a, M^b] = f^{abc} M^c for all a, b.
bool satisfies_algebra(const MatrixRep& rep, const StructureConstants& f);
/// [T^mu_rho, T^nu_sigma] = delta^nu_rho T^mu_sigma - delta^mu_sigma T^nu_rho.
bool satisfies_gl(const MatrixRep& rep, int d);

/// Square matrix with entries polynomial in q (dimension qdim).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int n, int qdim);

  int size() const { return n_; }
  int qdim() const { return qdim_; }
  Poly& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Poly& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_zero() const;
  /// Entrywise d/dq^mu.
  QMatrix derive(int mu) const;
  /// Entry (i, j) at q = 0.
  RMatrix at_origin() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  /// Matrix product; skips zero entries.
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  /// Entrywise product with a scalar polynomial.
  friend QMatrix operator*(const Poly& s, const QMatrix& a);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  void require_same_shape(const QMatrix& o) const;
  int n_ = 0;
  int qdim_ = 0;
  std::vector<Poly> e_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

struct GaugeJetOperator {
  int d = 1;
  int p = 0;
  int rep_size = 1;
  QMatrix m;

  friend bool operator==(const GaugeJetOperator&, const GaugeJetOperator&) = default;
};

struct DiffJetOperator {
  int d = 1;
  int p = 0;
  int rep_size = 1;
  /// xi^mu(q)
  std::vector<Poly> vec;
  QMatrix mat;

  friend bool operator==(const DiffJetOperator&, const DiffJetOperator&) = default;
};

/// J_X over the given g representation. X has one component per matrix.
GaugeJetOperator gauge_operator(const std::vector<Poly>& x, const MatrixRep& rep, int d, int p);

/// L_xi over the given gl(d) representation, built by applying K_xi to each
/// basis element e_n tensor v_i and truncating at order p.
DiffJetOperator diff_operator(const std::vector<Poly>& xi, const MatrixRep& glrep, int d, int p);

GaugeJetOperator bracket_gauge(const GaugeJetOperator& a, const GaugeJetOperator& b);

/// [a1 d + B1, a2 d + B2] = (a1 d a2 - a2 d a1) d + (a1 d B2 - a2 d B1 + [B1, B2]).
DiffJetOperator bracket_diff(const DiffJetOperator& a, const DiffJetOperator& b);

/// [L_xi, J_X] = xi^mu(q) d_mu J_X + [K_xi, J_X]. L and J must act on the
/// same space, e.g. rho tensor 1 and 1 tensor M.
GaugeJetOperator bracket_mixed(const DiffJetOperator& l, const GaugeJetOperator& j);

}  // namespace jetvir::jetreps

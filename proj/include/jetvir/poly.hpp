#pragma once

// Exact multivariate polynomials in spatial variables x^0..x^{d-1}.
//
// A p-jet is a polynomial truncated at total degree p. Coefficients are
// exact rationals (Poly) or Laurent polynomials in z (FieldPoly), the latter
// for gauge and vector-field data that also depend on the contour variable.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jetvir/laurent.hpp"
#include "jetvir/multiindex.hpp"
#include "jetvir/rational.hpp"

namespace jetvir {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

template <typename Coeff>
class PolyT {
 public:
  using Terms = std::map<MultiIndex, Coeff>;

  PolyT() = default;
  explicit PolyT(int d) : dim_(d) { MultiIndex check(d); }

  static PolyT constant(int d, const Coeff& c) {
    PolyT p(d);
    p.add_term(MultiIndex(d), c);
    return p;
  }
  static PolyT variable(int d, int mu) {
    PolyT p(d);
    p.add_term(MultiIndex::unit(d, mu), Coeff(Rational(1)));
    return p;
  }
  static PolyT monomial(const MultiIndex& m, const Coeff& c) {
    PolyT p(m.dim());
    p.add_term(m, c);
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }
  /// Pointer to the stored coefficient, or nullptr when it is zero.
  const Coeff* find(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const MultiIndex& m, const Coeff& c) {
    if (m.dim() != dim_) throw DimensionMismatch("polynomial term dimension mismatch");
    if (jetvir::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (jetvir::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
  }

  PolyT& operator+=(const PolyT& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(Rational(-1)) * c);
    return *this;
  }
  PolyT& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator-(PolyT a) { return a *= Rational(-1); }
  friend PolyT operator*(PolyT a, const Rational& s) { return a *= s; }
  friend PolyT operator*(const Rational& s, PolyT a) { return a *= s; }
  friend PolyT operator*(const PolyT& a, const PolyT& b) { return multiply(a, b); }
  friend bool operator==(const PolyT& a, const PolyT& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void require_same_dim(const PolyT& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("polynomial dimension mismatch");
  }

  Terms terms_;
  int dim_ = 0;
};

using Poly = PolyT<Rational>;
/// Polynomial in x whose coefficients are Laurent polynomials in z.
using FieldPoly = PolyT<LaurentPoly>;

/// Exact product; dimensions must agree.
template <typename C>
PolyT<C> multiply(const PolyT<C>& a, const PolyT<C>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("multiply: dimension mismatch");
  PolyT<C> r(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      C c = ca;
      c *= cb;
      r.add_term(ma + mb, c);
    }
  return r;
}

/// Drops all terms of total degree > p. Idempotent.
template <typename C>
PolyT<C> truncate(const PolyT<C>& a, int p) {
  PolyT<C> r(a.dim());
  for (const auto& [m, c] : a.terms())
    if (m.degree() <= p) r.add_term(m, c);
  return r;
}

/// Partial derivative d/dx^mu.
template <typename C>
PolyT<C> derive(const PolyT<C>& a, int mu) {
  if (mu < 0 || mu >= a.dim()) throw std::out_of_range("derive: direction out of range");
  PolyT<C> r(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (m[mu] == 0) continue;
    MultiIndex e = m;
    e.set(mu, m[mu] - 1);
    C v = c;
    v *= Rational(m[mu]);
    r.add_term(e, v);
  }
  return r;
}

/// Iterated derivative d_m = d_0^{m_0} ... d_{d-1}^{m_{d-1}}.
template <typename C>
PolyT<C> derive(const PolyT<C>& a, const MultiIndex& m) {
  if (m.dim() != a.dim()) throw DimensionMismatch("derive: dimension mismatch");
  PolyT<C> r(a.dim());
  for (const auto& [e, c] : a.terms()) {
    if (!m.divides(e)) continue;
    MultiIndex rest = e - m;
    Rational ratio(factorial(e), factorial(rest));
    ratio.canonicalize();
    C v = c;
    v *= ratio;
    r.add_term(rest, v);
  }
  return r;
}

/// (d_m a)(0) = m! * [coefficient of x^m].
inline Rational eval_at_zero_deriv(const Poly& a, const MultiIndex& m) {
  const Rational* c = a.find(m);
  if (c == nullptr) return 0;
  return Rational(factorial(m)) * *c;
}

/// a(x) - a(0).
template <typename C>
PolyT<C> shift_to_zero(const PolyT<C>& a) {
  PolyT<C> r(a.dim());
  for (const auto& [m, c] : a.terms())
    if (m.degree() > 0) r.add_term(m, c);
  return r;
}

inline Rational constant_term(const Poly& a) { return a.coefficient(MultiIndex(a.dim())); }
inline Rational eval_at_zero(const Poly& a) { return constant_term(a); }

/// Substitutes x^mu -> subs[mu] (polynomials of a common dimension).
Poly substitute(const Poly& a, const std::vector<Poly>& subs);

/// Re-embeds a polynomial into a larger variable set: variable mu maps to
/// variable offset + mu of dimension new_dim.
Poly embed(const Poly& a, int new_dim, int offset);

/// Substitutes x^mu -> q^mu(z) and expands. Throws DegreeCapExceeded when an
/// intermediate power exceeds the cap.
LaurentPoly compose_with_trajectory(const Poly& a, const LaurentVector& q, int cap = default_degree_cap());
LaurentPoly compose_with_trajectory(const FieldPoly& a, const LaurentVector& q, int cap = default_degree_cap());

FieldPoly to_field(const Poly& a);

template <typename C>
std::string PolyT<C>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    if (dim_ == 1) return std::string("x");
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff;
    if constexpr (std::is_same_v<C, Rational>) {
      coeff = c.get_str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) coeff.erase(0, 1);
    first = false;
    bool unit = (coeff == "1");
    if (!unit || m.degree() == 0) os << coeff;
    bool need_sep = !unit;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (need_sep) os << "*";
      os << var(i);
      if (m[i] != 1) os << "^" << m[i];
      need_sep = true;
    }
  }
  return os.str();
}

}  // namespace jetvir

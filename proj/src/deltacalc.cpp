#include "jetvir/deltacalc.hpp"

#include <stdexcept>

#include "jetvir/multiindex.hpp"

namespace jetvir::deltacalc {

namespace {

Rational sign(int degree) { return (degree % 2 == 0) ? Rational(1) : Rational(-1); }

// \int P(y) x^a d_e delta(y) with P = f: (-1)^{|e|} d_e (f x^a)(0), which is
// (-1)^{|e|} e! [x^{e-a}] f.
Rational pair(const Poly& f, const MultiIndex& a, const MultiIndex& e) {
  if (!a.divides(e)) return 0;
  const Rational* c = f.find(e - a);
  if (c == nullptr) return 0;
  return sign(e.degree()) * Rational(factorial(e)) * *c;
}

// Applies a decoration to one delta factor  x^k d_l delta(.),  where the
// polynomial variable is `poly_side` and the delta argument the other one.
// Returns the weight m_mu picked up by a lowered power, 0 if it vanishes.
struct Decorated {
  Rational weight{1};
  MultiIndex power;
  MultiIndex order;
};

Decorated decorate(const MultiIndex& m, const DerivSpec& deriv, DerivSpec::Which poly_side) {
  Decorated out{1, m, m};
  if (deriv.which == DerivSpec::none) return out;
  const MultiIndex unit = MultiIndex::unit(m.dim(), deriv.mu);
  if (deriv.which == poly_side) {
    if (m[deriv.mu] == 0) return {0, m, m};
    out.weight = m[deriv.mu];
    out.power = m - unit;
  } else {
    out.order = m + unit;
  }
  return out;
}

Poly apply_mode(const Poly& f, SmearMode mode) { return mode == SmearMode::shifted ? shift_to_zero(f) : f; }

}  // namespace

void validate(const DerivSpec& deriv, int d) {
  if (d < 1) throw std::invalid_argument("delta calculus: dimension must be >= 1");
  if (deriv.which != DerivSpec::none && (deriv.mu < 0 || deriv.mu >= d))
    throw std::invalid_argument("delta calculus: derivative direction out of range");
}

Poly smear(const Poly& f, const DerivSpec& deriv, int d, int p) {
  validate(deriv, d);
  if (f.dim() != d) throw DimensionMismatch("smear: polynomial dimension differs from d");
  Poly out(d);
  const MultiIndex zero(d);
  for (const auto& m : enumerate(d, p)) {
    // delta_p(x, y): polynomial in x, delta in y.
    Decorated t = decorate(m, deriv, DerivSpec::on_x);
    if (sgn(t.weight) == 0) continue;
    Rational c = sign(m.degree()) / Rational(factorial(m)) * t.weight * pair(f, zero, t.order);
    out.add_term(t.power, c);
  }
  return out;
}

Rational delta_pair_integral(const Poly& f, const Poly& g, const DerivSpec& d1, const DerivSpec& d2,
                             SmearModes modes, int d, int p) {
  validate(d1, d);
  validate(d2, d);
  if (f.dim() != d || g.dim() != d) throw DimensionMismatch("delta_pair_integral: polynomial dimension differs from d");
  const Poly fx = apply_mode(f, modes.first);
  const Poly gy = apply_mode(g, modes.second);
  const std::vector<MultiIndex> lattice = enumerate(d, p);

  std::vector<Rational> inv_fact;
  inv_fact.reserve(lattice.size());
  for (const auto& m : lattice) inv_fact.push_back(sign(m.degree()) / Rational(factorial(m)));

  Rational total = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    // First factor delta_p(x, y) = c_m x^m d_m delta(y).
    const Decorated a = decorate(lattice[i], d1, DerivSpec::on_x);
    if (sgn(a.weight) == 0) continue;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      // Second factor delta_p(y, x) = c_n y^n d_n delta(x).
      const Decorated b = decorate(lattice[j], d2, DerivSpec::on_y);
      if (sgn(b.weight) == 0) continue;
      Rational py = pair(gy, b.power, a.order);
      if (sgn(py) == 0) continue;
      Rational px = pair(fx, a.power, b.order);
      if (sgn(px) == 0) continue;
      total += inv_fact[i] * inv_fact[j] * a.weight * b.weight * py * px;
    }
  }
  return total;
}

Rational delta_pair_closed(PairCase c, const Poly& f, const Poly& g, int mu, int nu, int d, int p) {
  if (d < 1 || p < 0) throw std::invalid_argument("delta_pair_closed: need d >= 1 and p >= 0");
  if (f.dim() != d || g.dim() != d) throw DimensionMismatch("delta_pair_closed: polynomial dimension differs from d");
  auto in_range = [d](int k) { return k >= 0 && k < d; };
  const MultiIndex zero(d);
  switch (c) {
    case PairCase::i:
      return Rational(binomial(d + p, d)) * eval_at_zero(f) * eval_at_zero(g);
    case PairCase::ii: {
      if (!in_range(mu)) throw std::invalid_argument("delta_pair_closed: mu out of range");
      return Rational(binomial(d + p, d + 1)) * eval_at_zero(derive(f, mu)) * eval_at_zero(g);
    }
    case PairCase::iii: {
      if (!in_range(mu) || !in_range(nu)) throw std::invalid_argument("delta_pair_closed: direction out of range");
      const Rational e = Rational(binomial(d + p + 1, d + 2));
      const Rational dd = Rational(binomial(d + p, d + 2));
      return e * eval_at_zero(derive(f, nu)) * eval_at_zero(derive(g, mu)) +
             dd * eval_at_zero(derive(f, mu)) * eval_at_zero(derive(g, nu));
    }
  }
  return 0;
}

PairSetup pair_setup(PairCase c, int mu, int nu) {
  switch (c) {
    case PairCase::i:
      return {DerivSpec::plain(), DerivSpec::plain(), {SmearMode::plain, SmearMode::plain}};
    case PairCase::ii:
      return {DerivSpec::x(mu), DerivSpec::plain(), {SmearMode::shifted, SmearMode::plain}};
    case PairCase::iii:
      return {DerivSpec::x(mu), DerivSpec::y(nu), {SmearMode::shifted, SmearMode::shifted}};
  }
  return {};
}

}  // namespace jetvir::deltacalc

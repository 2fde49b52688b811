#include "jetvir/wickcocycle.hpp"

#include <sstream>
#include <stdexcept>

#include "jetvir/multiindex.hpp"

namespace jetvir::wick {

namespace {

Rational sign_pow(int n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

void check_factor(const FieldFactor& f) {
  if (f.z_dots < 0 || f.z_dots > 1) throw std::invalid_argument("field factor: z_dots must be 0 or 1");
  if (f.kind == FieldKind::pi && f.deriv >= 0) throw std::invalid_argument("field factor: pi carries no derivative");
}

// d_nu xi^mu(0), indexed [mu][nu].
std::vector<std::vector<Rational>> jacobian_at_zero(const std::vector<Poly>& xi, int d) {
  std::vector<std::vector<Rational>> j(d, std::vector<Rational>(d));
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu) j[mu][nu] = xi[mu].coefficient(MultiIndex::unit(d, nu));
  return j;
}

Rational divergence_at_zero(const std::vector<Poly>& xi, int d) {
  Rational s = 0;
  for (int mu = 0; mu < d; ++mu) s += xi[mu].coefficient(MultiIndex::unit(d, mu));
  return s;
}

void check_vector(const std::vector<Poly>& v, int d, std::size_t n, const char* what) {
  if (v.size() != n) throw std::invalid_argument(std::string(what) + ": wrong number of components");
  for (const auto& c : v)
    if (c.dim() != d) throw DimensionMismatch(std::string(what) + ": component dimension differs from d");
}

}  // namespace

Propagator propagator(const FieldFactor& a, const FieldFactor& b, Statistics s) {
  check_factor(a);
  check_factor(b);
  if (a.kind == b.kind) throw std::invalid_argument("propagator: need one pi and one phi factor");
  Propagator out;
  const int n = a.z_dots;
  const int m = b.z_dots;
  out.pole_order = 1 + n + m;
  Rational base;
  if (a.kind == FieldKind::phi) {
    base = 1;
    out.orientation = Orientation::xy;
    if (a.deriv >= 0) out.deriv = DerivSpec::x(a.deriv);
  } else {
    base = (s == Statistics::bose) ? -1 : 1;
    out.orientation = Orientation::yx;
    if (b.deriv >= 0) out.deriv = DerivSpec::y(b.deriv);
  }
  out.sign = base * sign_pow(n) * Rational(factorial(n + m));
  return out;
}

Rational trace(const Insertion& a, const Insertion& b, const RepTraces& t) {
  const Rational dr(t.gl.delta_rho);
  const Rational dm(t.g.delta_m);
  auto priv = [&](int i) { return Rational(i == t.privileged ? 1 : 0); };
  auto kd = [](int i, int j) { return Rational(i == j ? 1 : 0); };

  const Insertion* x = &a;
  const Insertion* y = &b;
  if (x->kind > y->kind) std::swap(x, y);
  using K = Insertion::Kind;
  if (x->kind == K::identity && y->kind == K::identity) return dr * dm;
  if (x->kind == K::identity && y->kind == K::gl) return t.gl.k0 * kd(y->upper, y->lower) * dm;
  if (x->kind == K::identity && y->kind == K::g) return dr * t.g.z_m * priv(y->upper);
  if (x->kind == K::gl && y->kind == K::gl) {
    // tr T^a_b T^c_e = k1 d^a_e d^c_b + k2 d^a_b d^c_e
    return (t.gl.k1 * kd(x->upper, y->lower) * kd(y->upper, x->lower) +
            t.gl.k2 * kd(x->upper, x->lower) * kd(y->upper, y->lower)) *
           dm;
  }
  if (x->kind == K::gl && y->kind == K::g) return t.gl.k0 * kd(x->upper, x->lower) * t.g.z_m * priv(y->upper);
  // g, g
  return dr * (t.g.y_m * kd(x->upper, y->upper) + t.g.w_m * priv(x->upper) * priv(y->upper));
}

Rational coefficient(const PoleExpansion& e, int order) {
  auto it = e.find(order);
  return it == e.end() ? Rational(0) : it->second;
}

PoleExpansion double_contraction(const NormalBilinear& a, const NormalBilinear& b, const RepTraces& traces, int d,
                                 int p, const ContractionOptions& opts) {
  if (a.d != d || b.d != d) throw std::invalid_argument("double_contraction: operator dimension differs from d");
  if (p < 0) throw std::invalid_argument("double_contraction: p must be >= 0");
  traces.gl.validate();
  traces.g.validate();
  const Statistics s = traces.g.statistics;
  PoleExpansion out;
  auto accumulate = [&out](int order, const Rational& v) {
    if (sgn(v) == 0) return;
    Rational& slot = out[order];
    slot += v;
    if (sgn(slot) == 0) out.erase(order);
  };

  if (opts.field_sector) {
    for (const auto& ta : a.terms) {
      for (const auto& tb : b.terms) {
        // A's phi at x against B's pi at y, then A's pi at x against B's phi at y.
        const Propagator first = propagator(ta.right, tb.left, s);
        const Propagator second = propagator(ta.left, tb.right, s);
        const Rational tr = trace(ta.insertion, tb.insertion, traces);
        if (sgn(tr) == 0) continue;
        const Rational integral =
            deltacalc::delta_pair_integral(ta.coeff, tb.coeff, first.deriv, second.deriv, {ta.mode, tb.mode}, d, p);
        accumulate(first.pole_order + second.pole_order,
                   ta.prefactor * tb.prefactor * first.sign * second.sign * tr * integral);
      }
    }
  }

  if (opts.q_sector && a.q.kind != QSector::none && b.q.kind != QSector::none) {
    if (a.q.kind == QSector::vector && b.q.kind == QSector::vector) {
      auto ja = jacobian_at_zero(a.q.xi, d);
      auto jb = jacobian_at_zero(b.q.xi, d);
      Rational z = 0;
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) z += ja[mu][nu] * jb[nu][mu];
      accumulate(2, -z);
    } else if (a.q.kind == QSector::reparam && b.q.kind == QSector::vector) {
      accumulate(3, divergence_at_zero(b.q.xi, d));
    } else if (a.q.kind == QSector::reparam && b.q.kind == QSector::reparam) {
      accumulate(4, Rational(d));
    } else {
      throw std::invalid_argument("double_contraction: no observer-sector rule for this operator ordering");
    }
  }
  return out;
}

NormalBilinear current_generator(const std::vector<Poly>& x, int d) {
  if (x.empty()) throw std::invalid_argument("current generator: X needs at least one component");
  check_vector(x, d, x.size(), "current generator");
  NormalBilinear g;
  g.d = d;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    BilinearTerm t;
    t.coeff = x[a];
    t.insertion = Insertion::M(static_cast<int>(a));
    g.terms.push_back(std::move(t));
  }
  return g;
}

NormalBilinear vector_generator(const std::vector<Poly>& xi, int d, unsigned parts) {
  check_vector(xi, d, static_cast<std::size_t>(d), "vector generator");
  NormalBilinear g;
  g.d = d;
  if (parts & kTransport) {
    for (int mu = 0; mu < d; ++mu) {
      Poly shifted = shift_to_zero(xi[mu]);
      if (shifted.is_zero()) continue;
      BilinearTerm t;
      t.coeff = std::move(shifted);
      t.mode = SmearMode::shifted;
      t.right = FieldFactor::phi(0, mu);
      g.terms.push_back(std::move(t));
    }
  }
  if (parts & kRotation) {
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) {
        Poly dxi = derive(xi[mu], nu);
        if (dxi.is_zero()) continue;
        BilinearTerm t;
        t.coeff = std::move(dxi);
        t.insertion = Insertion::T(nu, mu);
        g.terms.push_back(std::move(t));
      }
  }
  if (parts & kObserver) {
    g.q.kind = QSector::vector;
    g.q.xi = xi;
  }
  return g;
}

NormalBilinear reparam_generator(const Rational& lambda, int d, bool observer) {
  NormalBilinear g;
  g.d = d;
  const Poly one = Poly::constant(d, 1);
  if (sgn(lambda - 1) != 0) {
    BilinearTerm t;
    t.prefactor = lambda - 1;
    t.coeff = one;
    t.right = FieldFactor::phi(1);
    g.terms.push_back(std::move(t));
  }
  if (sgn(lambda) != 0) {
    BilinearTerm t;
    t.prefactor = lambda;
    t.coeff = one;
    t.left = FieldFactor::pi(1);
    g.terms.push_back(std::move(t));
  }
  if (observer) g.q.kind = QSector::reparam;
  return g;
}

NormalBilinear build_generator(GeneratorKind kind, const GeneratorData& data, int d) {
  switch (kind) {
    case GeneratorKind::current: return current_generator(data.field, d);
    case GeneratorKind::vector: return vector_generator(data.field, d);
    case GeneratorKind::reparam: return reparam_generator(data.lambda, d);
  }
  throw std::invalid_argument("build_generator: unknown kind");
}

namespace {

// x^k d_mu as a vector field in d dimensions.
std::vector<Poly> monomial_field(int d, int k, int mu) {
  std::vector<Poly> xi(d, Poly(d));
  xi[mu] = Poly::variable(d, k);
  return xi;
}

// Constant g-valued function e_a in a two-dimensional g.
std::vector<Poly> unit_current(int d, int a) {
  std::vector<Poly> x(2, Poly(d));
  x[a] = Poly::constant(d, 1);
  return x;
}

struct Probe {
  std::vector<Poly> xi;
  std::vector<Poly> eta;
};

}  // namespace

MeasuredCharges extract_charges(int d, int p, const Rational& lambda, const RepTraces& traces) {
  if (d < 1 || p < 0) throw std::invalid_argument("extract_charges: need d >= 1 and p >= 0");
  if (traces.privileged != 0) throw std::invalid_argument("extract_charges: probes assume privileged direction 0");
  MeasuredCharges m;
  m.d = d;
  m.p = p;
  m.lambda = lambda;

  auto run = [&](const NormalBilinear& a, const NormalBilinear& b, bool quartic_allowed) {
    PoleExpansion e = double_contraction(a, b, traces, d, p);
    for (const auto& [order, v] : e) {
      m.max_pole = std::max(m.max_pole, order);
      if (order > 3 && !quartic_allowed) m.stray_quartic = true;
    }
    return e;
  };

  // Vir(d) channels: pole 2 of L_xi L_eta is -c1 T1 - c2 T2.
  auto channels = [&](const Probe& pr) {
    auto ja = jacobian_at_zero(pr.xi, d);
    auto jb = jacobian_at_zero(pr.eta, d);
    Rational t1 = 0;
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) t1 += ja[mu][nu] * jb[nu][mu];
    Rational t2 = divergence_at_zero(pr.xi, d) * divergence_at_zero(pr.eta, d);
    Rational z = coefficient(run(vector_generator(pr.xi, d), vector_generator(pr.eta, d), false), 2);
    return std::array<Rational, 3>{t1, t2, -z};
  };

  const Probe diag{monomial_field(d, 0, 0), monomial_field(d, 0, 0)};
  if (d >= 2) {
    const Probe cross{monomial_field(d, 1, 0), monomial_field(d, 0, 1)};
    auto r1 = channels(cross);
    auto r2 = channels(diag);
    Rational det = r1[0] * r2[1] - r1[1] * r2[0];
    if (sgn(det) == 0) throw SingularProbe("extract_charges: probe fields do not separate the Vir(d) channels");
    m.c[0] = (r1[2] * r2[1] - r1[1] * r2[2]) / det;
    m.c[1] = (r1[0] * r2[2] - r1[2] * r2[0]) / det;
    m.c1_plus_c2 = *m.c[0] + *m.c[1];
  } else {
    auto r = channels(diag);
    if (sgn(r[0]) == 0 || r[0] != r[1]) throw SingularProbe("extract_charges: degenerate one-dimensional probe");
    m.c1_plus_c2 = r[2] / r[0];
  }

  const NormalBilinear t = reparam_generator(lambda, d);
  const std::vector<Poly> dilation = monomial_field(d, 0, 0);
  const Rational div = divergence_at_zero(dilation, d);

  // T(z) L_xi(w) ~ (c3 / 2) ... read off at pole 3 per unit divergence.
  m.c[2] = coefficient(run(t, vector_generator(dilation, d), false), 3) / div;
  m.c[3] = 2 * coefficient(run(t, t, true), 4);

  const NormalBilinear j0 = current_generator(unit_current(d, 0), d);
  const NormalBilinear j1 = current_generator(unit_current(d, 1), d);
  m.c[4] = coefficient(run(j1, j1, false), 2);
  m.c[7] = coefficient(run(j0, j0, false), 2) - *m.c[4];
  m.c[5] = coefficient(run(t, j0, false), 3);
  m.c[6] = coefficient(run(vector_generator(dilation, d), j0, false), 2) / div;
  return m;
}

std::vector<std::string> compare(const MeasuredCharges& m, const ChargeSet& closed) {
  std::vector<std::string> out;
  auto report = [&](const std::string& label, const Rational& got, const Rational& want) {
    if (got == want) return;
    std::ostringstream os;
    os << label << ": measured " << got.get_str() << ", closed form " << want.get_str();
    out.push_back(os.str());
  };
  for (int i = 1; i <= 8; ++i)
    if (m[i]) report("c" + std::to_string(i), *m[i], closed[i]);
  if (m.c1_plus_c2) report("c1+c2", *m.c1_plus_c2, closed[1] + closed[2]);
  if (m.stray_quartic) out.push_back("pole order above 3 outside the T-T channel");
  return out;
}

}  // namespace jetvir::wick

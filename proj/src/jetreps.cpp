#include "jetvir/jetreps.hpp"

#include <stdexcept>

#include "jetvir/multiindex.hpp"

namespace jetvir::jetreps {

RMatrix RMatrix::identity(int size) {
  RMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RMatrix operator*(const RMatrix& x, const RMatrix& y) {
  if (x.n != y.n) throw DimensionMismatch("matrix product: size mismatch");
  RMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

RMatrix operator+(const RMatrix& x, const RMatrix& y) {
  if (x.n != y.n) throw DimensionMismatch("matrix sum: size mismatch");
  RMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RMatrix operator-(const RMatrix& x, const RMatrix& y) { return x + Rational(-1) * y; }

RMatrix operator*(const Rational& s, const RMatrix& x) {
  RMatrix r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

RMatrix commutator(const RMatrix& x, const RMatrix& y) { return x * y - y * x; }

RMatrix kron(const RMatrix& x, const RMatrix& y) {
  RMatrix r(x.n * y.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      if (sgn(x(i, j)) == 0) continue;
      for (int k = 0; k < y.n; ++k)
        for (int l = 0; l < y.n; ++l) r(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
    }
  return r;
}

MatrixRep MatrixRep::abelian() { return {1, {RMatrix::identity(1)}}; }

MatrixRep MatrixRep::so3_vector() {
  const StructureConstants eps = StructureConstants::so3();
  MatrixRep r{3, {}};
  for (int a = 0; a < 3; ++a) {
    RMatrix m(3);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) m(b, c) = -eps(a, b, c);
    r.mats.push_back(m);
  }
  return r;
}

MatrixRep MatrixRep::gl_density(int d, const Rational& kappa) {
  MatrixRep r{1, {}};
  for (int nu = 0; nu < d; ++nu)
    for (int mu = 0; mu < d; ++mu) r.mats.push_back(nu == mu ? kappa * RMatrix::identity(1) : RMatrix(1));
  return r;
}

MatrixRep MatrixRep::gl_vector(int d, const Rational& kappa) {
  MatrixRep r{d, {}};
  for (int nu = 0; nu < d; ++nu)
    for (int mu = 0; mu < d; ++mu) {
      RMatrix m(d);
      m(nu, mu) = 1;
      if (nu == mu) m = m + kappa * RMatrix::identity(d);
      r.mats.push_back(m);
    }
  return r;
}

MatrixRep MatrixRep::tensor_identity(int n) const {
  MatrixRep r{size * n, {}};
  for (const auto& m : mats) r.mats.push_back(kron(m, RMatrix::identity(n)));
  return r;
}

MatrixRep MatrixRep::identity_tensor(int n) const {
  MatrixRep r{size * n, {}};
  for (const auto& m : mats) r.mats.push_back(kron(RMatrix::identity(n), m));
  return r;
}

bool satisfies_algebra(const MatrixRep& rep, const StructureConstants& f) {
  if (static_cast<int>(rep.mats.size()) != f.dim) return false;
  for (int a = 0; a < f.dim; ++a)
    for (int b = 0; b < f.dim; ++b) {
      RMatrix rhs(rep.size);
      for (int c = 0; c < f.dim; ++c) rhs = rhs + f(a, b, c) * rep.mats[c];
      if (commutator(rep.mats[a], rep.mats[b]) != rhs) return false;
    }
  return true;
}

bool satisfies_gl(const MatrixRep& rep, int d) {
  if (static_cast<int>(rep.mats.size()) != d * d) return false;
  auto t = [&](int up, int down) -> const RMatrix& { return rep.mats[up * d + down]; };
  for (int mu = 0; mu < d; ++mu)
    for (int rho = 0; rho < d; ++rho)
      for (int nu = 0; nu < d; ++nu)
        for (int sigma = 0; sigma < d; ++sigma) {
          RMatrix rhs(rep.size);
          if (nu == rho) rhs = rhs + t(mu, sigma);
          if (mu == sigma) rhs = rhs - t(nu, rho);
          if (commutator(t(mu, rho), t(nu, sigma)) != rhs) return false;
        }
  return true;
}

QMatrix::QMatrix(int n, int qdim) : n_(n), qdim_(qdim), e_(static_cast<std::size_t>(n * n), Poly(qdim)) {}

bool QMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

QMatrix QMatrix::derive(int mu) const {
  QMatrix r(n_, qdim_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].is_zero()) r.e_[i] = jetvir::derive(e_[i], mu);
  return r;
}

RMatrix QMatrix::at_origin() const {
  RMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = constant_term((*this)(i, j));
  return r;
}

void QMatrix::require_same_shape(const QMatrix& o) const {
  if (o.n_ != n_ || o.qdim_ != qdim_) throw DimensionMismatch("operator matrices have different shapes");
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  a.require_same_shape(b);
  QMatrix r(a.n_, a.qdim_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        const Poly& y = b(k, j);
        if (!y.is_zero()) r(i, j) += multiply(x, y);
      }
    }
  return r;
}

QMatrix operator*(const Poly& s, const QMatrix& a) {
  QMatrix r(a.n_, a.qdim_);
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (!a.e_[i].is_zero()) r.e_[i] = multiply(s, a.e_[i]);
  return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

namespace {

void check_field(const std::vector<Poly>& v, std::size_t n, int d, const char* what) {
  if (v.size() != n) throw DimensionMismatch(std::string(what) + ": wrong number of components");
  for (const auto& c : v)
    if (c.dim() != d) throw DimensionMismatch(std::string(what) + ": component dimension differs from d");
}

void check_rep(const MatrixRep& rep) {
  if (rep.size < 1) throw std::invalid_argument("representation size must be >= 1");
  for (const auto& m : rep.mats)
    if (m.n != rep.size) throw DimensionMismatch("representation matrix has the wrong size");
}

struct JetBasis {
  std::vector<MultiIndex> idx;
  std::map<MultiIndex, int> pos;
};

JetBasis jet_basis(int d, int p) {
  JetBasis b;
  b.idx = enumerate(d, p);
  for (int i = 0; i < static_cast<int>(b.idx.size()); ++i) b.pos[b.idx[i]] = i;
  return b;
}

// Adds coefficient(q) * A to block (row, col).
void add_block(QMatrix& m, int rep_size, int row, int col, const Poly& coeff, const RMatrix& a) {
  for (int i = 0; i < rep_size; ++i)
    for (int j = 0; j < rep_size; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      m(row * rep_size + i, col * rep_size + j) += coeff * a(i, j);
    }
}

}  // namespace

GaugeJetOperator gauge_operator(const std::vector<Poly>& x, const MatrixRep& rep, int d, int p) {
  if (d < 1 || p < 0) throw std::invalid_argument("gauge_operator: need d >= 1 and p >= 0");
  check_rep(rep);
  check_field(x, rep.mats.size(), d, "gauge_operator");
  const JetBasis basis = jet_basis(d, p);
  const int n = static_cast<int>(basis.idx.size());
  GaugeJetOperator op{d, p, rep.size, QMatrix(n * rep.size, d)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const MultiIndex& m = basis.idx[r];
      const MultiIndex& k = basis.idx[c];
      if (!k.divides(m)) continue;
      const Rational binom(binomial(m, k));
      for (std::size_t a = 0; a < x.size(); ++a) {
        Poly entry = derive(x[a], m - k) * binom;
        if (!entry.is_zero()) add_block(op.m, rep.size, r, c, entry, rep.mats[a]);
      }
    }
  return op;
}

DiffJetOperator diff_operator(const std::vector<Poly>& xi, const MatrixRep& glrep, int d, int p) {
  if (d < 1 || p < 0) throw std::invalid_argument("diff_operator: need d >= 1 and p >= 0");
  if (2 * d > kMaxDim) throw std::invalid_argument("diff_operator: dimension too large");
  check_rep(glrep);
  check_field(xi, static_cast<std::size_t>(d), d, "diff_operator");
  if (static_cast<int>(glrep.mats.size()) != d * d)
    throw DimensionMismatch("diff_operator: gl(d) representation needs d*d matrices");

  // Variables 0..d-1 are x, d..2d-1 are q.
  const int vars = 2 * d;
  std::vector<Poly> shift;
  for (int mu = 0; mu < d; ++mu) shift.push_back(Poly::variable(vars, mu) + Poly::variable(vars, d + mu));

  std::vector<Poly> transport;
  for (int mu = 0; mu < d; ++mu) transport.push_back(substitute(xi[mu], shift) - embed(xi[mu], vars, d));
  std::vector<Poly> rotation;  // d_nu xi^mu (x + q) at [nu * d + mu]
  for (int nu = 0; nu < d; ++nu)
    for (int mu = 0; mu < d; ++mu) rotation.push_back(substitute(derive(xi[mu], nu), shift));

  const JetBasis basis = jet_basis(d, p);
  const int n = static_cast<int>(basis.idx.size());
  const RMatrix one = RMatrix::identity(glrep.size);
  DiffJetOperator op{d, p, glrep.size, {}, QMatrix(n * glrep.size, d)};
  for (int mu = 0; mu < d; ++mu) op.vec.push_back(xi[mu]);

  // Splits a term over (x, q) into the e_m row and a q-polynomial entry.
  auto deposit = [&](int col, const Poly& image, const RMatrix& a) {
    for (const auto& [e, c] : image.terms()) {
      MultiIndex mx(d);
      MultiIndex mq(d);
      for (int i = 0; i < d; ++i) {
        mx.set(i, e[i]);
        mq.set(i, e[d + i]);
      }
      if (mx.degree() > p) continue;
      Poly entry = Poly::monomial(mq, c * Rational(factorial(mx)));
      add_block(op.mat, glrep.size, basis.pos.at(mx), col, entry, a);
    }
  };

  for (int col = 0; col < n; ++col) {
    const MultiIndex& k = basis.idx[col];
    MultiIndex kx(vars);
    for (int i = 0; i < d; ++i) kx.set(i, k[i]);
    Rational inv(1);
    inv /= Rational(factorial(k));
    const Poly e_k = Poly::monomial(kx, inv);
    for (int mu = 0; mu < d; ++mu) {
      if (transport[mu].is_zero() || k[mu] == 0) continue;
      deposit(col, multiply(transport[mu], derive(e_k, mu)), one);
    }
    for (int nu = 0; nu < d; ++nu)
      for (int mu = 0; mu < d; ++mu) {
        const Poly& r = rotation[nu * d + mu];
        if (r.is_zero()) continue;
        deposit(col, multiply(r, e_k), glrep.mats[nu * d + mu]);
      }
  }
  return op;
}

namespace {

void require_compatible(int d1, int p1, int n1, int d2, int p2, int n2) {
  if (d1 != d2 || p1 != p2 || n1 != n2) throw DimensionMismatch("bracket: operators act on different spaces");
}

// sum_mu a^mu d/dq^mu M
QMatrix transport(const std::vector<Poly>& a, const QMatrix& m) {
  QMatrix r(m.size(), m.qdim());
  for (int mu = 0; mu < static_cast<int>(a.size()); ++mu)
    if (!a[mu].is_zero()) r += a[mu] * m.derive(mu);
  return r;
}

}  // namespace

GaugeJetOperator bracket_gauge(const GaugeJetOperator& a, const GaugeJetOperator& b) {
  require_compatible(a.d, a.p, a.m.size(), b.d, b.p, b.m.size());
  return {a.d, a.p, a.rep_size, commutator(a.m, b.m)};
}

DiffJetOperator bracket_diff(const DiffJetOperator& a, const DiffJetOperator& b) {
  require_compatible(a.d, a.p, a.mat.size(), b.d, b.p, b.mat.size());
  DiffJetOperator r{a.d, a.p, a.rep_size, {}, {}};
  r.vec = vector_bracket(a.vec, b.vec, a.d);
  r.mat = transport(a.vec, b.mat) - transport(b.vec, a.mat) + commutator(a.mat, b.mat);
  return r;
}

GaugeJetOperator bracket_mixed(const DiffJetOperator& l, const GaugeJetOperator& j) {
  require_compatible(l.d, l.p, l.mat.size(), j.d, j.p, j.m.size());
  return {j.d, j.p, j.rep_size, transport(l.vec, j.m) + commutator(l.mat, j.m)};
}

}  // namespace jetvir::jetreps

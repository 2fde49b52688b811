#include "jetvir/multiindex.hpp"

#include <limits>
#include <sstream>

namespace jetvir {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

MultiIndex::MultiIndex(int d) {
  if (d < 0 || d > kMaxDim) throw std::out_of_range("multi-index dimension out of range");
  dim_ = static_cast<std::uint8_t>(d);
}

MultiIndex::MultiIndex(std::initializer_list<int> components)
    : MultiIndex(std::span<const int>(components.begin(), components.size())) {}

MultiIndex::MultiIndex(std::span<const int> components) : MultiIndex(static_cast<int>(components.size())) {
  for (int i = 0; i < dim_; ++i) set(i, components[i]);
}

MultiIndex MultiIndex::unit(int d, int mu) {
  if (mu < 0 || mu >= d) throw std::out_of_range("direction out of range");
  MultiIndex m(d);
  m.set(mu, 1);
  return m;
}

void MultiIndex::set(int i, int value) {
  if (i < 0 || i >= dim_) throw std::out_of_range("multi-index component out of range");
  if (value < 0) throw std::domain_error("negative multi-index component");
  if (value > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("multi-index component too large");
  c_[i] = static_cast<std::uint16_t>(value);
}

int MultiIndex::degree() const {
  int s = 0;
  for (int i = 0; i < dim_; ++i) s += c_[i];
  return s;
}

bool MultiIndex::divides(const MultiIndex& m) const {
  if (dim_ != m.dim_) throw DimensionMismatch("multi-index dimension mismatch");
  for (int i = 0; i < dim_; ++i)
    if (c_[i] > m.c_[i]) return false;
  return true;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.dim_; ++i)
    if (a.c_[i] != b.c_[i]) return b.c_[i] <=> a.c_[i];
  return std::strong_ordering::equal;
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("add: dimension mismatch");
  MultiIndex r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r.set(i, a[i] + b[i]);
  return r;
}

MultiIndex subtract(const MultiIndex& m, const MultiIndex& n) {
  if (m.dim() != n.dim()) throw DimensionMismatch("subtract: dimension mismatch");
  MultiIndex r(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    if (n[i] > m[i]) throw std::domain_error("subtract: " + n.str() + " is not <= " + m.str());
    r.set(i, m[i] - n[i]);
  }
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer factorial(const MultiIndex& m) {
  Integer r = 1;
  for (int i = 0; i < m.dim(); ++i) r *= factorial(m[i]);
  return r;
}

Integer binomial(const MultiIndex& m, const MultiIndex& n) {
  if (m.dim() != n.dim()) throw DimensionMismatch("binomial: dimension mismatch");
  Integer r = 1;
  for (int i = 0; i < m.dim(); ++i) {
    r *= binomial(m[i], n[i]);
    if (r == 0) break;
  }
  return r;
}

namespace {

void fill_degree(int d, int pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == d - 1) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.set(pos, v);
    fill_degree(d, pos + 1, remaining - v, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<MultiIndex> enumerate(int d, int p) {
  if (d < 1) throw std::invalid_argument("enumerate: dimension must be >= 1");
  if (d > kMaxDim) throw std::out_of_range("enumerate: dimension too large");
  if (p < 0) throw std::invalid_argument("enumerate: jet order must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(binomial(d + p, d).get_ui());
  MultiIndex cur(d);
  for (int k = 0; k <= p; ++k) fill_degree(d, 0, k, cur, out);
  return out;
}

}  // namespace jetvir

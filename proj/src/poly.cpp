#include "jetvir/poly.hpp"

namespace jetvir {

namespace {

Poly poly_pow(const Poly& base, int n, std::vector<Poly>& cache) {
  if (cache.empty()) cache.push_back(Poly::constant(base.dim(), Rational(1)));
  while (static_cast<int>(cache.size()) <= n) cache.push_back(multiply(cache.back(), base));
  return cache[n];
}

LaurentPoly laurent_pow(const LaurentPoly& base, int n, std::vector<LaurentPoly>& cache, int cap) {
  if (cache.empty()) cache.emplace_back(Rational(1));
  if (n > 0 && !base.is_zero()) {
    long hi = static_cast<long>(base.max_exponent()) * n;
    long lo = static_cast<long>(base.min_exponent()) * n;
    if (hi > cap || -lo > cap)
      throw DegreeCapExceeded("trajectory composition exceeds degree cap " + std::to_string(cap));
  }
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * base);
  return cache[n];
}

template <typename C>
LaurentPoly compose_impl(const PolyT<C>& a, const LaurentVector& q, int cap) {
  if (static_cast<int>(q.size()) != a.dim())
    throw DimensionMismatch("compose_with_trajectory: trajectory dimension mismatch");
  std::vector<std::vector<LaurentPoly>> caches(q.size());
  LaurentPoly out;
  for (const auto& [m, c] : a.terms()) {
    LaurentPoly term(Rational(1));
    if constexpr (std::is_same_v<C, Rational>) {
      term *= c;
    } else {
      term = c;
    }
    for (int mu = 0; mu < a.dim() && !term.is_zero(); ++mu) {
      if (m[mu] == 0) continue;
      term *= laurent_pow(q[mu], m[mu], caches[mu], cap);
    }
    if (!term.is_zero() && (term.max_exponent() > cap || -term.min_exponent() > cap))
      throw DegreeCapExceeded("trajectory composition exceeds degree cap " + std::to_string(cap));
    out += term;
  }
  return out;
}

}  // namespace

Poly substitute(const Poly& a, const std::vector<Poly>& subs) {
  if (static_cast<int>(subs.size()) != a.dim()) throw DimensionMismatch("substitute: wrong number of substitutions");
  if (subs.empty()) return a;
  int target = subs.front().dim();
  for (const auto& s : subs)
    if (s.dim() != target) throw DimensionMismatch("substitute: substitutions differ in dimension");
  std::vector<std::vector<Poly>> caches(subs.size());
  Poly out(target);
  for (const auto& [m, c] : a.terms()) {
    Poly term = Poly::constant(target, c);
    for (int mu = 0; mu < a.dim(); ++mu)
      if (m[mu] > 0) term = multiply(term, poly_pow(subs[mu], m[mu], caches[mu]));
    out += term;
  }
  return out;
}

Poly embed(const Poly& a, int new_dim, int offset) {
  if (offset < 0 || offset + a.dim() > new_dim) throw std::out_of_range("embed: offset out of range");
  Poly out(new_dim);
  for (const auto& [m, c] : a.terms()) {
    MultiIndex e(new_dim);
    for (int mu = 0; mu < a.dim(); ++mu) e.set(offset + mu, m[mu]);
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly compose_with_trajectory(const Poly& a, const LaurentVector& q, int cap) {
  return compose_impl(a, q, cap);
}

LaurentPoly compose_with_trajectory(const FieldPoly& a, const LaurentVector& q, int cap) {
  return compose_impl(a, q, cap);
}

FieldPoly to_field(const Poly& a) {
  FieldPoly out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add_term(m, LaurentPoly(c));
  return out;
}

}  // namespace jetvir

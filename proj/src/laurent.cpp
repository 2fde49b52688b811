#include "jetvir/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace jetvir {

int default_degree_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("JETVIR_MAX_DEGREE")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < (1L << 20)) return static_cast<int>(v);
    }
    return 64;
  }();
  return cap;
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly l;
  l.add_term(exponent, c);
  return l;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e != 0) r.add_term(e - 1, c * e);
  return r;
}

LaurentPoly LaurentPoly::pow(int n, int cap) const {
  if (n < 0) throw std::domain_error("LaurentPoly::pow: negative power");
  if (n > 0 && !is_zero()) {
    long hi = static_cast<long>(max_exponent()) * n;
    long lo = static_cast<long>(min_exponent()) * n;
    if (hi > cap || -lo > cap)
      throw DegreeCapExceeded("Laurent power exceeds degree cap " + std::to_string(cap));
  }
  LaurentPoly r(Rational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || e == 0) os << mag.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << "z";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<Rational> residue(const LaurentVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.residue());
  return out;
}

LaurentVector derivative(const LaurentVector& v) {
  LaurentVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.derivative());
  return out;
}

bool is_constant(const LaurentVector& v) {
  for (const auto& c : v)
    for (const auto& [e, _] : c.terms())
      if (e != 0) return false;
  return true;
}

}  // namespace jetvir

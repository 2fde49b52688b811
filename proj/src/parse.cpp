#include "jetvir/parse.hpp"

#include <cctype>

namespace jetvir {

namespace {

struct Term {
  Rational coeff{1};
  MultiIndex x;
  int z_exp = 0;
};

class Parser {
 public:
  Parser(std::string_view text, int d, bool allow_x, bool allow_z, std::size_t base)
      : s_(text), d_(d), allow_x_(allow_x), allow_z_(allow_z), base_(base) {}

  std::vector<Term> parse() {
    std::vector<Term> out;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign(1);
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  Term term() {
    Term t;
    t.x = MultiIndex(d_);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        skip_ws();
        if (at_end() || !starts_factor(peek())) fail("expected factor after '*'");
        continue;
      }
      if (!starts_factor(c)) break;
      factor(t);
      any = true;
    }
    if (!any) fail("expected a term");
    return t;
  }

  static bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'z'; }

  void factor(Term& t) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(integer());
      Integer den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        std::size_t at = pos_;
        den = Integer(integer());
        if (den == 0) fail_at("zero denominator", at);
      }
      t.coeff *= Rational(num, den);
      t.coeff.canonicalize();
      return;
    }
    if (c == 'x') {
      std::size_t at = pos_;
      if (!allow_x_) fail("spatial variable not allowed here");
      ++pos_;
      int mu = 0;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        mu = std::stoi(integer());
      } else if (d_ != 1) {
        fail_at("bare 'x' is only allowed in one dimension; use x0..x" + std::to_string(d_ - 1), at);
      }
      if (mu >= d_) fail_at("variable x" + std::to_string(mu) + " out of range for d=" + std::to_string(d_), at);
      int e = exponent(false);
      t.x.set(mu, t.x[mu] + e);
      return;
    }
    if (c == 'z') {
      if (!allow_z_) fail("contour variable 'z' not allowed here");
      ++pos_;
      t.z_exp += exponent(true);
      return;
    }
    fail("unexpected character");
  }

  int exponent(bool allow_negative) {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (!at_end() && peek() == '-') {
      if (!allow_negative) fail("negative exponent not allowed on spatial variables");
      neg = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::string digits = integer();
    if (digits.size() > 6) fail("exponent too large");
    int e = std::stoi(digits);
    return neg ? -e : e;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

  std::string_view s_;
  int d_;
  bool allow_x_;
  bool allow_z_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::vector<Term> parse_terms(std::string_view text, int d, bool allow_x, bool allow_z, std::size_t base = 0) {
  return Parser(text, d, allow_x, allow_z, base).parse();
}

std::vector<std::pair<std::string_view, std::size_t>> split_components(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return parts;
}

FieldPoly parse_field_at(std::string_view text, int d, std::size_t base) {
  FieldPoly out(d);
  for (const auto& t : parse_terms(text, d, true, true, base)) out.add_term(t.x, LaurentPoly::monomial(t.z_exp, t.coeff));
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, int d) {
  Poly out(d);
  for (const auto& t : parse_terms(text, d, true, false)) out.add_term(t.x, t.coeff);
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly out;
  for (const auto& t : parse_terms(text, 1, false, true)) out.add_term(t.z_exp, t.coeff);
  return out;
}

FieldPoly parse_field(std::string_view text, int d) { return parse_field_at(text, d, 0); }

std::vector<Poly> parse_poly_vector(std::string_view text, int d) {
  std::vector<Poly> out;
  for (const auto& [part, at] : split_components(text)) {
    Poly p(d);
    for (const auto& t : parse_terms(part, d, true, false, at)) p.add_term(t.x, t.coeff);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<FieldPoly> parse_field_vector(std::string_view text, int d) {
  std::vector<FieldPoly> out;
  for (const auto& [part, at] : split_components(text)) out.push_back(parse_field_at(part, d, at));
  return out;
}

LaurentVector parse_trajectory(std::string_view text, int d) {
  LaurentVector out;
  for (const auto& [part, at] : split_components(text)) {
    LaurentPoly l;
    for (const auto& t : parse_terms(part, 1, false, true, at)) l.add_term(t.z_exp, t.coeff);
    out.push_back(std::move(l));
  }
  if (static_cast<int>(out.size()) != d)
    throw ParseError("trajectory needs " + std::to_string(d) + " components, got " + std::to_string(out.size()), 0);
  return out;
}

}  // namespace jetvir

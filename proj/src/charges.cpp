#include "jetvir/charges.hpp"

#include "json.hpp"

#include <stdexcept>

#include "jetvir/multiindex.hpp"

namespace jetvir {

using nlohmann::json;

const char* name(Statistics s) { return s == Statistics::bose ? "bose" : "fermi"; }

Statistics parse_statistics(std::string_view text) {
  if (text == "bose") return Statistics::bose;
  if (text == "fermi") return Statistics::fermi;
  throw std::invalid_argument("statistics must be 'bose' or 'fermi'");
}

void GlRepTraces::validate() const {
  if (delta_rho < 1) throw std::invalid_argument("delta_rho must be a positive integer");
}

void GRepTraces::validate() const {
  if (delta_m < 1) throw std::invalid_argument("delta_m must be a positive integer");
}

GlRepTraces from_sl_gl1(const Rational& kappa, const Rational& y_rho, long delta_rho, int d) {
  if (d < 1) throw std::invalid_argument("from_sl_gl1: d must be >= 1");
  GlRepTraces t;
  t.delta_rho = delta_rho;
  t.k0 = kappa * delta_rho;
  t.k1 = y_rho;
  t.k2 = kappa * kappa * delta_rho - y_rho / d;
  t.kappa = kappa;
  t.y_rho = y_rho;
  t.validate();
  return t;
}

ChargeSet closed_form(int d, int p, const Rational& lambda, const GlRepTraces& gl, const GRepTraces& g) {
  if (d < 1 || p < 0) throw std::invalid_argument("closed_form: need d >= 1 and p >= 0");
  gl.validate();
  g.validate();
  const Rational a(binomial(d + p, d));
  const Rational b(binomial(d + p, d + 1));
  const Rational dd(binomial(d + p, d + 2));
  const Rational e(binomial(d + p + 1, d + 2));
  const Rational s(sign(g.statistics));
  const Rational dr(gl.delta_rho);
  const Rational dm(g.delta_m);
  const Rational w = 2 * lambda - 1;

  ChargeSet cs;
  cs.d = d;
  cs.p = p;
  cs.lambda = lambda;
  cs.gl = gl;
  cs.g = g;
  cs[1] = 1 + s * dm * (e * dr + a * gl.k1);
  cs[2] = s * dm * (dd * dr + 2 * b * gl.k0 + a * gl.k2);
  cs[3] = 1 + s * w * dm * (b * dr + a * gl.k0);
  cs[4] = 2 * d + s * 2 * (6 * lambda * lambda - 6 * lambda + 1) * a * dr * dm;
  cs[5] = -s * a * g.y_m * dr;
  cs[6] = s * w * g.z_m * a * dr;
  cs[7] = -s * g.z_m * (b * dr + a * gl.k0);
  cs[8] = -s * g.w_m * a * dr;
  return cs;
}

Rational kac_moody_level(int p, const Rational& y_m, Statistics s) {
  if (p < 0) throw std::invalid_argument("kac_moody_level: p must be >= 0");
  return Rational(-sign(s)) * Rational(binomial(1 + p, 1)) * y_m;
}

namespace {

json rat(const Rational& r) { return to_fraction_string(r); }

Rational get_rat(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("charge set JSON: missing '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument(std::string("charge set JSON: '") + key + "' must be a rational string");
}

long get_long(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("charge set JSON: '") + key + "' must be an integer");
  return j.at(key).get<long>();
}

}  // namespace

std::string to_json(const ChargeSet& cs, int indent) {
  json in = {
      {"d", cs.d},
      {"p", cs.p},
      {"lambda", rat(cs.lambda)},
      {"delta_rho", cs.gl.delta_rho},
      {"k0", rat(cs.gl.k0)},
      {"k1", rat(cs.gl.k1)},
      {"k2", rat(cs.gl.k2)},
      {"delta_m", cs.g.delta_m},
      {"y_m", rat(cs.g.y_m)},
      {"z_m", rat(cs.g.z_m)},
      {"w_m", rat(cs.g.w_m)},
      {"statistics", name(cs.g.statistics)},
  };
  if (cs.gl.kappa) in["kappa"] = rat(*cs.gl.kappa);
  if (cs.gl.y_rho) in["y_rho"] = rat(*cs.gl.y_rho);
  json ch = json::object();
  for (int i = 1; i <= 8; ++i) ch["c" + std::to_string(i)] = rat(cs[i]);
  return json{{"inputs", in}, {"charges", ch}}.dump(indent);
}

ChargeSet charges_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("charge set JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("inputs") || !j.contains("charges"))
    throw std::invalid_argument("charge set JSON: expected 'inputs' and 'charges' objects");
  const json& in = j.at("inputs");
  const json& ch = j.at("charges");
  ChargeSet cs;
  cs.d = static_cast<int>(get_long(in, "d"));
  cs.p = static_cast<int>(get_long(in, "p"));
  cs.lambda = get_rat(in, "lambda");
  cs.gl.delta_rho = get_long(in, "delta_rho");
  cs.gl.k0 = get_rat(in, "k0");
  cs.gl.k1 = get_rat(in, "k1");
  cs.gl.k2 = get_rat(in, "k2");
  if (in.contains("kappa")) cs.gl.kappa = get_rat(in, "kappa");
  if (in.contains("y_rho")) cs.gl.y_rho = get_rat(in, "y_rho");
  cs.g.delta_m = get_long(in, "delta_m");
  cs.g.y_m = get_rat(in, "y_m");
  cs.g.z_m = get_rat(in, "z_m");
  cs.g.w_m = get_rat(in, "w_m");
  if (!in.contains("statistics") || !in.at("statistics").is_string())
    throw std::invalid_argument("charge set JSON: 'statistics' must be a string");
  cs.g.statistics = parse_statistics(in.at("statistics").get<std::string>());
  for (int i = 1; i <= 8; ++i) cs[i] = get_rat(ch, ("c" + std::to_string(i)).c_str());
  return cs;
}

}  // namespace jetvir

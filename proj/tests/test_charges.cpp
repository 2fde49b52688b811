#include "doctest.h"

#include "jetvir/charges.hpp"
#include "jetvir/multiindex.hpp"

using namespace jetvir;

namespace {

GRepTraces unit_g(Statistics s) {
  GRepTraces g;
  g.delta_m = 1;
  g.y_m = 1;
  g.statistics = s;
  return g;
}

}  // namespace

TEST_CASE("closed form at the smallest point") {
  auto gl = from_sl_gl1(0, 0, 1, 1);
  auto b = closed_form(1, 0, 0, gl, unit_g(Statistics::bose));
  CHECK(b[1] == 1);
  CHECK(b[2] == 0);
  CHECK(b[3] == 1);
  CHECK(b[4] == 4);
  CHECK(b[5] == -1);
  CHECK(b[6] == 0);
  CHECK(b[7] == 0);
  CHECK(b[8] == 0);

  auto f = closed_form(1, 0, 0, gl, unit_g(Statistics::fermi));
  CHECK(f[1] == 1);
  CHECK(f[2] == 0);
  CHECK(f[3] == 1);
  CHECK(f[4] == 0);
  CHECK(f[5] == 1);
  CHECK(f[6] == 0);
  CHECK(f[7] == 0);
  CHECK(f[8] == 0);
}

TEST_CASE("lambda = 1/2 removes c6 and the field part of c3") {
  GRepTraces g{3, 2, 5, -1, Statistics::bose};
  for (int d = 1; d <= 3; ++d)
    for (int p = 0; p <= 3; ++p) {
      auto cs = closed_form(d, p, Rational(1, 2), from_sl_gl1(Rational(-1, 2), 3, 2, d), g);
      CHECK(cs[3] == 1);
      CHECK(cs[6] == 0);
    }
}

TEST_CASE("kac-moody level") {
  CHECK(kac_moody_level(0, 1, Statistics::bose) == -1);
  CHECK(kac_moody_level(3, 2, Statistics::fermi) == 8);
  CHECK(kac_moody_level(4, 0, Statistics::bose) == 0);
  for (int p = 0; p <= 6; ++p)
    for (Statistics s : {Statistics::bose, Statistics::fermi}) {
      GRepTraces g{1, Rational(7, 3), 0, 0, s};
      CHECK(closed_form(1, p, 0, from_sl_gl1(0, 0, 1, 1), g)[5] == kac_moody_level(p, g.y_m, s));
    }
}

TEST_CASE("sl(d) + gl(1) conversion") {
  auto s = from_sl_gl1(0, 0, 1, 3);
  CHECK(s.k0 == 0);
  CHECK(s.k1 == 0);
  CHECK(s.k2 == 0);
  auto t = from_sl_gl1(1, 0, 1, 4);
  CHECK(t.k0 == 1);
  CHECK(t.k1 == 0);
  CHECK(t.k2 == 1);
  Rational y(5, 3);
  Rational kappa(2);
  auto v = from_sl_gl1(kappa, y, 2, 2);
  CHECK(v.k2 == kappa * kappa * 2 - y / 2);
  CHECK_THROWS(from_sl_gl1(0, 0, 0, 2));
}

TEST_CASE("statistics flip negates the field parts only") {
  GlRepTraces gl = from_sl_gl1(Rational(1, 3), 2, 3, 2);
  for (int p = 0; p <= 3; ++p)
    for (Rational lambda : {Rational(0), Rational(1, 2), Rational(2)}) {
      GRepTraces g{2, 3, -1, 4, Statistics::bose};
      auto b = closed_form(2, p, lambda, gl, g);
      g.statistics = Statistics::fermi;
      auto f = closed_form(2, p, lambda, gl, g);
      CHECK(b[1] - 1 == -(f[1] - 1));
      CHECK(b[2] == -f[2]);
      CHECK(b[3] - 1 == -(f[3] - 1));
      CHECK(b[4] - 4 == -(f[4] - 4));
      for (int i = 5; i <= 8; ++i) CHECK(b[i] == -f[i]);
    }
}

TEST_CASE("c1 - 1 and c2 are linear in delta_m") {
  GlRepTraces gl = from_sl_gl1(1, 2, 2, 2);
  for (int p = 0; p <= 3; ++p) {
    GRepTraces g1{1, 1, 0, 0, Statistics::bose};
    GRepTraces g3{3, 1, 0, 0, Statistics::bose};
    auto a = closed_form(2, p, 0, gl, g1);
    auto b = closed_form(2, p, 0, gl, g3);
    CHECK(b[1] - 1 == 3 * (a[1] - 1));
    CHECK(b[2] == 3 * a[2]);
  }
}

TEST_CASE("integer inputs give integer charges") {
  for (int d = 1; d <= 3; ++d)
    for (int p = 0; p <= 4; ++p)
      for (int lambda = -1; lambda <= 2; ++lambda)
        for (int kappa = -1; kappa <= 1; ++kappa) {
          GlRepTraces gl;
          gl.delta_rho = 2;
          gl.k0 = kappa * 2;
          gl.k1 = 3;
          gl.k2 = -1;
          auto cs = closed_form(d, p, lambda, gl, GRepTraces{2, 3, -2, 1, Statistics::fermi});
          for (int i = 1; i <= 8; ++i) CHECK(cs[i].get_den() == 1);
        }
}

TEST_CASE("json round trip") {
  auto cs = closed_form(2, 3, Rational(1, 2), from_sl_gl1(Rational(-1, 2), Rational(2, 3), 2, 2),
                        GRepTraces{3, Rational(5, 7), -1, 2, Statistics::fermi});
  std::string text = to_json(cs);
  CHECK(text.find("\"c1\"") != std::string::npos);
  auto back = charges_from_json(text);
  CHECK(back.d == 2);
  CHECK(back.p == 3);
  CHECK(back.lambda == Rational(1, 2));
  CHECK(back.gl.k0 == cs.gl.k0);
  CHECK(back.gl.kappa == cs.gl.kappa);
  CHECK(back.g.statistics == Statistics::fermi);
  CHECK(back.c == cs.c);
  CHECK(to_json(back) == text);
  CHECK_THROWS_AS(charges_from_json("{\"inputs\": {}}"), std::invalid_argument);
  CHECK_THROWS_AS(charges_from_json("not json"), std::invalid_argument);
}

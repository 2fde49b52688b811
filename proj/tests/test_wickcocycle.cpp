#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "jetvir/wickcocycle.hpp"

using namespace jetvir;
using namespace jetvir::wick;

namespace {

RepTraces unit_traces(Statistics s) {
  RepTraces t;
  t.gl = from_sl_gl1(0, 0, 1, 1);
  t.g.delta_m = 1;
  t.g.y_m = 1;
  t.g.statistics = s;
  return t;
}

std::vector<RepTraces> trace_tuples(int d, Statistics s) {
  std::vector<RepTraces> out;
  RepTraces a;
  a.gl = from_sl_gl1(0, 0, 1, d);
  a.g = {1, 1, 0, 0, s};
  out.push_back(a);
  RepTraces b;
  b.gl = from_sl_gl1(1, 2, 2, d);
  b.g = {3, Rational(1, 2), 2, -1, s};
  out.push_back(b);
  RepTraces c;
  c.gl = from_sl_gl1(Rational(-1, 2), Rational(3, 4), 3, d);
  c.g = {2, -2, Rational(-1, 3), Rational(5, 2), s};
  out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("propagator table") {
  auto a = propagator(FieldFactor::phi(), FieldFactor::pi(), Statistics::bose);
  CHECK(a.sign == 1);
  CHECK(a.pole_order == 1);
  CHECK(a.orientation == Orientation::xy);
  CHECK(a.deriv == DerivSpec::plain());

  auto b = propagator(FieldFactor::pi(), FieldFactor::phi(1), Statistics::bose);
  CHECK(b.sign == -1);
  CHECK(b.pole_order == 2);
  CHECK(b.orientation == Orientation::yx);

  auto c = propagator(FieldFactor::pi(1), FieldFactor::phi(1), Statistics::fermi);
  CHECK(c.sign == -2);
  CHECK(c.pole_order == 3);
  CHECK(c.orientation == Orientation::yx);

  // Remaining rows: phi-dot pi, phi pi-dot, phi-dot pi-dot, pi-dot phi.
  CHECK(propagator(FieldFactor::phi(1), FieldFactor::pi(), Statistics::bose).sign == -1);
  CHECK(propagator(FieldFactor::phi(), FieldFactor::pi(1), Statistics::bose).sign == 1);
  CHECK(propagator(FieldFactor::phi(1), FieldFactor::pi(1), Statistics::fermi).sign == -2);
  CHECK(propagator(FieldFactor::pi(1), FieldFactor::phi(), Statistics::bose).sign == 1);

  CHECK(propagator(FieldFactor::phi(0, 1), FieldFactor::pi(), Statistics::bose).deriv == DerivSpec::x(1));
  CHECK(propagator(FieldFactor::pi(), FieldFactor::phi(0, 0), Statistics::bose).deriv == DerivSpec::y(0));
  CHECK_THROWS(propagator(FieldFactor::pi(), FieldFactor::pi(), Statistics::bose));
  CHECK_THROWS(propagator(FieldFactor::phi(2), FieldFactor::pi(), Statistics::bose));
}

TEST_CASE("current-current contraction") {
  std::vector<Poly> one{Poly::constant(1, 1)};
  auto j = current_generator(one, 1);
  auto e = double_contraction(j, j, unit_traces(Statistics::bose), 1, 2);
  CHECK(coefficient(e, 2) == -3);
  CHECK(e.size() == 1);
}

TEST_CASE("observer sector of two vector fields") {
  std::vector<Poly> xi{Poly(2), Poly(2)};
  std::vector<Poly> eta{Poly(2), Poly(2)};
  xi[0] = Poly::variable(2, 1);
  eta[1] = Poly::variable(2, 0);
  RepTraces t = unit_traces(Statistics::bose);
  auto e = double_contraction(vector_generator(xi, 2, kObserver), vector_generator(eta, 2, kObserver), t, 2, 1);
  CHECK(coefficient(e, 2) == -1);
}

TEST_CASE("T-T at lambda = 0 in the field sector") {
  RepTraces t = unit_traces(Statistics::bose);
  auto g = reparam_generator(0, 1);
  auto e = double_contraction(g, g, t, 1, 0, {true, false});
  CHECK(coefficient(e, 4) == 1);
}

TEST_CASE("generator shapes") {
  auto j = current_generator({Poly::constant(1, 1)}, 1);
  REQUIRE(j.terms.size() == 1);
  CHECK(j.terms[0].mode == SmearMode::plain);
  CHECK(j.terms[0].insertion.kind == Insertion::g);
  CHECK(j.terms[0].coeff == Poly::constant(1, 1));

  auto l = vector_generator({Poly::constant(2, 3), Poly::constant(2, -1)}, 2);
  CHECK(l.terms.empty());
  CHECK(l.q.kind == QSector::vector);

  auto t = reparam_generator(1, 1);
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].left.z_dots == 1);
  CHECK(t.terms[0].right.z_dots == 0);
}

TEST_CASE("smallest charge point") {
  RepTraces t = unit_traces(Statistics::bose);
  auto m = extract_charges(1, 0, 0, t);
  CHECK(*m.c1_plus_c2 == 1);
  CHECK(*m[4] == 4);
  for (Statistics s : {Statistics::bose, Statistics::fermi})
    for (int p = 0; p <= 3; ++p) {
      RepTraces u = trace_tuples(1, s)[1];
      auto half = extract_charges(1, p, Rational(1, 2), u);
      CHECK(*half[6] == 0);
      CHECK(*half[3] == 1);
    }
}

TEST_CASE("measured charges equal the closed forms") {
  for (int d = 1; d <= 2; ++d)
    for (int p = 0; p <= 3; ++p)
      for (Rational lambda : {Rational(0), Rational(1, 2), Rational(1), Rational(2)})
        for (Statistics s : {Statistics::bose, Statistics::fermi})
          for (const RepTraces& t : trace_tuples(d, s)) {
            auto measured = extract_charges(d, p, lambda, t);
            auto closed = closed_form(d, p, lambda, t.gl, t.g);
            auto diff = compare(measured, closed);
            INFO("d=" << d << " p=" << p << " lambda=" << lambda.get_str() << " " << name(s));
            for (const auto& line : diff) INFO(line);
            CHECK(diff.empty());
            if (!diff.empty()) MESSAGE(diff.front());
            CHECK(measured.max_pole <= 4);
          }
}

TEST_CASE("Z12 = Z21") {
  std::mt19937 rng(99);
  for (int d = 1; d <= 2; ++d)
    for (int p = 0; p <= 3; ++p) {
      auto xi = testgen::poly_vector(rng, d, d, 3);
      auto eta = testgen::poly_vector(rng, d, d, 3);
      RepTraces t = trace_tuples(d, Statistics::bose)[1];
      auto z12 = double_contraction(vector_generator(xi, d, kTransport), vector_generator(eta, d, kRotation), t, d, p);
      auto z21 = double_contraction(vector_generator(xi, d, kRotation), vector_generator(eta, d, kTransport), t, d, p);
      CHECK(z12 == z21);
    }
}

TEST_CASE("unsupported observer ordering throws") {
  auto l = vector_generator({Poly::variable(1, 0)}, 1);
  auto t = reparam_generator(0, 1);
  CHECK_THROWS_AS(double_contraction(l, t, unit_traces(Statistics::bose), 1, 1), std::invalid_argument);
}

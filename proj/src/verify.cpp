#include "jetvir/verify.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "jetvir/brackets.hpp"
#include "jetvir/charges.hpp"
#include "jetvir/cocycles.hpp"
#include "jetvir/deltacalc.hpp"
#include "jetvir/jetreps.hpp"
#include "jetvir/jetsums.hpp"

namespace jetvir::verify {

namespace {

using Clock = std::chrono::steady_clock;

enum SuiteId : unsigned { kSums = 1, kDelta, kClosure, kCharges, kCocycle };

std::mt19937 point_rng(unsigned seed, SuiteId suite, int d, int p) {
  std::seed_seq seq{seed, static_cast<unsigned>(suite), static_cast<unsigned>(d), static_cast<unsigned>(p)};
  return std::mt19937(seq);
}

struct Grid {
  std::vector<std::pair<int, int>> points;
  Grid(int d_max, int p_max) {
    for (int d = 1; d <= d_max; ++d)
      for (int p = 0; p <= p_max; ++p) points.emplace_back(d, p);
  }
};

// Per-point outcome, merged in grid order so the report never depends on
// thread scheduling.
struct Slot {
  long checks = 0;
  std::vector<std::string> failures;
  long notes = 0;
};

Rational draw_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

Poly draw_poly(std::mt19937& rng, int d, int max_deg, double density) {
  std::bernoulli_distribution keep(density);
  Poly out(d);
  for (const auto& m : enumerate(d, max_deg))
    if (keep(rng)) out.add_term(m, draw_rational(rng));
  return out;
}

std::vector<Poly> draw_polys(std::mt19937& rng, int n, int d, int max_deg, double density) {
  std::vector<Poly> v;
  for (int i = 0; i < n; ++i) v.push_back(draw_poly(rng, d, max_deg, density));
  return v;
}

LaurentPoly draw_laurent(std::mt19937& rng, int lo, int hi) {
  std::bernoulli_distribution keep(0.6);
  LaurentPoly l;
  for (int e = lo; e <= hi; ++e)
    if (keep(rng)) l.add_term(e, draw_rational(rng));
  return l;
}

FieldPoly draw_field(std::mt19937& rng, int d, int max_deg) {
  std::bernoulli_distribution keep(0.5);
  FieldPoly f(d);
  for (const auto& m : enumerate(d, max_deg))
    if (keep(rng)) f.add_term(m, draw_laurent(rng, -2, 2));
  return f;
}

std::string show(const std::vector<Poly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].str();
  return s;
}

std::string show(const std::vector<FieldPoly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].str();
  return s;
}

std::string show(const LaurentVector& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "; " : "") + q[i].str();
  return s;
}

std::string at(int d, int p) { return "d=" + std::to_string(d) + " p=" + std::to_string(p) + ": "; }

template <typename Body>
SuiteResult sweep(const char* name, const Config& cfg, const Grid& grid, Body body,
                  const std::string& note_text = {}) {
  const auto start = Clock::now();
  std::vector<Slot> slots(grid.points.size());
  for_each_index(grid.points.size(), cfg.exec, [&](std::size_t i) {
    const auto [d, p] = grid.points[i];
    body(d, p, slots[i]);
  });
  SuiteResult r;
  r.name = name;
  long notes = 0, noted_points = 0;
  for (const auto& s : slots) {
    r.checks += s.checks;
    r.failures.insert(r.failures.end(), s.failures.begin(), s.failures.end());
    notes += s.notes;
    if (s.notes) ++noted_points;
  }
  if (!note_text.empty() && notes)
    r.notes.push_back(note_text + ": " + std::to_string(notes) + " cases at " + std::to_string(noted_points) +
                      " grid points");
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

void Config::validate() const {
  if (d_max < 1 || d_max > 6) throw std::invalid_argument("verify: --d-max must lie in [1, 6]");
  if (p_max < 0 || p_max > 10) throw std::invalid_argument("verify: --p-max must lie in [0, 10]");
  if (samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
}

bool Report::passed() const {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

std::string Report::str() const {
  std::ostringstream os;
  os << std::left << std::setw(10) << "suite" << std::right << std::setw(10) << "checks" << "  status\n";
  for (const auto& s : suites)
    os << std::left << std::setw(10) << s.name << std::right << std::setw(10) << s.checks << "  "
       << (s.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& s : suites) {
    if (!s.passed())
      os << s.name << ": " << s.failures.size() << " failure(s); minimal witness: " << s.failures.front() << "\n";
    for (const auto& n : s.notes) os << s.name << ": note: " << n << "\n";
  }
  os << (passed() ? "verify: PASS" : "verify: FAIL") << "\n";
  return os.str();
}

std::vector<wick::RepTraces> standard_trace_tuples(int d, Statistics s) {
  std::vector<wick::RepTraces> out(3);
  out[0].gl = from_sl_gl1(0, 0, 1, d);
  out[0].g = {1, 1, 0, 0, s};
  out[1].gl = from_sl_gl1(1, 2, 2, d);
  out[1].g = {3, make_rational(1, 2), 2, -1, s};
  out[2].gl = from_sl_gl1(make_rational(-1, 2), make_rational(3, 4), 3, d);
  out[2].g = {2, -2, make_rational(-1, 3), make_rational(5, 2), s};
  return out;
}

SuiteResult sums_suite(const Config& cfg) {
  const auto start = Clock::now();
  jetsums::SweepOptions opts;
  opts.exec = cfg.exec;
  opts.inject_fault = cfg.self_test_fault;
  auto rep = jetsums::verify_identities(cfg.d_max, cfg.p_max, opts);
  SuiteResult r;
  r.name = "sums";
  r.checks = rep.checks;
  r.failures = rep.failures;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

SuiteResult delta_suite(const Config& cfg) {
  using namespace deltacalc;
  Grid grid(std::min(cfg.d_max, 3), std::min(cfg.p_max, 4));
  return sweep("delta", cfg, grid, [&](int d, int p, Slot& slot) {
    auto rng = point_rng(cfg.seed, kDelta, d, p);
    for (int trial = 0; trial < cfg.samples; ++trial) {
      Poly f = draw_poly(rng, d, p + 2, 0.6);
      Poly g = draw_poly(rng, d, p + 2, 0.6);
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu)
          for (PairCase c : {PairCase::i, PairCase::ii, PairCase::iii}) {
            if (c != PairCase::iii && nu != 0) continue;
            if (c == PairCase::i && mu != 0) continue;
            PairSetup s = pair_setup(c, mu, nu);
            Rational oracle = delta_pair_integral(f, g, s.d1, s.d2, s.modes, d, p);
            Rational closed = delta_pair_closed(c, f, g, mu, nu, d, p);
            ++slot.checks;
            if (oracle != closed) {
              static const char* names[] = {"i", "ii", "iii"};
              slot.failures.push_back(at(d, p) + "case " + names[static_cast<int>(c)] + " mu=" +
                                      std::to_string(mu) + " nu=" + std::to_string(nu) + " f=" + f.str() +
                                      " g=" + g.str() + " oracle=" + oracle.get_str() +
                                      " closed=" + closed.get_str());
            }
          }
    }
  });
}

SuiteResult closure_suite(const Config& cfg) {
  using namespace jetreps;
  Grid grid(std::min(cfg.d_max, 2), std::min(cfg.p_max, 3));
  return sweep(
      "closure", cfg, grid,
      [&](int d, int p, Slot& slot) {
        auto rng = point_rng(cfg.seed, kClosure, d, p);
        const auto eps = StructureConstants::so3();
        const auto abel = StructureConstants::abelian(1);
        auto check = [&](bool ok, const std::string& what) {
          ++slot.checks;
          if (!ok) slot.failures.push_back(at(d, p) + what);
        };
        for (int trial = 0; trial < cfg.samples; ++trial) {
          auto xa = draw_polys(rng, 1, d, p + 1, 0.5);
          auto ya = draw_polys(rng, 1, d, p + 1, 0.5);
          auto rep1 = MatrixRep::abelian();
          check(bracket_gauge(gauge_operator(xa, rep1, d, p), gauge_operator(ya, rep1, d, p)) ==
                    gauge_operator(gauge_bracket(xa, ya, abel, d), rep1, d, p),
                "abelian currents X=" + show(xa) + " Y=" + show(ya));

          auto x = draw_polys(rng, 3, d, p + 1, 0.4);
          auto y = draw_polys(rng, 3, d, p + 1, 0.4);
          auto rep3 = MatrixRep::so3_vector();
          check(bracket_gauge(gauge_operator(x, rep3, d, p), gauge_operator(y, rep3, d, p)) ==
                    gauge_operator(gauge_bracket(x, y, eps, d), rep3, d, p),
                "so(3) currents X=" + show(x) + " Y=" + show(y));

          auto xi = draw_polys(rng, d, d, 3, 0.4);
          auto eta = draw_polys(rng, d, d, 3, 0.4);
          auto glrep = MatrixRep::gl_vector(d, make_rational(1, 2));
          check(bracket_diff(diff_operator(xi, glrep, d, p), diff_operator(eta, glrep, d, p)) ==
                    diff_operator(vector_bracket(xi, eta, d), glrep, d, p),
                "vector fields xi=" + show(xi) + " eta=" + show(eta));

          auto lrep = MatrixRep::gl_vector(d, 1).tensor_identity(3);
          auto jrep = MatrixRep::so3_vector().identity_tensor(d);
          auto mixed = bracket_mixed(diff_operator(xi, lrep, d, p), gauge_operator(x, jrep, d, p));
          check(mixed == gauge_operator(scalar_action(xi, x, d), jrep, d, p),
                "mixed bracket xi=" + show(xi) + " X=" + show(x));
          if (!(mixed == gauge_operator(density_action(xi, x, d), jrep, d, p))) ++slot.notes;
        }
      },
      "[L_xi, J_X] differs from J of the weight-one action xi.dX + div(xi) X; the jet realization transports X as "
      "a scalar");
}

SuiteResult charges_suite(const Config& cfg) {
  Grid grid(std::min(cfg.d_max, 2), std::min(cfg.p_max, 3));
  const Rational lambdas[] = {0, make_rational(1, 2), 1, 2};
  return sweep("charges", cfg, grid, [&](int d, int p, Slot& slot) {
    for (const Rational& lambda : lambdas)
      for (Statistics s : {Statistics::bose, Statistics::fermi}) {
        const auto tuples = standard_trace_tuples(d, s);
        for (std::size_t t = 0; t < tuples.size(); ++t) {
          auto measured = wick::extract_charges(d, p, lambda, tuples[t]);
          auto closed = closed_form(d, p, lambda, tuples[t].gl, tuples[t].g);
          auto diff = wick::compare(measured, closed);
          ++slot.checks;
          if (!diff.empty())
            slot.failures.push_back(at(d, p) + "lambda=" + lambda.get_str() + " " + name(s) + " traces#" +
                                    std::to_string(t) + ": " + diff.front());
        }
      }
  });
}

SuiteResult cocycle_suite(const Config& cfg) {
  using namespace cocycles;
  Grid grid(std::min(cfg.d_max, 2), 0);
  return sweep("cocycle", cfg, grid, [&](int d, int p, Slot& slot) {
    auto rng = point_rng(cfg.seed, kCocycle, d, p);
    for (int trial = 0; trial < 5 * cfg.samples; ++trial) {
      LaurentVector q;
      for (int mu = 0; mu < d; ++mu) q.push_back(draw_laurent(rng, -2, 2));
      CocycleArgs v{{}, {}, draw_rational(rng), draw_rational(rng)};
      for (int mu = 0; mu < d; ++mu) {
        v.a.push_back(draw_field(rng, d, 3));
        v.b.push_back(draw_field(rng, d, 3));
      }
      auto rv = antisymmetry_check(CocycleKind::virasoro, v, q);
      ++slot.checks;
      if (!rv.passed())
        slot.failures.push_back(at(d, p) + "virasoro xi=" + show(v.a) + " eta=" + show(v.b) + " q=" + show(q) +
                                " " + rv.str());

      CocycleArgs g{{}, {}, draw_rational(rng), draw_rational(rng)};
      for (int a = 0; a < 3; ++a) {
        g.a.push_back(draw_field(rng, d, 2));
        g.b.push_back(draw_field(rng, d, 2));
      }
      auto rg = antisymmetry_check(CocycleKind::affine, g, q);
      ++slot.checks;
      if (!rg.passed())
        slot.failures.push_back(at(d, p) + "affine X=" + show(g.a) + " Y=" + show(g.b) + " q=" + show(q) + " " +
                                rg.str());
    }
    if (d != 1) return;
    const Rational c4 = 1;
    for (int m = -4; m <= 4; ++m) {
      Rational got = reparam_cocycle(LaurentPoly::monomial(m + 1), LaurentPoly::monomial(1 - m), c4);
      Rational want = Rational(-kVirasoroOrientation * (m * m * m - m)) / 12;
      ++slot.checks;
      if (got != want)
        slot.failures.push_back("reparametrization cocycle m=" + std::to_string(m) + ": " + got.get_str() +
                                " != " + want.get_str());
    }
  });
}

Report run(const Config& cfg) {
  cfg.validate();
  Report r;
  r.suites.push_back(sums_suite(cfg));
  r.suites.push_back(delta_suite(cfg));
  r.suites.push_back(closure_suite(cfg));
  r.suites.push_back(charges_suite(cfg));
  r.suites.push_back(cocycle_suite(cfg));
  return r;
}

}  // namespace jetvir::verify

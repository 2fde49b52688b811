// jetvir: charge tables, verification sweeps, lattice sums and cocycle values.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jetvir/charges.hpp"
#include "jetvir/cocycles.hpp"
#include "jetvir/jetsums.hpp"
#include "jetvir/parse.hpp"
#include "jetvir/verify.hpp"
#include "jetvir/wickcocycle.hpp"

namespace {

using namespace jetvir;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

constexpr int kMaxD = 6;
constexpr int kMaxP = 10;

// Thrown for bad flag values; reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void check_range(int v, int lo, int hi, const char* flag) {
  if (v < lo || v > hi)
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("--format must be text, json or csv");
}

// ---- charges ---------------------------------------------------------------

struct ChargesOpts {
  int d = 1;
  int p = 0;
  std::string lambda = "0";
  std::string kappa = "0";
  long delta_rho = 1;
  std::string y_rho = "0";
  long delta_m = 1;
  std::string y_m = "1";
  std::string z_m = "0";
  std::string w_m = "0";
  std::string statistics = "bose";
  bool measure = false;
  std::string format = "text";
};

int cmd_charges(const ChargesOpts& o) {
  check_range(o.d, 1, kMaxD, "--d");
  check_range(o.p, 0, kMaxP, "--p");
  const Format fmt = parse_format(o.format);
  wick::RepTraces t;
  Statistics stats;
  try {
    stats = parse_statistics(o.statistics);
    t.gl = from_sl_gl1(rational_flag(o.kappa, "--kappa"), rational_flag(o.y_rho, "--y-rho"), o.delta_rho, o.d);
    t.g = {o.delta_m, rational_flag(o.y_m, "--y-m"), rational_flag(o.z_m, "--z-m"), rational_flag(o.w_m, "--w-m"),
           stats};
    t.g.validate();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Rational lambda = rational_flag(o.lambda, "--lambda");
  const ChargeSet cs = closed_form(o.d, o.p, lambda, t.gl, t.g);

  std::optional<wick::MeasuredCharges> m;
  bool all_match = true;
  if (o.measure) {
    m = wick::extract_charges(o.d, o.p, lambda, t);
    all_match = wick::compare(*m, cs).empty();
  }
  auto measured = [&](int i) -> std::optional<Rational> { return m ? (*m)[i] : std::nullopt; };

  if (fmt == Format::json) {
    json j = json::parse(to_json(cs));
    if (m) {
      json mj = json::object();
      for (int i = 1; i <= 8; ++i)
        if (measured(i)) mj["c" + std::to_string(i)] = to_fraction_string(*measured(i));
      if (m->c1_plus_c2) mj["c1+c2"] = to_fraction_string(*m->c1_plus_c2);
      j["measured"] = mj;
      j["match"] = all_match;
    }
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << (m ? "charge,closed,measured,match\n" : "charge,closed\n");
    for (int i = 1; i <= 8; ++i) {
      std::cout << "c" << i << "," << cs[i].get_str();
      if (m) {
        auto v = measured(i);
        std::cout << "," << (v ? v->get_str() : "") << "," << (v ? (*v == cs[i] ? "yes" : "no") : "");
      }
      std::cout << "\n";
    }
    if (m && m->c1_plus_c2)
      std::cout << "c1+c2," << Rational(cs[1] + cs[2]).get_str() << "," << m->c1_plus_c2->get_str() << ","
                << (*m->c1_plus_c2 == cs[1] + cs[2] ? "yes" : "no") << "\n";
  } else {
    std::cout << "d=" << o.d << " p=" << o.p << " lambda=" << lambda.get_str() << " statistics=" << name(stats)
              << "\n";
    std::cout << std::left << std::setw(8) << "charge" << std::setw(16) << "closed";
    if (m) std::cout << std::setw(16) << "measured" << "match";
    std::cout << "\n";
    auto row = [&](const std::string& label, const Rational& closed, const std::optional<Rational>& got) {
      std::cout << std::left << std::setw(8) << label << std::setw(16) << closed.get_str();
      if (m) std::cout << std::setw(16) << (got ? got->get_str() : "-") << (got ? (*got == closed ? "yes" : "NO") : "");
      std::cout << "\n";
    };
    for (int i = 1; i <= 8; ++i) row("c" + std::to_string(i), cs[i], measured(i));
    if (m && m->c1_plus_c2) row("c1+c2", cs[1] + cs[2], m->c1_plus_c2);
  }
  return all_match ? kOk : kVerifyFailed;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
  verify::Config cfg;
  bool serial = false;
};

int cmd_verify(VerifyOpts o) {
  if (o.serial) o.cfg.exec = Execution::serial;
  try {
    o.cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const verify::Report r = verify::run(o.cfg);
  std::cout << r.str();
  return r.passed() ? kOk : kVerifyFailed;
}

// ---- sums ------------------------------------------------------------------

struct SumsOpts {
  int d = 1;
  int p = 0;
  std::string format = "text";
};

int cmd_sums(const SumsOpts& o) {
  check_range(o.d, 1, kMaxD, "--d");
  check_range(o.p, 0, kMaxP, "--p");
  const Format fmt = parse_format(o.format);
  struct Row {
    jetsums::SumKind s;
    Integer closed, brute;
  };
  std::vector<Row> rows;
  for (jetsums::Kind k : jetsums::kAllKinds) {
    const bool pair = k == jetsums::Kind::D || k == jetsums::Kind::E;
    if (pair && o.d < 2) continue;
    jetsums::SumKind s{k, 0, pair ? 1 : 0};
    rows.push_back({s, jetsums::sum_closed(s, o.d, o.p), jetsums::sum_brute(s, o.d, o.p, Execution::parallel)});
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.closed == r.brute;

  if (fmt == Format::json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"sum", jetsums::name(r.s.kind)},
                     {"mu", r.s.mu},
                     {"nu", r.s.nu},
                     {"closed", r.closed.get_str()},
                     {"brute", r.brute.get_str()},
                     {"match", r.closed == r.brute}});
    std::cout << json{{"d", o.d}, {"p", o.p}, {"rows", arr}}.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "sum,mu,nu,closed,brute,match\n";
    for (const auto& r : rows)
      std::cout << jetsums::name(r.s.kind) << "," << r.s.mu << "," << r.s.nu << "," << r.closed.get_str() << ","
                << r.brute.get_str() << "," << (r.closed == r.brute ? "yes" : "no") << "\n";
  } else {
    std::cout << "d=" << o.d << " p=" << o.p << "\n";
    std::cout << std::left << std::setw(6) << "sum" << std::setw(8) << "mu,nu" << std::setw(14) << "closed"
              << std::setw(14) << "brute" << "match\n";
    for (const auto& r : rows) {
      std::string dirs = std::to_string(r.s.mu);
      if (r.s.kind == jetsums::Kind::D || r.s.kind == jetsums::Kind::E) dirs += "," + std::to_string(r.s.nu);
      if (r.s.kind == jetsums::Kind::A) dirs = "-";
      std::cout << std::left << std::setw(6) << jetsums::name(r.s.kind) << std::setw(8) << dirs << std::setw(14)
                << r.closed.get_str() << std::setw(14) << r.brute.get_str() << (r.closed == r.brute ? "yes" : "NO")
                << "\n";
    }
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- cocycle ---------------------------------------------------------------

struct CocycleOpts {
  std::string kind = "virasoro";
  int d = 1;
  std::string xi, eta, x, y, f, g, traj;
  std::vector<std::string> c = std::vector<std::string>(8, "1");
  int privileged = 0;
  bool antisymmetry = false;
};

std::string need(const std::string& v, const char* flag, const std::string& kind) {
  if (v.empty()) throw UsageError("cocycle --kind " + kind + " requires " + flag);
  return v;
}

int cmd_cocycle(const CocycleOpts& o) {
  using namespace cocycles;
  check_range(o.d, 1, kMaxD, "--d");
  Rational c[9];
  for (int i = 1; i <= 8; ++i) c[i] = rational_flag(o.c[i - 1], ("--c" + std::to_string(i)).c_str());

  auto field = [&](const std::string& v, const char* flag) { return parse_field_vector(need(v, flag, o.kind), o.d); };
  auto traj = [&] { return parse_trajectory(need(o.traj, "--traj", o.kind), o.d); };
  auto laurent = [&](const std::string& v, const char* flag) { return parse_laurent(need(v, flag, o.kind)); };

  if (o.antisymmetry) {
    CocycleKind kind;
    CocycleArgs args;
    if (o.kind == "virasoro") {
      kind = CocycleKind::virasoro;
      args = {field(o.xi, "--xi"), field(o.eta, "--eta"), c[1], c[2]};
    } else if (o.kind == "affine") {
      kind = CocycleKind::affine;
      args = {field(o.x, "--x"), field(o.y, "--y"), c[5], c[8]};
    } else {
      throw UsageError("--antisymmetry applies to --kind virasoro or affine");
    }
    auto r = antisymmetry_check(kind, args, traj());
    std::cout << r.str() << "\n" << (r.passed() ? "antisymmetric" : "NOT antisymmetric") << "\n";
    return r.passed() ? kOk : kVerifyFailed;
  }

  Rational value;
  if (o.kind == "virasoro") {
    value = virasoro_cocycle(field(o.xi, "--xi"), field(o.eta, "--eta"), traj(), c[1], c[2]);
  } else if (o.kind == "affine") {
    value = affine_cocycle(field(o.x, "--x"), field(o.y, "--y"), traj(), c[5], c[8], o.privileged);
  } else if (o.kind == "mixed") {
    value = mixed_cocycle(field(o.xi, "--xi"), field(o.x, "--x"), traj(), c[7], o.privileged);
  } else if (o.kind == "reparam") {
    value = reparam_cocycle(laurent(o.f, "--f"), laurent(o.g, "--g"), c[4]);
  } else if (o.kind == "reparam-vector") {
    value = reparam_vector_cocycle(laurent(o.f, "--f"), field(o.xi, "--xi"), traj(), c[3]);
  } else if (o.kind == "reparam-current") {
    value = reparam_current_cocycle(laurent(o.f, "--f"), field(o.x, "--x"), traj(), c[6], o.privileged);
  } else {
    throw UsageError("--kind must be virasoro, affine, mixed, reparam, reparam-vector or reparam-current");
  }
  std::cout << value.get_str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-jet charge and cocycle calculator"};
  app.require_subcommand(1);

  ChargesOpts co;
  auto* charges = app.add_subcommand("charges", "Closed-form abelian charges c1..c8");
  charges->add_option("--d", co.d, "Spatial dimension")->capture_default_str();
  charges->add_option("--p", co.p, "Jet order")->capture_default_str();
  charges->add_option("--lambda", co.lambda, "Conformal weight of the fields")->capture_default_str();
  charges->add_option("--kappa", co.kappa, "Density weight of the gl(d) representation")->capture_default_str();
  charges->add_option("--delta-rho", co.delta_rho, "Dimension of the gl(d) representation")->capture_default_str();
  charges->add_option("--y-rho", co.y_rho, "sl(d) Casimir of the gl(d) representation")->capture_default_str();
  charges->add_option("--delta-m", co.delta_m, "Dimension of the g representation")->capture_default_str();
  charges->add_option("--y-m", co.y_m, "tr M^a M^b = y_m delta^ab + ...")->capture_default_str();
  charges->add_option("--z-m", co.z_m, "tr M^a = z_m delta^a")->capture_default_str();
  charges->add_option("--w-m", co.w_m, "tr M^a M^b = ... + w_m delta^a delta^b")->capture_default_str();
  charges->add_option("--statistics", co.statistics, "bose or fermi")->capture_default_str();
  charges->add_flag("--measure", co.measure, "Also measure the charges by double Wick contraction");
  charges->add_option("--format", co.format, "text, json or csv")->capture_default_str();

  VerifyOpts vo;
  auto* ver = app.add_subcommand("verify", "Run every verification suite");
  ver->add_option("--d-max", vo.cfg.d_max, "Largest dimension")->capture_default_str();
  ver->add_option("--p-max", vo.cfg.p_max, "Largest jet order")->capture_default_str();
  ver->add_option("--seed", vo.cfg.seed, "Seed for random property inputs")->capture_default_str();
  ver->add_option("--samples", vo.cfg.samples, "Random samples per grid point")->capture_default_str();
  ver->add_flag("--self-test-fault", vo.cfg.self_test_fault, "Perturb one closed form; the sweep must fail");
  ver->add_flag("--serial", vo.serial, "Use the serial reference path");

  SumsOpts so;
  auto* sums = app.add_subcommand("sums", "Lattice sums A..E, closed form against enumeration");
  sums->add_option("--d", so.d, "Spatial dimension")->capture_default_str();
  sums->add_option("--p", so.p, "Jet order")->capture_default_str();
  sums->add_option("--format", so.format, "text, json or csv")->capture_default_str();

  CocycleOpts ko;
  auto* coc = app.add_subcommand("cocycle", "Evaluate a residue-form extension term");
  coc->add_option("--kind", ko.kind, "virasoro, affine, mixed, reparam, reparam-vector, reparam-current")
      ->capture_default_str();
  coc->add_option("--d", ko.d, "Spatial dimension")->capture_default_str();
  coc->add_option("--xi", ko.xi, "Vector field components, ';'-separated");
  coc->add_option("--eta", ko.eta, "Second vector field");
  coc->add_option("--x", ko.x, "Gauge function components, ';'-separated");
  coc->add_option("--y", ko.y, "Second gauge function");
  coc->add_option("--f", ko.f, "Reparametrization f(z)");
  coc->add_option("--g", ko.g, "Reparametrization g(z)");
  coc->add_option("--traj", ko.traj, "Trajectory q(z), one component per dimension");
  for (int i = 1; i <= 8; ++i)
    coc->add_option("--c" + std::to_string(i), ko.c[i - 1], "Charge c" + std::to_string(i))->capture_default_str();
  coc->add_option("--privileged", ko.privileged, "Privileged g direction")->capture_default_str();
  coc->add_flag("--antisymmetry", ko.antisymmetry, "Check Z(a,b) + Z(b,a) = 0 instead of printing Z(a,b)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*charges) return cmd_charges(co);
    if (*ver) return cmd_verify(vo);
    if (*sums) return cmd_sums(so);
    if (*coc) return cmd_cocycle(ko);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "degree cap: " << e.what() << " (raise JETVIR_MAX_DEGREE)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

#pragma once

// The verification sweep behind `jetvir verify`. Five suites run in order:
// lattice-sum identities, delta pair products, classical closure, measured
// versus closed-form charges and cocycle antisymmetry. Grid points run in
// parallel; every point draws its random inputs from its own generator
// seeded by (seed, suite, d, p), so serial and parallel runs agree exactly.

#include <string>
#include <vector>

#include "jetvir/parallel.hpp"
#include "jetvir/wickcocycle.hpp"

namespace jetvir::verify {

struct Config {
  int d_max = 3;
  int p_max = 4;
  unsigned seed = 20240611;
  /// Random samples per grid point in the property suites.
  int samples = 4;
  /// Perturbs one closed-form binomial so the sweep must fail.
  bool self_test_fault = false;
  Execution exec = Execution::parallel;

  /// Throws std::invalid_argument outside 1 <= d_max <= 6, 0 <= p_max <= 10,
  /// samples >= 1.
  void validate() const;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  /// Failures ordered by grid point; the first one is the minimal witness.
  std::vector<std::string> failures;
  /// Informational lines that do not affect the verdict.
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct Report {
  std::vector<SuiteResult> suites;
  bool passed() const;
  /// Per-suite table plus the minimal witness of each failing suite.
  std::string str() const;
};

SuiteResult sums_suite(const Config& cfg);
SuiteResult delta_suite(const Config& cfg);
SuiteResult closure_suite(const Config& cfg);
SuiteResult charges_suite(const Config& cfg);
SuiteResult cocycle_suite(const Config& cfg);

Report run(const Config& cfg);

/// Three trace tuples per statistics: unit traces, and two with nonzero
/// tr M^a and w_m.
std::vector<wick::RepTraces> standard_trace_tuples(int d, Statistics s);

}  // namespace jetvir::verify

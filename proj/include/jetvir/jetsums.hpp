#pragma once

// The five lattice sums over {m : |m| <= p}:
//
//   A = sum 1                = binom(d+p, d)
//   B = sum m_mu             = binom(d+p, d+1)
//   C = sum m_mu^2           = binom(d+p, d+2) + binom(d+p+1, d+2)
//   D = sum m_mu m_nu        = binom(d+p, d+2)      (mu != nu)
//   E = sum m_mu (m_nu + 1)  = binom(d+p+1, d+2)    (mu != nu)
//
// Closed forms and brute-force enumeration are kept as separate routes so
// that comparing them is a real check.

#include <string>
#include <vector>

#include "jetvir/parallel.hpp"
#include "jetvir/rational.hpp"

namespace jetvir::jetsums {

enum class Kind { A, B, C, D, E };

const char* name(Kind k);
inline constexpr Kind kAllKinds[] = {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E};

struct SumKind {
  Kind kind = Kind::A;
  int mu = 0;
  int nu = 1;
};

/// Throws std::invalid_argument for d < 1, p < 0, directions outside [0, d),
/// or D/E with mu == nu.
void validate(const SumKind& s, int d, int p);

Integer sum_closed(const SumKind& s, int d, int p);

/// Direct enumeration of the lattice. The parallel path splits the lattice
/// across OpenMP threads with per-thread partial sums.
Integer sum_brute(const SumKind& s, int d, int p, Execution exec = Execution::serial);

struct IdentityReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SweepOptions {
  Execution exec = Execution::parallel;
  /// Harness self-test: perturbs the closed form of A_{1,0} by one.
  bool inject_fault = false;
};

/// Closed = brute for every kind, dimension d <= d_max, order p <= p_max and
/// direction pair; also E = D + B, C = E + D, D symmetry and the recursion
/// B_{d,p} = B_{d,p-1} + binom(d+p-1, d).
IdentityReport verify_identities(int d_max, int p_max, const SweepOptions& opts = {});

}  // namespace jetvir::jetsums

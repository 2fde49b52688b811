#include "jetvir/jetsums.hpp"

#include <sstream>
#include <stdexcept>

#include "jetvir/multiindex.hpp"

namespace jetvir::jetsums {

const char* name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::E: return "E";
  }
  return "?";
}

namespace {

bool uses_mu(Kind k) { return k != Kind::A; }
bool uses_nu(Kind k) { return k == Kind::D || k == Kind::E; }

long summand(const SumKind& s, const MultiIndex& m) {
  switch (s.kind) {
    case Kind::A: return 1;
    case Kind::B: return m[s.mu];
    case Kind::C: return static_cast<long>(m[s.mu]) * m[s.mu];
    case Kind::D: return static_cast<long>(m[s.mu]) * m[s.nu];
    case Kind::E: return static_cast<long>(m[s.mu]) * (m[s.nu] + 1);
  }
  return 0;
}

}  // namespace

void validate(const SumKind& s, int d, int p) {
  if (d < 1) throw std::invalid_argument("lattice sum: dimension must be >= 1");
  if (p < 0) throw std::invalid_argument("lattice sum: jet order must be >= 0");
  if (uses_mu(s.kind) && (s.mu < 0 || s.mu >= d)) throw std::invalid_argument("lattice sum: mu out of range");
  if (uses_nu(s.kind)) {
    if (s.nu < 0 || s.nu >= d) throw std::invalid_argument("lattice sum: nu out of range");
    if (s.mu == s.nu) throw std::invalid_argument(std::string("lattice sum ") + name(s.kind) + " requires mu != nu");
  }
}

Integer sum_closed(const SumKind& s, int d, int p) {
  validate(s, d, p);
  switch (s.kind) {
    case Kind::A: return binomial(d + p, d);
    case Kind::B: return binomial(d + p, d + 1);
    case Kind::C: return binomial(d + p, d + 2) + binomial(d + p + 1, d + 2);
    case Kind::D: return binomial(d + p, d + 2);
    case Kind::E: return binomial(d + p + 1, d + 2);
  }
  return 0;
}

Integer sum_brute(const SumKind& s, int d, int p, Execution exec) {
  validate(s, d, p);
  const std::vector<MultiIndex> lattice = enumerate(d, p);
  if (exec == Execution::serial) {
    Integer total = 0;
    for (const auto& m : lattice) total += summand(s, m);
    return total;
  }
  Integer total = 0;
  const long n = static_cast<long>(lattice.size());
#pragma omp parallel
  {
    Integer local = 0;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) local += summand(s, lattice[static_cast<std::size_t>(i)]);
#pragma omp critical(jetsums_reduce)
    total += local;
  }
  return total;
}

namespace {

struct GridPoint {
  int d;
  int p;
};

}  // namespace

IdentityReport verify_identities(int d_max, int p_max, const SweepOptions& opts) {
  std::vector<GridPoint> grid;
  for (int d = 1; d <= d_max; ++d)
    for (int p = 0; p <= p_max; ++p) grid.push_back({d, p});

  std::vector<IdentityReport> partial(grid.size());
  for_each_index(grid.size(), opts.exec, [&](std::size_t i) {
    const auto [d, p] = grid[i];
    IdentityReport& rep = partial[i];
    auto fail = [&](const std::string& what) {
      std::ostringstream os;
      os << "d=" << d << " p=" << p << ": " << what;
      rep.failures.push_back(os.str());
    };
    auto closed = [&](const SumKind& s) {
      Integer v = sum_closed(s, d, p);
      if (opts.inject_fault && s.kind == Kind::A && d == 1 && p == 0) v += 1;
      return v;
    };

    for (Kind k : kAllKinds) {
      for (int mu = 0; mu < d; ++mu) {
        for (int nu = 0; nu < d; ++nu) {
          SumKind s{k, mu, nu};
          if (uses_nu(k) && mu == nu) continue;
          if (!uses_nu(k) && nu != 0) continue;
          if (!uses_mu(k) && mu != 0) continue;
          Integer c = closed(s);
          Integer b = sum_brute(s, d, p, Execution::serial);
          ++rep.checks;
          if (c != b) {
            fail(std::string(name(k)) + "(mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu) + ") closed " +
                 c.get_str() + " != brute " + b.get_str());
          }
          if (k == Kind::D) {
            ++rep.checks;
            if (sum_brute(SumKind{k, nu, mu}, d, p) != b) fail("D not symmetric in (mu, nu)");
          }
          if (k == Kind::E) {
            ++rep.checks;
            Integer dd = sum_brute(SumKind{Kind::D, mu, nu}, d, p);
            Integer bb = sum_brute(SumKind{Kind::B, mu, 0}, d, p);
            if (b != dd + bb) fail("E != D + B");
          }
        }
      }
    }
    // Combinations of closed forms used when merging the mu = nu case.
    const Integer cc = closed({Kind::C, 0, 1});
    const Integer dd = binomial(d + p, d + 2);
    const Integer ee = binomial(d + p + 1, d + 2);
    ++rep.checks;
    if (cc != ee + dd) fail("C != E + D");
    if (p >= 1) {
      ++rep.checks;
      if (closed({Kind::B, 0, 1}) != sum_brute({Kind::B, 0, 1}, d, p - 1) + binomial(d + p - 1, d))
        fail("B recursion B_{d,p} = B_{d,p-1} + binom(d+p-1,d) violated");
    }
  });

  IdentityReport total;
  for (auto& r : partial) {
    total.checks += r.checks;
    for (auto& f : r.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

}  // namespace jetvir::jetsums

#include "doctest.h"

#include "jetvir/jetsums.hpp"

using namespace jetvir;
using namespace jetvir::jetsums;

TEST_CASE("closed forms in one dimension") {
  CHECK(sum_closed({Kind::A, 0, 0}, 1, 3) == 4);
  CHECK(sum_closed({Kind::B, 0, 0}, 1, 3) == 6);
  CHECK(sum_closed({Kind::C, 0, 0}, 1, 2) == 5);
}

TEST_CASE("brute sums on a small lattice") {
  CHECK(sum_brute({Kind::B, 0, 0}, 2, 2) == 4);
  CHECK(sum_brute({Kind::D, 0, 1}, 2, 2) == 1);
  CHECK(sum_brute({Kind::E, 0, 1}, 2, 2) == 5);
  CHECK(sum_closed({Kind::E, 0, 1}, 2, 2) == 5);
}

TEST_CASE("D and E reject mu == nu") {
  CHECK_THROWS_AS(sum_closed({Kind::D, 1, 1}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(sum_brute({Kind::E, 0, 0}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(sum_closed({Kind::A, 0, 0}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(sum_closed({Kind::B, 2, 0}, 2, 2), std::invalid_argument);
}

TEST_CASE("p = 0 lattice holds only the zero index") {
  CHECK(sum_closed({Kind::A, 0, 0}, 1, 0) == 1);
  CHECK(sum_closed({Kind::B, 0, 0}, 1, 0) == 0);
  CHECK(sum_closed({Kind::C, 0, 0}, 1, 0) == 0);
  CHECK(sum_closed({Kind::D, 0, 1}, 2, 0) == 0);
  CHECK(sum_closed({Kind::E, 0, 1}, 2, 0) == 0);
  CHECK(verify_identities(1, 0).passed());
}

TEST_CASE("parallel brute sum matches serial") {
  for (Kind k : kAllKinds)
    for (int d = 2; d <= 4; ++d)
      for (int p = 0; p <= 6; ++p) {
        SumKind s{k, 0, 1};
        CHECK(sum_brute(s, d, p, Execution::parallel) == sum_brute(s, d, p, Execution::serial));
      }
}

TEST_CASE("identity sweep") {
  auto serial = verify_identities(3, 5, {Execution::serial, false});
  auto parallel = verify_identities(3, 5);
  CHECK(serial.passed());
  CHECK(parallel.passed());
  CHECK(serial.checks == parallel.checks);
  CHECK(serial.checks > 0);
}

TEST_CASE("injected fault is caught") {
  auto r = verify_identities(1, 0, {Execution::parallel, true});
  CHECK_FALSE(r.passed());
}

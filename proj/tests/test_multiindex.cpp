#include "doctest.h"

#include <random>

#include "jetvir/multiindex.hpp"

using namespace jetvir;

TEST_CASE("multiindex add is componentwise") {
  CHECK(add({1, 0}, {0, 2}) == MultiIndex{1, 2});
  CHECK(add({0, 0}, {3, 1}) == MultiIndex{3, 1});
  CHECK(add({2, 1}, {1, 1}) == MultiIndex{3, 2});
  CHECK(add({2, 1}, {1, 1}).degree() == 5);
  CHECK_THROWS_AS(add({1}, {1, 0}), DimensionMismatch);
}

TEST_CASE("multiindex subtract requires n <= m") {
  CHECK(subtract({3, 2}, {1, 2}) == MultiIndex{2, 0});
  CHECK_THROWS_AS(subtract({1, 0}, {0, 1}), std::domain_error);
}

TEST_CASE("factorial of a multi-index") {
  CHECK(factorial(MultiIndex{0, 0}) == 1);
  CHECK(factorial(MultiIndex{3, 2}) == 12);
  CHECK(factorial(MultiIndex{1, 1, 1}) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(factorial(25) == Integer("15511210043330985984000000"));
}

TEST_CASE("binomial of multi-indices zero-extends") {
  CHECK(binomial(MultiIndex{2, 1}, MultiIndex{1, 1}) == 2);
  CHECK(binomial(MultiIndex{4, 3}, MultiIndex{4, 3}) == 1);
  CHECK(binomial(MultiIndex{1, 0}, MultiIndex{0, 2}) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
}

TEST_CASE("enumerate is graded-lex with binomial length") {
  auto e = enumerate(2, 1);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == MultiIndex{0, 0});
  CHECK(e[1] == MultiIndex{1, 0});
  CHECK(e[2] == MultiIndex{0, 1});

  auto f = enumerate(1, 3);
  REQUIRE(f.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(f[i] == MultiIndex{i});

  CHECK(enumerate(3, 0) == std::vector<MultiIndex>{MultiIndex{0, 0, 0}});
  CHECK_THROWS(enumerate(0, 2));

  for (int d = 1; d <= 5; ++d)
    for (int p = 0; p <= 8; ++p) {
      auto lattice = enumerate(d, p);
      CHECK(Integer(static_cast<unsigned long>(lattice.size())) == binomial(d + p, d));
      for (std::size_t i = 1; i < lattice.size(); ++i) CHECK(lattice[i - 1] < lattice[i]);
    }
}

TEST_CASE("(m + mu)! = (m + mu)_mu * m!") {
  for (const auto& m : enumerate(3, 4))
    for (int mu = 0; mu < 3; ++mu) {
      MultiIndex up = m + MultiIndex::unit(3, mu);
      CHECK(factorial(up) == Integer(up[mu]) * factorial(m));
    }
}

TEST_CASE("add is associative and commutative") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    MultiIndex a{dist(rng), dist(rng), dist(rng)};
    MultiIndex b{dist(rng), dist(rng), dist(rng)};
    MultiIndex c{dist(rng), dist(rng), dist(rng)};
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

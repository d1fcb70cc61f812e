#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "tetra/coeffs.hpp"
#include "tetra/errors.hpp"

using namespace tetra;

TEST_CASE("binomial: values and zero convention") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial agrees with the factorial oracle") {
  for (index_t n = 0; n <= 70; ++n) {
    for (index_t j = -2; j <= n + 2; ++j) {
      REQUIRE_MESSAGE(binomial(n, j) == oracle::binomial_factorial(n, j), "n=" << n << " j=" << j);
    }
  }
}

TEST_CASE("trinomial: tabulated values") {
  CHECK(trinomial({1, 0, 1, 0}) == 1);
  CHECK(trinomial({2, 1, 1, 0}) == 2);
  CHECK(trinomial({4, 2, 1, 1}) == 12);
  CHECK(trinomial({3, 1, 1, 1}) == 6);
}

TEST_CASE("trinomial rejects invalid triples") {
  CHECK_THROWS_AS(trinomial({3, 1, 1, 0}), DomainError);
  CHECK_THROWS_AS(trinomial({1, 1, 1, -1}), DomainError);
  CHECK_THROWS_AS(trinomial({-1, 0, 0, -1}), DomainError);
}

TEST_CASE("trinomial_or_zero") {
  CHECK(trinomial_or_zero(1, 1, 1, -1) == 0);
  CHECK(trinomial_or_zero(2, 0, 0, 2) == 1);
  CHECK(trinomial_or_zero(3, 1, 1, 1) == 6);
  CHECK(trinomial_or_zero(3, 1, 1, 0) == 0);
  CHECK_THROWS_AS(trinomial_or_zero(-1, 0, 0, 0), DomainError);
}

TEST_CASE("trinomial properties over n <= 24") {
  for (index_t n = 0; n <= 24; ++n) {
    CHECK(trinomial({n, n, 0, 0}) == 1);
    CHECK(trinomial({n, 0, n, 0}) == 1);
    CHECK(trinomial({n, 0, 0, n}) == 1);
    for (index_t p = 0; p <= n; ++p) {
      for (index_t q = 0; p + q <= n; ++q) {
        const index_t r = n - p - q;
        const BigInt v = trinomial({n, p, q, r});
        REQUIRE(v == oracle::trinomial_factorial(n, p, q, r));
        // every permutation of (p, q, r)
        CHECK(v == trinomial({n, p, r, q}));
        CHECK(v == trinomial({n, q, p, r}));
        CHECK(v == trinomial({n, q, r, p}));
        CHECK(v == trinomial({n, r, p, q}));
        CHECK(v == trinomial({n, r, q, p}));
        if (n >= 1) {
          // Three-term rule inside, two-term rule on a face: the
          // zero-extended form covers both.
          const BigInt sum = trinomial_or_zero(n - 1, p - 1, q, r) +
                             trinomial_or_zero(n - 1, p, q - 1, r) +
                             trinomial_or_zero(n - 1, p, q, r - 1);
          CHECK(v == sum);
        }
      }
    }
  }
}

TEST_CASE("tetra_level layout and values") {
  const TetraLevel l0 = tetra_level(0);
  CHECK(l0.entries().size() == 1);
  CHECK(l0.at(0, 0) == 1);

  const TetraLevel l2 = tetra_level(2);
  CHECK(l2.at(0, 0) == 1);
  CHECK(l2.at(0, 1) == 2);
  CHECK(l2.at(1, 1) == 2);
  CHECK(l2.at(0, 2) == 1);
  CHECK(l2.at(1, 2) == 2);
  CHECK(l2.at(2, 2) == 1);

  CHECK(tetra_level(3).at(1, 2) == 6);
  CHECK_THROWS_AS(l2.at(3, 2), DomainError);
  CHECK_THROWS_AS(l2.row(3), DomainError);
  CHECK_THROWS_AS(tetra_level(-1), DomainError);
}

TEST_CASE("tetra_level invariants for k <= 30") {
  BigInt three_pow = 1;
  for (index_t k = 0; k <= 30; ++k) {
    const TetraLevel level(k);
    BigInt sum = 0;
    for (const auto& v : level.entries()) {
      CHECK(v > 0);
      sum += v;
    }
    CHECK(sum == three_pow);
    CHECK(level.at(0, 0) == 1);
    CHECK(level.at(0, k) == 1);
    CHECK(level.at(k, k) == 1);
    for (index_t r = 0; r <= k; ++r) {
      CHECK(level.at(0, r) == binomial(k, r));       // s = 0 edge
      CHECK(level.at(r, r) == binomial(k, r));       // s = r edge
      CHECK(level.at(r, k) == binomial(k, r));       // r = k edge
    }
    three_pow *= 3;
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "dhh/numbers.hpp"
#include "dhh/series.hpp"
#include "test_support.hpp"

using namespace dhh;
namespace oracle = dhh::testing::oracle;
using dhh::testing::sample_points;

namespace {

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
LambdaPoly poly(std::vector<Rational> c) { return LambdaPoly(std::move(c)); }

/// Agreement at deg + 1 points proves a polynomial identity.
template <typename Oracle>
void check_against_points(const LambdaPoly& p, int max_degree, Oracle&& at) {
  REQUIRE(p.degree() <= max_degree);
  for (const Rational& x : sample_points(static_cast<std::size_t>(max_degree) + 1)) {
    CHECK(p(x) == at(x));
  }
}

}  // namespace

TEST_SUITE("harmonic") {
  TEST_CASE("classical harmonic numbers") {
    CHECK(harmonic(0) == Rational(0));
    CHECK(harmonic(1) == Rational(1));
    CHECK(harmonic(4) == q(25, 12));
    for (long n = 0; n <= 60; ++n) CHECK(harmonic(n) == oracle::harmonic(n));
  }

  TEST_CASE("degenerate harmonic numbers") {
    CHECK(degen_harmonic(0).is_zero());
    CHECK(degen_harmonic(1) == LambdaPoly(Rational(1)));
    CHECK(degen_harmonic(2) == poly({q(3, 2), q(-1, 2)}));
    CHECK(degen_harmonic(3) == poly({q(11, 6), Rational(-1), q(1, 6)}));
  }

  TEST_CASE("degenerate harmonic numbers match the 1/lambda binomial form") {
    for (long n = 1; n <= 25; ++n) {
      const LambdaPoly h = degen_harmonic(n);
      CHECK(h(Rational(0)) == oracle::harmonic(n));
      if (n >= 2) CHECK(h.degree() == n - 1);
      check_against_points(h, static_cast<int>(n) - 1,
                           [n](const Rational& x) { return oracle::degen_harmonic(n, x); });
    }
  }

  TEST_CASE("pointwise degenerate harmonic numbers") {
    for (long n = 0; n <= 30; ++n)
      for (const Rational& x : {Rational(0), q(1, 2), q(-7, 3), Rational(4)})
        CHECK(degen_harmonic(n, x) == oracle::degen_harmonic(n, x));
    CHECK_THROWS_AS(degen_harmonic(-1, q(1, 2)), PreconditionError);
  }
}

TEST_SUITE("hyperharmonic") {
  TEST_CASE("examples") {
    CHECK(hyperharmonic(2, 2) == q(5, 2));
    CHECK(hyperharmonic(2, 2, HyperRoute::closed) == q(5, 2));
    CHECK(hyperharmonic(0, 3) == Rational(0));
    CHECK(hyperharmonic(3, 0) == q(1, 3));
    CHECK_THROWS_AS(hyperharmonic(0, 0), PreconditionError);
    CHECK_THROWS_AS(hyperharmonic(3, 0, HyperRoute::closed), PreconditionError);
  }

  TEST_CASE("recurrence and closed routes agree with brute force") {
    for (long r = 1; r <= 5; ++r) {
      for (long n = 0; n <= 15; ++n) {
        const Rational rec = hyperharmonic(n, r);
        CHECK(rec == hyperharmonic(n, r, HyperRoute::closed));
        if (n >= 1) CHECK(rec == oracle::hyper(n, r));
      }
    }
  }

  TEST_CASE("degenerate examples") {
    CHECK(degen_hyperharmonic(1, 2) == LambdaPoly(Rational(1)));
    CHECK(degen_hyperharmonic(2, 2) == poly({q(5, 2), q(-1, 2)}));
    CHECK(degen_hyperharmonic(0, 5).is_zero());
    for (auto route : {DegenRoute::recurrence, DegenRoute::generating_function, DegenRoute::closed}) {
      CAPTURE(to_string(route));
      CHECK(degen_hyperharmonic(2, 2, route) == poly({q(5, 2), q(-1, 2)}));
      CHECK(degen_hyperharmonic(0, 3, route).is_zero());
    }
    CHECK_THROWS_AS(degen_hyperharmonic(3, 0), PreconditionError);
  }

  TEST_CASE("frozen symbolic values") {
    // Expanded independently with sympy from the nested-sum definition.
    CHECK(degen_hyperharmonic(2, 3) == poly({q(7, 2), q(-1, 2)}));
    CHECK(degen_hyperharmonic(3, 2) == poly({q(13, 3), q(-3, 2), q(1, 6)}));
    CHECK(degen_hyperharmonic(5, 3) ==
          poly({q(459, 20), q(-235, 24), q(49, 24), q(-5, 24), q(1, 120)}));
  }

  TEST_CASE("three routes agree for n <= 40, r <= 6") {
    for (long r = 1; r <= 6; ++r) {
      for (long n = 1; n <= 40; ++n) {
        const LambdaPoly rec = degen_hyperharmonic(n, r, DegenRoute::recurrence);
        CHECK(rec == degen_hyperharmonic(n, r, DegenRoute::generating_function));
        CHECK(rec == degen_hyperharmonic(n, r, DegenRoute::closed));
      }
    }
  }

  TEST_CASE("pointwise oracle and degree bound") {
    for (long r = 1; r <= 3; ++r) {
      for (long n = 1; n <= 10; ++n) {
        check_against_points(degen_hyperharmonic(n, r), static_cast<int>(n) - 1,
                             [n, r](const Rational& x) { return oracle::degen_hyper(n, r, x); });
      }
    }
  }

  TEST_CASE("telescoping") {
    for (long r = 2; r <= 5; ++r) {
      for (long n = 1; n <= 30; ++n) {
        CHECK(degen_hyperharmonic(n, r) - degen_hyperharmonic(n - 1, r) ==
              degen_hyperharmonic(n, r - 1));
      }
    }
  }

  TEST_CASE("classical limit") {
    for (long r = 1; r <= 5; ++r) {
      for (long n = 0; n <= 100; ++n) {
        CHECK(degen_hyperharmonic(n, r)(Rational(0)) == hyperharmonic(n, r, HyperRoute::closed));
      }
    }
  }
}

TEST_SUITE("order zero") {
  TEST_CASE("examples") {
    CHECK(degen_hyperharmonic_order0(1) == LambdaPoly(Rational(1)));
    CHECK(degen_hyperharmonic_order0(2) == poly({q(1, 2), q(-1, 2)}));
    CHECK(degen_hyperharmonic_order0(3) == poly({q(1, 3), q(-1, 2), q(1, 6)}));
    CHECK_THROWS_AS(degen_hyperharmonic_order0(0), PreconditionError);
  }

  TEST_CASE("matches -log_lambda(1-t) and the literal (1)_{k,1/lambda} form") {
    const auto neg_log = -degen_log_series<LambdaPoly>(64, LambdaPoly::lambda());
    for (long k = 1; k <= 64; ++k) {
      const LambdaPoly h0 = degen_hyperharmonic_order0(k);
      CHECK(h0 == neg_log[k]);
      CHECK(h0(Rational(0)) == Rational(1) / Rational(k));
    }
    for (long k = 1; k <= 12; ++k) {
      for (const Rational& x : sample_points(4)) {
        CHECK(degen_hyperharmonic_order0(k)(x) == oracle::degen_order0_literal(k, x));
      }
    }
  }
}

TEST_SUITE("stirling") {
  TEST_CASE("examples") {
    CHECK(stirling1(3, 2) == -3);
    CHECK(stirling1(4, 2) == 11);
    for (long n = 0; n <= 30; ++n) CHECK(stirling1(n, n) == 1);
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(5, 0) == 0);
    CHECK(stirling1(3, 7) == 0);
    CHECK(stirling1(-1, 0) == 0);
  }

  TEST_CASE("rows expand the falling factorial") {
    for (long n = 0; n <= 50; ++n) {
      const auto row = oracle::falling_coefficients(n);
      for (long k = 0; k <= n; ++k) CHECK(stirling1(n, k) == row[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_SUITE("q polynomials") {
  TEST_CASE("examples") {
    for (auto route : {QRoute::product, QRoute::closed, QRoute::stirling}) {
      CAPTURE(to_string(route));
      CHECK(q_poly({1, 1}, route) == LambdaPoly(Rational(-1)));
      CHECK(q_poly({2, 1}, route) == poly({q(-3, 2), q(1, 2)}));
      CHECK(q_poly({1, 4}, route) == LambdaPoly(q(-1, 4)));
      CHECK(q_poly({3, 2}, route) == poly({q(-13, 12), q(3, 8), q(-1, 24)}));
      CHECK(q_poly({4, 3}, route) == poly({q(-19, 20), q(119, 360), q(-1, 20), q(1, 360)}));
    }
    CHECK_THROWS_AS(q_poly({0, 1}), PreconditionError);
    CHECK_THROWS_AS(q_poly({1, 0}), PreconditionError);
  }

  TEST_CASE("routes agree, degree n-1, pointwise oracle") {
    for (long r = 1; r <= 8; ++r) {
      for (long n = 1; n <= 20; ++n) {
        const LambdaPoly p = q_poly_checked({n, r});
        CHECK(p.degree() == n - 1);
        for (const Rational& x : sample_points(3)) CHECK(p(x) == oracle::q_at(n, r, x));
      }
    }
  }
}

TEST_SUITE("tables") {
  TEST_CASE("bound is enforced") {
    NumberTables tables(16);
    CHECK(tables.degen_hyperharmonic(16, 2) == degen_hyperharmonic(16, 2));
    CHECK_THROWS_AS(tables.degen_hyperharmonic(17, 1), CacheBoundExceeded);
    CHECK_THROWS_AS(tables.hyperharmonic(40, 1), CacheBoundExceeded);
    CHECK_THROWS_AS(tables.stirling1(20, 3), CacheBoundExceeded);
  }

  TEST_CASE("cache transparency") {
    NumberTables tables;
    for (long r = 1; r <= 4; ++r) {
      for (long n = 0; n <= 20; ++n) {
        const LambdaPoly first = tables.degen_hyperharmonic(n, r);
        CHECK(first == tables.degen_hyperharmonic(n, r));
        CHECK(first == degen_hyperharmonic(n, r, DegenRoute::closed));
      }
    }
    CHECK(tables.cached_cells() > 0);
  }

  TEST_CASE("concurrent readers and writers see correct values") {
    NumberTables tables;
    std::vector<std::vector<LambdaPoly>> seen(4);
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < seen.size(); ++t) {
        pool.emplace_back([&, t] {
          for (long n = 30; n >= 1; --n) seen[t].push_back(tables.degen_hyperharmonic(n, 3));
        });
      }
    }
    for (const auto& values : seen) {
      REQUIRE(values.size() == 30);
      for (long n = 30, i = 0; n >= 1; --n, ++i) {
        CHECK(values[static_cast<std::size_t>(i)] == degen_hyperharmonic(n, 3, DegenRoute::closed));
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dhh/numbers.hpp"
#include "dhh/series.hpp"
#include "test_support.hpp"

using namespace dhh;
namespace oracle = dhh::testing::oracle;

namespace {

using RSeries = TruncatedSeries<Rational>;
using PSeries = TruncatedSeries<LambdaPoly>;

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }

RSeries rseries(std::vector<Rational> c) { return RSeries(std::move(c)); }

RSeries random_series(std::mt19937_64& rng, long order) {
  RSeries s(order);
  for (long i = 0; i <= order; ++i) s[i] = dhh::testing::random_rational(rng);
  return s;
}

const LambdaPoly kLambda = LambdaPoly::lambda();

}  // namespace

TEST_CASE("construction keeps order + 1 coefficients") {
  CHECK(RSeries(5).coefficients().size() == 6);
  CHECK(RSeries::variable(0).order() == 0);
  CHECK(RSeries::variable(3)[1] == Rational(1));
  CHECK_THROWS_AS(RSeries(-1), PreconditionError);
  CHECK_THROWS_AS(RSeries(std::vector<Rational>{}), PreconditionError);
}

TEST_CASE("add and multiply") {
  CHECK(rseries({1, 1, 0}) * rseries({1, -1, 0}) == rseries({1, 0, -1}));
  const RSeries a = rseries({3, q(1, 2), -2, 7});
  CHECK(a * RSeries::one(3) == a);
  RSeries geometric(5);
  for (long i = 0; i <= 5; ++i) geometric[i] = Rational(1);
  CHECK(geometric * rseries({1, -1, 0, 0, 0, 0}) == RSeries::one(5));
  CHECK(rseries({1, 2}) + rseries({3, -2}) == rseries({4, 0}));
}

TEST_CASE("order mismatch is an error") {
  CHECK_THROWS_AS(RSeries(2) + RSeries(3), OrderMismatch);
  CHECK_THROWS_AS(RSeries(2) * RSeries(3), OrderMismatch);
  CHECK_THROWS_AS(compose(RSeries(2), RSeries(3)), OrderMismatch);
}

TEST_CASE("ring laws at order 16") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    const RSeries a = random_series(rng, 16);
    const RSeries b = random_series(rng, 16);
    const RSeries c = random_series(rng, 16);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("derivative") {
  const RSeries d = derive(rseries({1, 1, 1}), 1);
  CHECK(d == rseries({1, 2}));
  CHECK(derive(rseries({1, 1, 1}), 0) == rseries({1, 1, 1}));
  CHECK(derive(rseries({1, 1, 1, 1, 1}), 2) == rseries({2, 6, 12}));
  CHECK_THROWS_AS(derive(rseries({1, 1}), 2), PreconditionError);
}

TEST_CASE("geom_pow") {
  const auto g1 = geom_pow<Rational>(1, 6);
  for (long i = 0; i <= 6; ++i) CHECK(g1[i] == Rational(1));
  CHECK(geom_pow<Rational>(2, 5)[3] == Rational(4));
  CHECK(g1 * rseries({1, -1, 0, 0, 0, 0, 0}) == RSeries::one(6));
  CHECK_THROWS_AS(geom_pow<Rational>(0, 3), PreconditionError);
}

TEST_CASE("geom_pow(r) times (1-t)^r is one") {
  for (long order : {0L, 1L, 7L, 64L}) {
    for (long r = 1; r <= 6; ++r) {
      RSeries one_minus_t(order);
      one_minus_t[0] = Rational(1);
      if (order >= 1) one_minus_t[1] = Rational(-1);
      RSeries power = RSeries::one(order);
      for (long i = 0; i < r; ++i) power *= one_minus_t;
      CHECK(geom_pow<Rational>(r, order) * power == RSeries::one(order));
    }
  }
}

TEST_CASE("degenerate logarithm") {
  SUBCASE("lambda = 0 is the ordinary logarithm") {
    const auto neg_log = -degen_log_series<Rational>(8, Rational(0));
    CHECK(neg_log[0] == Rational(0));
    for (long k = 1; k <= 8; ++k) CHECK(neg_log[k] == Rational(1) / Rational(k));
  }
  SUBCASE("symbolic t^2 coefficient") {
    const auto neg_log = -degen_log_series<LambdaPoly>(4, kLambda);
    CHECK(neg_log[2] == LambdaPoly({q(1, 2), q(-1, 2)}));
  }
  SUBCASE("lambda = 1 collapses to -t") {
    const auto log1 = degen_log_series<Rational>(10, Rational(1));
    CHECK(log1[1] == Rational(-1));
    for (long k = 2; k <= 10; ++k) CHECK(log1[k].is_zero());
  }
  SUBCASE("matches lambda^{k-1}(1)_{k,1/lambda}/k! for lambda != 0") {
    for (const Rational& lambda : {q(1, 2), q(-1, 3), Rational(2), q(7, 5), Rational(-3)}) {
      const auto log1p = degen_log1p_series<Rational>(20, lambda);
      for (long k = 1; k <= 20; ++k) {
        Rational literal = lambda.pow(k - 1) * oracle::degen_falling(Rational(1), k, Rational(1) / lambda) /
                           oracle::factorial(k);
        CHECK(log1p[k] == literal);
      }
    }
  }
  SUBCASE("symbolic series evaluates to the fixed-lambda series") {
    const auto sym = degen_log_series<LambdaPoly>(16, kLambda);
    const Rational lambda = q(-5, 7);
    const auto fixed = degen_log_series<Rational>(16, lambda);
    for (long k = 0; k <= 16; ++k) CHECK(sym[k](lambda) == fixed[k]);
  }
}

TEST_CASE("degenerate exponential") {
  const Rational x = q(3, 4);
  const auto classical = degen_exp_series<Rational>(x, Rational(0), 6);
  for (long n = 0; n <= 6; ++n) CHECK(classical[n] == x.pow(n) / oracle::factorial(n));

  const auto e1 = degen_exp_series<Rational>(Rational(1), Rational(1), 6);
  CHECK(e1[0] == Rational(1));
  CHECK(e1[1] == Rational(1));
  for (long n = 2; n <= 6; ++n) CHECK(e1[n].is_zero());

  CHECK(degen_exp_series<Rational>(Rational(2), Rational(1), 4)[2] == Rational(1));
}

TEST_CASE("composition") {
  std::mt19937_64 rng(5);
  RSeries inner = random_series(rng, 6);
  inner[0] = Rational(0);
  CHECK(compose(RSeries::variable(6), inner) == inner);

  const RSeries outer = random_series(rng, 6);
  CHECK(compose(outer, RSeries(6)) == RSeries::constant(outer[0], 6));

  RSeries bad = inner;
  bad[0] = Rational(1);
  CHECK_THROWS_AS(compose(outer, bad), PreconditionError);

  // Small hand case: (1 + u)^2 with u = t + t^2 at order 3 is 1 + 2t + 3t^2 + 2t^3.
  CHECK(compose(rseries({1, 2, 1, 0}), rseries({0, 1, 1, 0})) == rseries({1, 2, 3, 2}));
}

TEST_CASE("log_lambda(e_lambda(t)) = t") {
  for (const Rational& lambda : {q(1, 2), q(-1, 3), Rational(2)}) {
    constexpr long kOrder = 16;
    RSeries inner = degen_exp_series<Rational>(Rational(1), lambda, kOrder);
    inner[0] = Rational(0);
    CHECK(compose(degen_log1p_series<Rational>(kOrder, lambda), inner) == RSeries::variable(kOrder));
  }
}

TEST_CASE("degen_hyper_gf coefficients") {
  const auto gf1 = degen_hyper_gf<LambdaPoly>(1, 4, kLambda);
  CHECK(gf1[0].is_zero());
  CHECK(gf1[1] == LambdaPoly(Rational(1)));
  const auto gf2 = degen_hyper_gf<LambdaPoly>(2, 4, kLambda);
  CHECK(gf2[2] == LambdaPoly({q(5, 2), q(-1, 2)}));
  for (long r = 1; r <= 4; ++r) CHECK(degen_hyper_gf<LambdaPoly>(r, 3, kLambda)[0].is_zero());
}

TEST_CASE("degen_hyper_gf matches the pointwise oracle") {
  for (const Rational& lambda : {q(1, 2), q(-2, 3), Rational(3)}) {
    for (long r = 1; r <= 4; ++r) {
      const auto gf = degen_hyper_gf<Rational>(r, 12, lambda);
      for (long n = 1; n <= 12; ++n) CHECK(gf[n] == oracle::degen_hyper(n, r, lambda));
    }
  }
}

TEST_CASE("lambda = 0 specialisation gives the classical hyperharmonic numbers") {
  for (long r = 1; r <= 5; ++r) {
    const auto gf = degen_hyper_gf<LambdaPoly>(r, 20, kLambda);
    for (long n = 1; n <= 20; ++n) CHECK(gf[n](Rational(0)) == oracle::hyper(n, r));
  }
}

TEST_CASE("repeated derivatives of the gf") {
  for (long r = 1; r <= 4; ++r) {
    const auto gf = degen_hyper_gf<LambdaPoly>(r, 36, kLambda);
    for (long k = 0; k <= 4; ++k) {
      const auto d = derive(gf, k);
      for (long n = 0; n <= 32; ++n) {
        const LambdaPoly expected =
            Rational(factorial(n + k)) / Rational(factorial(n)) * degen_hyperharmonic(n + k, r);
        CHECK(d[n] == expected);
      }
    }
  }
}

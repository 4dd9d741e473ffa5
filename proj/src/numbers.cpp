#include "dhh/numbers.hpp"

#include "dhh/combinatorics.hpp"
#include "dhh/series.hpp"

namespace dhh {

namespace {

void require_nonneg(long v, const char* what) {
  if (v < 0) throw PreconditionError(std::string(what) + " must be nonnegative");
}

// (−1)^{k−1}(λ−1)⋯(λ−k+1)/k!, the k-th summand of H_{n,λ}.
LambdaPoly degen_harmonic_term(long k) {
  LambdaPoly product(Rational(1));
  const LambdaPoly lambda = LambdaPoly::lambda();
  for (long j = 1; j < k; ++j) product *= lambda - Rational(j);
  product /= Rational(factorial(k));
  return (k % 2 == 1) ? product : -product;
}

}  // namespace

NumberTables::NumberTables(long bound)
    : bound_(bound),
      classical_(TriangleKind::classical_hyper, bound),
      degen_(TriangleKind::degen_hyper, bound),
      stirling_(TriangleKind::stirling1, bound) {}

NumberTables& NumberTables::shared() {
  static NumberTables tables;
  return tables;
}

Rational NumberTables::hyperharmonic(long n, long r) {
  require_nonneg(n, "n");
  require_nonneg(r, "r");
  classical_.check_bound(n, r);
  if (r == 0) {
    if (n == 0) throw PreconditionError("H_0^{(0)} = 1/0 is undefined");
    return Rational(1) / Rational(n);
  }
  if (n == 0) return {};
  if (auto hit = classical_.find(n, r)) return *hit;
  Rational value = hyperharmonic(n - 1, r) + hyperharmonic(n, r - 1);
  return classical_.store(n, r, std::move(value));
}

LambdaPoly NumberTables::degen_hyperharmonic(long n, long r) {
  require_nonneg(n, "n");
  if (r < 1) throw PreconditionError("degenerate hyperharmonic order r must be at least 1");
  degen_.check_bound(n, r);
  if (n == 0) return {};
  if (auto hit = degen_.find(n, r)) return *hit;
  LambdaPoly value = degen_hyperharmonic(n - 1, r);
  value += r == 1 ? degen_harmonic_term(n) : degen_hyperharmonic(n, r - 1);
  return degen_.store(n, r, std::move(value));
}

BigInt NumberTables::stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;  // k == 0
  if (k == 0) return 0;
  stirling_.check_bound(n, k);
  if (auto hit = stirling_.find(n, k)) return *hit;
  BigInt value = stirling1(n - 1, k - 1) - BigInt(n - 1) * stirling1(n - 1, k);
  return stirling_.store(n, k, std::move(value));
}

std::size_t NumberTables::cached_cells() const {
  return classical_.size() + degen_.size() + stirling_.size();
}

Rational harmonic(long n) { return hyperharmonic(n, 1); }

LambdaPoly degen_harmonic(long n) {
  require_nonneg(n, "n");
  LambdaPoly sum;
  LambdaPoly term(Rational(1));
  const LambdaPoly lambda = LambdaPoly::lambda();
  for (long k = 1; k <= n; ++k) {
    if (k > 1) term = term * (lambda - Rational(k - 1)) / Rational(-k);
    sum += term;
  }
  return sum;
}

Rational degen_harmonic(long n, const Rational& lambda) {
  require_nonneg(n, "n");
  Rational sum;
  Rational term(1);
  for (long k = 1; k <= n; ++k) {
    if (k > 1) term = term * (lambda - Rational(k - 1)) / Rational(-k);
    sum += term;
  }
  return sum;
}

Rational hyperharmonic(long n, long r, HyperRoute route) {
  if (route == HyperRoute::recurrence) return NumberTables::shared().hyperharmonic(n, r);
  require_nonneg(n, "n");
  if (r < 1) throw PreconditionError("closed hyperharmonic route requires r >= 1");
  return Rational(binom_int(n + r - 1, r - 1)) *
         (NumberTables::shared().hyperharmonic(n + r - 1, 1) -
          NumberTables::shared().hyperharmonic(r - 1, 1));
}

LambdaPoly degen_hyperharmonic(long n, long r, DegenRoute route) {
  require_nonneg(n, "n");
  if (r < 1) throw PreconditionError("degenerate hyperharmonic order r must be at least 1");
  switch (route) {
    case DegenRoute::recurrence:
      return NumberTables::shared().degen_hyperharmonic(n, r);
    case DegenRoute::generating_function:
      return degen_hyper_gf<LambdaPoly>(r, n, LambdaPoly::lambda())[n];
    case DegenRoute::closed: {
      const long k = r - 1;
      LambdaPoly numerator =
          Rational(binom_int(n + k, n)) * (degen_harmonic(n + k) - degen_harmonic(k));
      if (k % 2 == 1) numerator = -numerator;
      const PolyDivision div = divide(numerator, binom_poly(1, k));
      if (!div.remainder.is_zero()) {
        throw InternalConsistencyError("closed route for H_{" + std::to_string(n) + ",λ}^{(" +
                                       std::to_string(r) + ")} left remainder " +
                                       div.remainder.to_string());
      }
      return div.quotient;
    }
  }
  throw PreconditionError("unknown route");
}

LambdaPoly degen_hyperharmonic_order0(long k) {
  if (k < 1) throw PreconditionError("H_{k,λ}^{(0)} requires k >= 1");
  return degen_harmonic_term(k);
}

BigInt stirling1(long n, long k) { return NumberTables::shared().stirling1(n, k); }

LambdaPoly q_poly(QPolyKey key, QRoute route) {
  const auto [n, r] = key;
  if (n < 1 || r < 1) throw PreconditionError("q_poly requires n >= 1 and r >= 1");
  const LambdaPoly lambda = LambdaPoly::lambda();
  switch (route) {
    case QRoute::product: {
      LambdaPoly product(Rational(1));
      for (long i = 0; i < n; ++i) {
        product *= LambdaPoly(Rational(1)) - lambda / Rational(r + i);
      }
      return divide_by_lambda(product - LambdaPoly(Rational(1)));
    }
    case QRoute::closed: {
      LambdaPoly full = binom_poly(r, n) / Rational(binom_int(r + n - 1, n));
      if (n % 2 == 1) full = -full;
      return divide_by_lambda(full - LambdaPoly(Rational(1)));
    }
    case QRoute::stirling: {
      const Rational rising = falling_factorial(Rational(-r), n);
      std::vector<Rational> coeffs(static_cast<std::size_t>(n));
      for (long k = 1; k <= n; ++k) {
        BigInt inner = 0;
        BigInt r_pow = 1;  // r^{l−k}
        for (long l = k; l <= n; ++l) {
          BigInt term = binom_int(l, k) * stirling1(n, l) * r_pow;
          if ((l - k) % 2 == 1) term = -term;
          inner += term;
          r_pow *= r;
        }
        coeffs[static_cast<std::size_t>(k - 1)] = Rational(inner) / rising;
      }
      return LambdaPoly(std::move(coeffs));
    }
  }
  throw PreconditionError("unknown route");
}

LambdaPoly q_poly_checked(QPolyKey key) {
  LambdaPoly product = q_poly(key, QRoute::product);
  for (QRoute other : {QRoute::closed, QRoute::stirling}) {
    LambdaPoly q = q_poly(key, other);
    if (q != product) {
      throw InternalConsistencyError("q_poly(n=" + std::to_string(key.n) + ", r=" +
                                     std::to_string(key.r) + ") routes disagree: product " +
                                     product.to_string() + " vs " + to_string(other) + " " +
                                     q.to_string());
    }
  }
  return product;
}

std::string to_string(HyperRoute route) {
  return route == HyperRoute::recurrence ? "recurrence" : "closed";
}

std::string to_string(DegenRoute route) {
  switch (route) {
    case DegenRoute::recurrence:
      return "recurrence";
    case DegenRoute::generating_function:
      return "gf";
    case DegenRoute::closed:
      return "closed";
  }
  return "?";
}

std::string to_string(QRoute route) {
  switch (route) {
    case QRoute::product:
      return "product";
    case QRoute::closed:
      return "closed";
    case QRoute::stirling:
      return "stirling";
  }
  return "?";
}

}  // namespace dhh

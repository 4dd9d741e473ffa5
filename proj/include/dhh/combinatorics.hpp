#pragma once

#include "dhh/errors.hpp"
#include "dhh/lambda_poly.hpp"
#include "dhh/rational.hpp"
#include "dhh/ring.hpp"

namespace dhh {

/// C(n, k); zero when k > n.
BigInt binom_int(long n, long k);

BigInt factorial(long n);

/// C(λ − shift, k) = (λ−shift)(λ−shift−1)⋯(λ−shift−k+1)/k!.
LambdaPoly binom_poly(long shift, long k);

/// (x)_n = x(x−1)⋯(x−n+1); (x)_0 = 1.
template <CoefficientRing R>
R falling_factorial(const R& x, long n) {
  if (n < 0) throw PreconditionError("falling_factorial: negative length");
  R acc = ring_one<R>();
  for (long j = 0; j < n; ++j) acc = acc * (x - ring_int<R>(j));
  return acc;
}

/// (x)_{n,λ} = x(x−λ)⋯(x−(n−1)λ); (x)_{0,λ} = 1.
template <CoefficientRing R>
R degen_falling_factorial(const R& x, long n, const R& lambda) {
  if (n < 0) throw PreconditionError("degen_falling_factorial: negative length");
  R acc = ring_one<R>();
  for (long j = 0; j < n; ++j) acc = acc * (x - ring_int<R>(j) * lambda);
  return acc;
}

}  // namespace dhh

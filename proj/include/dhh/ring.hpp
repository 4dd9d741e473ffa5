#pragma once

#include <concepts>

#include "dhh/rational.hpp"

namespace dhh {

/// Everything the series and combinatorics templates may assume of a
/// coefficient ring: ring operations, integers embedded via R(n), and exact
/// division by a nonzero integer.
template <typename R>
concept CoefficientRing =
    std::regular<R> && requires(const R& a, const R& b, const BigInt& n) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      R(n);
      { a / Rational(n) } -> std::convertible_to<R>;
    };

template <CoefficientRing R>
R ring_zero() {
  return R(BigInt(0));
}

template <CoefficientRing R>
R ring_one() {
  return R(BigInt(1));
}

template <CoefficientRing R>
R ring_int(long n) {
  return R(BigInt(n));
}

}  // namespace dhh

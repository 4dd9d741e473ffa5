#include "dhh/combinatorics.hpp"

namespace dhh {

BigInt binom_int(long n, long k) {
  if (n < 0 || k < 0) throw PreconditionError("binom_int: negative argument");
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

LambdaPoly binom_poly(long shift, long k) {
  if (k < 0) throw PreconditionError("binom_poly: negative k");
  // Integer-coefficient product first, one division by k! at the end.
  LambdaPoly acc(Rational(1));
  const LambdaPoly lambda = LambdaPoly::lambda();
  for (long j = 0; j < k; ++j) acc *= lambda - Rational(shift + j);
  return acc / Rational(factorial(k));
}

}  // namespace dhh

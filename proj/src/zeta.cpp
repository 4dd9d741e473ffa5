#include "dhh/zeta.hpp"

#include <vector>

#include "dhh/errors.hpp"
#include "dhh/numbers.hpp"

namespace dhh {

void ZetaQuery::validate() const {
  if (m < 2) throw PreconditionError("zeta exponent m must be at least 2");
  if (delta.sign() <= 0) throw PreconditionError("zeta shift delta must be positive");
  if (terms < 1) throw PreconditionError("zeta needs at least one term");
  if (digits < 1) throw PreconditionError("digits must be at least 1");
}

ZetaPartial zeta_partial(const ZetaQuery& query) {
  query.validate();
  ZetaPartial out;
  out.terms = query.terms;
  Rational falling(1);  // (1)_{n,λ}
  for (long n = 0; n < query.terms; ++n) {
    if (n > 0) falling *= Rational(1) - Rational(n - 1) * query.lambda;
    const Rational term = falling / (Rational(n) + query.delta).pow(query.m);
    out.sum += term;
    out.last_term = term.abs();
  }
  return out;
}

ZetaPartial zeta_degen_partial(long m, const Rational& lambda, long terms) {
  ZetaQuery q;
  q.m = m;
  q.delta = Rational(1);
  q.lambda = lambda;
  q.terms = terms;
  return zeta_partial(q);
}

Section3Report section3_report(long r, long m, const Rational& lambda, long terms) {
  if (r < 2) throw PreconditionError("rearrangement needs r >= 2");
  if (m < 2) throw PreconditionError("rearrangement needs m >= 2");
  if (terms < 1) throw PreconditionError("rearrangement needs at least one term");

  const auto N = static_cast<std::size_t>(terms);
  // weight[n] = (1)_{n−1,λ}/n^m for n = 1..N
  std::vector<Rational> weight(N + 1);
  Rational falling(1);
  for (long n = 1; n <= terms; ++n) {
    if (n > 1) falling *= Rational(1) - Rational(n - 2) * lambda;
    weight[static_cast<std::size_t>(n)] = falling / Rational(n).pow(m);
  }
  std::vector<Rational> upper(N + 1);  // H_{n,λ}^{(r)}
  std::vector<Rational> lower(N + 1);  // H_{n,λ}^{(r−1)}
  for (long n = 1; n <= terms; ++n) {
    upper[static_cast<std::size_t>(n)] = degen_hyperharmonic(n, r)(lambda);
    lower[static_cast<std::size_t>(n)] = degen_hyperharmonic(n, r - 1)(lambda);
  }

  Section3Report rep;
  rep.r = r;
  rep.m = m;
  rep.lambda = lambda;
  rep.terms = terms;
  for (std::size_t n = 1; n <= N; ++n) rep.direct += upper[n] * weight[n];

  for (std::size_t n = 1; n <= N; ++n) {
    Rational tail;
    for (std::size_t k = n; k <= N; ++k) tail += weight[k];
    rep.swapped += lower[n] * tail;
  }

  Rational zeta_n;
  Rational lower_sum;
  Rational correction;
  for (std::size_t n = 1; n <= N; ++n) {
    zeta_n += weight[n];
    lower_sum += lower[n];
    Rational head;
    for (std::size_t l = 1; l < n; ++l) head += weight[l];
    correction += lower[n] * head;
  }
  rep.zeta_form = zeta_n * lower_sum - correction;
  return rep;
}

std::string render_decimal(const Rational& x, long digits) {
  if (digits < 1) throw PreconditionError("digits must be at least 1");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigInt num = abs(x.numerator()) * scale;
  const BigInt den = x.denominator();
  BigInt q = num / den;
  const BigInt rem = num - q * den;
  const int half = cmp(BigInt(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) q += 1;

  std::string body = q.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  if (x.sign() < 0 && q != 0) body.insert(0, 1, '-');
  return body;
}

}  // namespace dhh

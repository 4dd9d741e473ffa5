#pragma once

#include <string>

#include "dhh/rational.hpp"

namespace dhh {

/// Truncated degenerate Hurwitz zeta query. `terms` counts summands: the sum
/// runs over n = 0 … terms−1.
struct ZetaQuery {
  long m = 2;
  Rational delta{1};
  Rational lambda{0};
  long terms = 100;
  long digits = 10;

  /// Throws PreconditionError unless m ≥ 2, δ > 0, terms ≥ 1, digits ≥ 1.
  void validate() const;
};

struct ZetaPartial {
  Rational sum;
  /// |last included term|; a truncation indicator, not an error bound.
  Rational last_term;
  long terms = 0;
};

/// Σ_{n=0}^{terms−1} (1)_{n,λ}/(n+δ)^m.
ZetaPartial zeta_partial(const ZetaQuery& query);

/// Σ_{n=1}^{terms} (1)_{n−1,λ}/n^m.
ZetaPartial zeta_degen_partial(long m, const Rational& lambda, long terms);

/// Both sides of the truncated rearrangement for degenerate hyperharmonic
/// numbers against the degenerate zeta function, at a fixed λ.
struct Section3Report {
  long r = 0;
  long m = 0;
  Rational lambda;
  long terms = 0;
  /// Σ_{n≤N} H_{n,λ}^{(r)} (1)_{n−1,λ}/n^m
  Rational direct;
  /// Σ_{n≤N} H_{n,λ}^{(r−1)} Σ_{k=n}^{N} (1)_{k−1,λ}/k^m
  Rational swapped;
  /// ζ_λ(m)|_N·Σ_{n≤N} H_{n,λ}^{(r−1)} − Σ_{n≤N} H_{n,λ}^{(r−1)} Σ_{l<n} (1)_{l−1,λ}/l^m
  Rational zeta_form;

  bool swap_holds() const { return direct == swapped; }
  Rational residual() const { return direct - zeta_form; }
};

/// r ≥ 2, m ≥ 2, terms ≥ 1.
Section3Report section3_report(long r, long m, const Rational& lambda, long terms);

/// Round-half-even decimal with exactly `digits` fractional digits.
std::string render_decimal(const Rational& x, long digits);

}  // namespace dhh

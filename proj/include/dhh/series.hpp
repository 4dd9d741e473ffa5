#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dhh/combinatorics.hpp"
#include "dhh/errors.hpp"
#include "dhh/lambda_poly.hpp"
#include "dhh/rational.hpp"
#include "dhh/ring.hpp"

namespace dhh {

/// Formal power series in t truncated after t^order, over an exact ring R
/// (Rational for a fixed λ, LambdaPoly for symbolic λ).
///
/// Binary operations require both operands to have the same order and throw
/// OrderMismatch otherwise.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(long order) : coeffs_(checked_size(order), ring_zero<R>()) {}

  /// Order is coefficients.size() − 1; the list must be nonempty.
  explicit TruncatedSeries(std::vector<R> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw PreconditionError("truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(const R& c, long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static TruncatedSeries one(long order) { return constant(ring_one<R>(), order); }

  /// The series t (just the constant when order is 0).
  static TruncatedSeries variable(long order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = ring_one<R>();
    return s;
  }

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const R> coefficients() const { return coeffs_; }
  const R& operator[](long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  R& operator[](long n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  TruncatedSeries operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const std::size_t len = a.coeffs_.size();
    TruncatedSeries out(a.order());
    for (std::size_t n = 0; n < len; ++n) {
      R acc = ring_zero<R>();
      for (std::size_t i = 0; i <= n; ++i) acc = acc + a.coeffs_[i] * b.coeffs_[n - i];
      out.coeffs_[n] = std::move(acc);
    }
    return out;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::size_t checked_size(long order) {
    if (order < 0) throw PreconditionError("truncation order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }

  void require_same_order(const TruncatedSeries& other) const {
    if (other.coeffs_.size() != coeffs_.size()) {
      throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                          std::to_string(other.order()));
    }
  }

  std::vector<R> coeffs_;
};

/// k-th formal derivative; the result has order a.order() − k and
/// coefficient n equal to a_{n+k}·(n+k)!/n!.
template <CoefficientRing R>
TruncatedSeries<R> derive(const TruncatedSeries<R>& a, long k) {
  if (k < 0) throw PreconditionError("derivative order must be nonnegative");
  if (k > a.order()) {
    throw PreconditionError("derivative order " + std::to_string(k) + " exceeds truncation order " +
                            std::to_string(a.order()));
  }
  TruncatedSeries<R> out(a.order() - k);
  for (long n = 0; n <= out.order(); ++n) {
    BigInt rising = 1;
    for (long j = n + 1; j <= n + k; ++j) rising *= j;
    out[n] = a[n + k] * R(rising);
  }
  return out;
}

/// outer(inner(t)) by Horner's scheme. inner must have a zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (outer.order() != inner.order()) {
    throw OrderMismatch("compose: series orders differ");
  }
  if (inner[0] != ring_zero<R>()) {
    throw PreconditionError("compose: inner series has a nonzero constant term");
  }
  const long order = outer.order();
  TruncatedSeries<R> acc = TruncatedSeries<R>::constant(outer[order], order);
  for (long i = order - 1; i >= 0; --i) {
    acc = acc * inner;
    acc[0] = acc[0] + outer[i];
  }
  return acc;
}

/// (1 − t)^{−r} = Σ C(n+r−1, n) t^n.
template <CoefficientRing R>
TruncatedSeries<R> geom_pow(long r, long order) {
  if (r < 1) throw PreconditionError("geom_pow: r must be at least 1");
  TruncatedSeries<R> out(order);
  for (long n = 0; n <= order; ++n) out[n] = R(binom_int(n + r - 1, n));
  return out;
}

/// log_λ(1 + t) = ((1+t)^λ − 1)/λ. The t^k coefficient is
/// (λ−1)(λ−2)⋯(λ−k+1)/k!, which needs no division by λ and gives the
/// ordinary logarithm at λ = 0.
template <CoefficientRing R>
TruncatedSeries<R> degen_log1p_series(long order, const R& lambda) {
  TruncatedSeries<R> out(order);
  R product = ring_one<R>();
  BigInt fact = 1;
  for (long k = 1; k <= order; ++k) {
    if (k > 1) product = product * (lambda - ring_int<R>(k - 1));
    fact *= k;
    out[k] = product / Rational(fact);
  }
  return out;
}

/// log_λ(1 − t): the t^k coefficient is −(−1)^{k−1}(λ−1)⋯(λ−k+1)/k!.
template <CoefficientRing R>
TruncatedSeries<R> degen_log_series(long order, const R& lambda) {
  TruncatedSeries<R> out = degen_log1p_series<R>(order, lambda);
  for (long k = 1; k <= order; k += 2) out[k] = -out[k];
  return out;
}

/// e_λ^x(t) = Σ (x)_{n,λ} t^n / n!.
template <CoefficientRing R>
TruncatedSeries<R> degen_exp_series(const R& x, const R& lambda, long order) {
  TruncatedSeries<R> out(order);
  R product = ring_one<R>();
  BigInt fact = 1;
  out[0] = product;
  for (long n = 1; n <= order; ++n) {
    product = product * (x - ring_int<R>(n - 1) * lambda);
    fact *= n;
    out[n] = product / Rational(fact);
  }
  return out;
}

/// −log_λ(1−t)/(1−t)^r, whose t^n coefficient is H_{n,λ}^{(r)}.
template <CoefficientRing R>
TruncatedSeries<R> degen_hyper_gf(long r, long order, const R& lambda) {
  return -degen_log_series<R>(order, lambda) * geom_pow<R>(r, order);
}

}  // namespace dhh

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dhh/lambda_poly.hpp"
#include "dhh/rational.hpp"

namespace dhh {

/// An identity parameter: integer indices stay integers, λ is a Rational.
using ParamValue = std::variant<std::int64_t, Rational>;
/// One side of an identity, exact.
using ExactValue = std::variant<Rational, LambdaPoly>;

struct Param {
  std::string name;
  ParamValue value;
  friend bool operator==(const Param&, const Param&) = default;
};

struct ParamRange {
  std::string name;
  Rational min;
  Rational max;
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

struct Failure {
  std::vector<Param> params;
  ExactValue lhs;
  ExactValue rhs;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string identity;
  std::vector<ParamRange> parameter_ranges;
  std::size_t cases = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  /// Appends another report's cases and failures; ranges are kept.
  void absorb(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Deliberate corruption used by mutation tests: `delta` is added to the
/// right-hand side of every case of the named identity.
struct Perturbation {
  std::string identity;
  Rational delta{1};
};

namespace identity_names {
inline constexpr const char* kTheorem2 = "theorem2";
inline constexpr const char* kTheorem3 = "theorem3";
inline constexpr const char* kTheorem3Evaluated = "theorem3-evaluated";
inline constexpr const char* kLemma1 = "lemma1";
inline constexpr const char* kGfMatch = "gf";
inline constexpr const char* kDerivative = "derivative";
inline constexpr const char* kRearrangement = "rearrangement";
}  // namespace identity_names

/// C(n+k,k)·H_{n+k,λ}^{(r)} against the hyperharmonic/q-polynomial
/// decomposition, as an identity in Q[λ].
VerificationReport verify_theorem2(long n, long k, long r,
                                   const std::optional<Perturbation>& perturb = std::nullopt);

/// (−1)^k C(λ−1,k) H_{n,λ}^{(k+1)} = C(n+k,n)(H_{n+k,λ} − H_{k,λ}) in Q[λ].
VerificationReport verify_theorem3(long n, long k,
                                   const std::optional<Perturbation>& perturb = std::nullopt);

/// Quotient form at a fixed λ; throws SingularParameter for λ ∈ {1,…,k}.
VerificationReport verify_theorem3_evaluated(long n, long k, const Rational& lambda,
                                             const std::optional<Perturbation>& perturb = std::nullopt);

/// q-polynomial routes agree, have degree n − 1, and reassemble into
/// (−1)^n C(λ−r,n)/C(r+n−1,n).
VerificationReport verify_lemma1(long n, long r,
                                 const std::optional<Perturbation>& perturb = std::nullopt);

/// Generating-function coefficients against the recurrence, symbolically and
/// against the classical numbers at λ = 0.
VerificationReport verify_gf_match(long r, long order,
                                   const std::optional<Perturbation>& perturb = std::nullopt);

/// k-th derivative of the generating function against both closed
/// coefficient forms.
VerificationReport verify_derivative_identity(long k, long r, long order,
                                              const std::optional<Perturbation>& perturb = std::nullopt);

/// Finite summation-order swap at a fixed λ.
VerificationReport verify_rearrangement(long terms, long r, long m, const Rational& lambda,
                                        const std::optional<Perturbation>& perturb = std::nullopt);

struct IndexRange {
  long min = 1;
  long max = 0;
  bool empty() const { return min > max; }
};

struct VerifyConfig {
  IndexRange n{1, 8};
  IndexRange k{1, 8};
  IndexRange r{1, 5};
  IndexRange m{2, 3};
  long order = 32;
  long terms = 30;
  std::vector<Rational> lambdas{Rational(1, 2), Rational(-1, 3), Rational(2), Rational(7, 5)};
  std::optional<Perturbation> perturbation;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Sweeps one identity over the configured ranges. Cases outside the
/// identity's domain (e.g. r < 2 for the rearrangement) are skipped. For the
/// evaluated quotient form, singular λ count as passing cases when they are
/// rejected with SingularParameter.
VerificationReport verify_sweep(const std::string& identity, const VerifyConfig& config);

/// One report per identity, in a fixed order.
std::vector<VerificationReport> verify_all(const VerifyConfig& config);

const std::vector<std::string>& all_identity_names();

}  // namespace dhh

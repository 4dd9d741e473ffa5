#include "dhh/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "dhh/combinatorics.hpp"
#include "dhh/errors.hpp"
#include "dhh/numbers.hpp"
#include "dhh/series.hpp"
#include "dhh/zeta.hpp"

namespace dhh {

namespace names = identity_names;

void VerificationReport::absorb(const VerificationReport& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

using Check = std::function<VerificationReport()>;

bool perturbs(const std::optional<Perturbation>& p, const char* identity) {
  return p.has_value() && p->identity == identity;
}

std::vector<ParamRange> point_ranges(const std::vector<Param>& params) {
  std::vector<ParamRange> out;
  for (const auto& p : params) {
    const Rational v = std::visit(
        [](const auto& x) -> Rational {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
            return x;
          } else {
            return Rational(static_cast<long>(x));
          }
        },
        p.value);
    out.push_back({p.name, v, v});
  }
  return out;
}

VerificationReport single_case(const char* identity, std::vector<Param> params) {
  VerificationReport rep;
  rep.identity = identity;
  rep.parameter_ranges = point_ranges(params);
  rep.cases = 1;
  return rep;
}

template <typename V>
void compare(VerificationReport& rep, const std::vector<Param>& params, const V& lhs, const V& rhs) {
  if (lhs != rhs) rep.failures.push_back({params, ExactValue(lhs), ExactValue(rhs)});
}

Param ip(const char* name, long v) { return {name, static_cast<std::int64_t>(v)}; }

// Right-hand side of the decomposition of C(n+k,k)H_{n+k,λ}^{(r)}:
// C(n+r+k−1,n)H_k^{(r)} + C(r+k−1,k)H_{n,λ}^{(k+r)}
//   + λ[C(n+r+k−1,n)C(r+k−1,k)Σ_{l=2}^{k} q_{l−1}/(r+l−1) + C(r+k−1,k)q_k H_{n,λ}^{(k+r)}]
// with q_0 = 0 and the empty sum for k ≤ 1.
LambdaPoly theorem2_rhs(long n, long k, long r) {
  const Rational outer(binom_int(n + r + k - 1, n));
  const Rational inner(binom_int(r + k - 1, k));
  const LambdaPoly shifted = degen_hyperharmonic(n, k + r);

  LambdaPoly q_sum;
  for (long l = 2; l <= k; ++l) q_sum += q_poly({l - 1, r}) / Rational(r + l - 1);
  const LambdaPoly q_k = k >= 1 ? q_poly({k, r}) : LambdaPoly();

  LambdaPoly bracket = outer * inner * q_sum + inner * (q_k * shifted);
  LambdaPoly out(outer * hyperharmonic(k, r));
  out += inner * shifted;
  out += LambdaPoly::lambda() * bracket;
  return out;
}

void require_positive(long v, const char* what) {
  if (v < 1) throw PreconditionError(std::string(what) + " must be at least 1");
}

}  // namespace

VerificationReport verify_theorem2(long n, long k, long r, const std::optional<Perturbation>& perturb) {
  require_positive(n, "n");
  require_positive(k, "k");
  require_positive(r, "r");
  std::vector<Param> params{ip("n", n), ip("k", k), ip("r", r)};
  auto rep = single_case(names::kTheorem2, params);

  const LambdaPoly lhs = Rational(binom_int(n + k, k)) * degen_hyperharmonic(n + k, r);
  LambdaPoly rhs = theorem2_rhs(n, k, r);
  if (perturbs(perturb, names::kTheorem2)) rhs += perturb->delta;
  compare(rep, params, lhs, rhs);
  return rep;
}

VerificationReport verify_theorem3(long n, long k, const std::optional<Perturbation>& perturb) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  require_positive(k, "k");
  std::vector<Param> params{ip("n", n), ip("k", k)};
  auto rep = single_case(names::kTheorem3, params);

  LambdaPoly lhs = binom_poly(1, k) * degen_hyperharmonic(n, k + 1, DegenRoute::recurrence);
  if (k % 2 == 1) lhs = -lhs;
  LambdaPoly rhs = Rational(binom_int(n + k, n)) * (degen_harmonic(n + k) - degen_harmonic(k));
  if (perturbs(perturb, names::kTheorem3)) rhs += perturb->delta;
  compare(rep, params, lhs, rhs);
  return rep;
}

VerificationReport verify_theorem3_evaluated(long n, long k, const Rational& lambda,
                                             const std::optional<Perturbation>& perturb) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  require_positive(k, "k");
  if (lambda.is_integer() && lambda >= Rational(1) && lambda <= Rational(k)) {
    throw SingularParameter("C(λ−1," + std::to_string(k) + ") vanishes at λ = " +
                            lambda.to_string() + " (factor λ − " + lambda.to_string() + ")");
  }
  std::vector<Param> params{ip("n", n), ip("k", k), {"lambda", lambda}};
  auto rep = single_case(names::kTheorem3Evaluated, params);

  const Rational lhs = degen_hyperharmonic(n, k + 1, DegenRoute::recurrence)(lambda);
  Rational rhs = Rational(binom_int(n + k, n)) *
                 (degen_harmonic(n + k, lambda) - degen_harmonic(k, lambda)) /
                 binom_poly(1, k)(lambda);
  if (k % 2 == 1) rhs = -rhs;
  if (perturbs(perturb, names::kTheorem3Evaluated)) rhs += perturb->delta;
  compare(rep, params, lhs, rhs);
  return rep;
}

VerificationReport verify_lemma1(long n, long r, const std::optional<Perturbation>& perturb) {
  require_positive(n, "n");
  require_positive(r, "r");
  std::vector<Param> params{ip("n", n), ip("r", r)};
  auto rep = single_case(names::kLemma1, params);

  const LambdaPoly product = q_poly({n, r}, QRoute::product);
  LambdaPoly closed = q_poly({n, r}, QRoute::closed);
  if (perturbs(perturb, names::kLemma1)) closed += perturb->delta;
  const LambdaPoly stirling = q_poly({n, r}, QRoute::stirling);
  compare(rep, params, product, closed);
  compare(rep, params, product, stirling);
  compare(rep, params, Rational(product.degree()), Rational(n - 1));

  LambdaPoly reassembled = binom_poly(r, n) / Rational(binom_int(r + n - 1, n));
  if (n % 2 == 1) reassembled = -reassembled;
  compare(rep, params, LambdaPoly(Rational(1)) + LambdaPoly::lambda() * product, reassembled);
  return rep;
}

VerificationReport verify_gf_match(long r, long order, const std::optional<Perturbation>& perturb) {
  require_positive(r, "r");
  if (order < 0) throw PreconditionError("order must be nonnegative");
  VerificationReport rep;
  rep.identity = names::kGfMatch;
  rep.parameter_ranges = {{"r", r, r}, {"n", 0, order}};

  const auto symbolic = degen_hyper_gf<LambdaPoly>(r, order, LambdaPoly::lambda());
  const auto classical = degen_hyper_gf<Rational>(r, order, Rational(0));
  const bool corrupt = perturbs(perturb, names::kGfMatch);
  for (long n = 0; n <= order; ++n) {
    ++rep.cases;
    LambdaPoly rec = degen_hyperharmonic(n, r, DegenRoute::recurrence);
    if (corrupt) rec += perturb->delta;
    compare(rep, {ip("r", r), ip("n", n)}, symbolic[n], rec);
    compare(rep, {ip("r", r), ip("n", n), {"lambda", Rational(0)}}, classical[n],
            hyperharmonic(n, r));
  }
  return rep;
}

VerificationReport verify_derivative_identity(long k, long r, long order,
                                              const std::optional<Perturbation>& perturb) {
  if (k < 0) throw PreconditionError("k must be nonnegative");
  require_positive(r, "r");
  if (k > order) throw PreconditionError("derivative order k exceeds truncation order");
  VerificationReport rep;
  rep.identity = names::kDerivative;
  rep.parameter_ranges = {{"k", k, k}, {"r", r, r}, {"n", 0, order - k}};

  const auto derived = derive(degen_hyper_gf<LambdaPoly>(r, order, LambdaPoly::lambda()), k);
  const Rational k_fact(factorial(k));
  const bool corrupt = perturbs(perturb, names::kDerivative);
  for (long n = 0; n <= derived.order(); ++n) {
    ++rep.cases;
    const std::vector<Param> params{ip("k", k), ip("r", r), ip("n", n)};
    LambdaPoly shifted =
        k_fact * Rational(binom_int(n + k, k)) * degen_hyperharmonic(n + k, r, DegenRoute::recurrence);
    if (corrupt) shifted += perturb->delta;
    compare(rep, params, derived[n], shifted);
    compare(rep, params, derived[n], k_fact * theorem2_rhs(n, k, r));
  }
  return rep;
}

VerificationReport verify_rearrangement(long terms, long r, long m, const Rational& lambda,
                                        const std::optional<Perturbation>& perturb) {
  std::vector<Param> params{ip("N", terms), ip("r", r), ip("m", m), {"lambda", lambda}};
  const Section3Report s3 = section3_report(r, m, lambda, terms);
  auto rep = single_case(names::kRearrangement, params);
  Rational rhs = s3.swapped;
  if (perturbs(perturb, names::kRearrangement)) rhs += perturb->delta;
  compare(rep, params, s3.direct, rhs);
  return rep;
}

namespace {

std::vector<VerificationReport> run_checks(const std::vector<Check>& checks, unsigned workers) {
  std::vector<VerificationReport> out(checks.size());
  unsigned w = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
  w = static_cast<unsigned>(std::min<std::size_t>(w, checks.size()));
  if (w <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) out[i] = checks[i]();
    return out;
  }
  std::vector<std::exception_ptr> errors(checks.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < w; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
          try {
            out[i] = checks[i]();
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

ParamRange index_range(const char* name, IndexRange r, long floor) {
  return {name, std::max(r.min, floor), r.max};
}

std::vector<long> indices(IndexRange r, long floor) {
  std::vector<long> out;
  for (long v = std::max(r.min, floor); v <= r.max; ++v) out.push_back(v);
  return out;
}

void add_lambda_range(std::vector<ParamRange>& ranges, const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) return;
  const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
  ranges.push_back({"lambda", *lo, *hi});
}

}  // namespace

VerificationReport verify_sweep(const std::string& identity, const VerifyConfig& config) {
  const auto& perturb = config.perturbation;
  VerificationReport total;
  total.identity = identity;
  std::vector<Check> checks;

  if (identity == names::kTheorem2) {
    total.parameter_ranges = {index_range("n", config.n, 1), index_range("k", config.k, 1),
                              index_range("r", config.r, 1)};
    for (long n : indices(config.n, 1))
      for (long k : indices(config.k, 1))
        for (long r : indices(config.r, 1))
          checks.emplace_back([=, &perturb] { return verify_theorem2(n, k, r, perturb); });
  } else if (identity == names::kTheorem3) {
    total.parameter_ranges = {index_range("n", config.n, 1), index_range("k", config.k, 1)};
    for (long n : indices(config.n, 1))
      for (long k : indices(config.k, 1))
        checks.emplace_back([=, &perturb] { return verify_theorem3(n, k, perturb); });
  } else if (identity == names::kTheorem3Evaluated) {
    total.parameter_ranges = {index_range("n", config.n, 1), index_range("k", config.k, 1)};
    add_lambda_range(total.parameter_ranges, config.lambdas);
    for (long n : indices(config.n, 1))
      for (long k : indices(config.k, 1))
        for (const Rational& lambda : config.lambdas)
          checks.emplace_back([=, &perturb] {
            const bool singular =
                lambda.is_integer() && lambda >= Rational(1) && lambda <= Rational(k);
            if (!singular) return verify_theorem3_evaluated(n, k, lambda, perturb);
            VerificationReport rep;
            rep.identity = names::kTheorem3Evaluated;
            rep.cases = 1;
            try {
              verify_theorem3_evaluated(n, k, lambda, perturb);
              // Accepted a singular λ: record it as a failure.
              rep.failures.push_back({{ip("n", n), ip("k", k), {"lambda", lambda}},
                                      ExactValue(Rational(0)), ExactValue(binom_poly(1, k)(lambda))});
            } catch (const SingularParameter&) {
            }
            return rep;
          });
  } else if (identity == names::kLemma1) {
    total.parameter_ranges = {index_range("n", config.n, 1), index_range("r", config.r, 1)};
    for (long n : indices(config.n, 1))
      for (long r : indices(config.r, 1))
        checks.emplace_back([=, &perturb] { return verify_lemma1(n, r, perturb); });
  } else if (identity == names::kGfMatch) {
    total.parameter_ranges = {index_range("r", config.r, 1), {"n", 0, config.order}};
    for (long r : indices(config.r, 1))
      checks.emplace_back([=, &perturb] { return verify_gf_match(r, config.order, perturb); });
  } else if (identity == names::kDerivative) {
    total.parameter_ranges = {{"k", std::max(config.k.min, 0L), std::min(config.k.max, config.order)},
                              index_range("r", config.r, 1),
                              {"n", 0, config.order}};
    for (long k : indices({config.k.min, std::min(config.k.max, config.order)}, 0))
      for (long r : indices(config.r, 1))
        checks.emplace_back(
            [=, &perturb] { return verify_derivative_identity(k, r, config.order, perturb); });
  } else if (identity == names::kRearrangement) {
    total.parameter_ranges = {{"N", config.terms, config.terms}, index_range("r", config.r, 2),
                              index_range("m", config.m, 2)};
    add_lambda_range(total.parameter_ranges, config.lambdas);
    if (config.terms >= 1) {
      for (long r : indices(config.r, 2))
        for (long m : indices(config.m, 2))
          for (const Rational& lambda : config.lambdas)
            checks.emplace_back(
                [=, &perturb] { return verify_rearrangement(config.terms, r, m, lambda, perturb); });
    }
  } else {
    throw PreconditionError("unknown identity '" + identity + "'");
  }

  for (const auto& rep : run_checks(checks, config.workers)) total.absorb(rep);
  return total;
}

const std::vector<std::string>& all_identity_names() {
  static const std::vector<std::string> names{
      names::kTheorem2, names::kTheorem3, names::kTheorem3Evaluated, names::kLemma1,
      names::kGfMatch,  names::kDerivative, names::kRearrangement};
  return names;
}

std::vector<VerificationReport> verify_all(const VerifyConfig& config) {
  std::vector<VerificationReport> out;
  for (const auto& name : all_identity_names()) out.push_back(verify_sweep(name, config));
  return out;
}

}  // namespace dhh

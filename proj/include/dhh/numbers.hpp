#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "dhh/errors.hpp"
#include "dhh/lambda_poly.hpp"
#include "dhh/rational.hpp"

namespace dhh {

inline constexpr long kDefaultTableBound = 512;

enum class TriangleKind { classical_hyper, degen_hyper, stirling1 };

/// Thread-safe two-index memo table. A reader sees either no entry or a
/// fully computed one; when two writers race on a cell the first insert wins
/// (both computed the same value).
template <typename V>
class NumberTriangle {
 public:
  NumberTriangle(TriangleKind kind, long bound) : kind_(kind), bound_(bound) {}

  TriangleKind kind() const { return kind_; }
  long bound() const { return bound_; }

  void check_bound(long n, long j) const {
    if (n > bound_ || j > bound_) {
      throw CacheBoundExceeded("index (" + std::to_string(n) + ", " + std::to_string(j) +
                               ") exceeds table bound " + std::to_string(bound_));
    }
  }

  std::optional<V> find(long n, long j) const {
    std::shared_lock lock(mutex_);
    auto it = cells_.find({n, j});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }

  V store(long n, long j, V value) {
    std::unique_lock lock(mutex_);
    return cells_.try_emplace({n, j}, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cells_.size();
  }

 private:
  TriangleKind kind_;
  long bound_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<long, long>, V> cells_;
};

/// Memoized recurrence values for H_n^{(r)}, H_{n,λ}^{(r)} and S₁(n,k).
class NumberTables {
 public:
  explicit NumberTables(long bound = kDefaultTableBound);

  /// Process-wide instance used by the free functions below.
  static NumberTables& shared();

  long bound() const { return bound_; }

  /// H_n^{(r)} by the iterated-sum recurrence; r = 0 gives 1/n.
  Rational hyperharmonic(long n, long r);
  /// H_{n,λ}^{(r)} by the iterated-sum recurrence, r ≥ 1.
  LambdaPoly degen_hyperharmonic(long n, long r);
  BigInt stirling1(long n, long k);

  std::size_t cached_cells() const;

 private:
  long bound_;
  NumberTriangle<Rational> classical_;
  NumberTriangle<LambdaPoly> degen_;
  NumberTriangle<BigInt> stirling_;
};

enum class HyperRoute { recurrence, closed };
enum class DegenRoute { recurrence, generating_function, closed };
enum class QRoute { product, closed, stirling };

/// q_n(λ) depends on the product's starting point r as well as on n.
struct QPolyKey {
  long n;
  long r;
};

Rational harmonic(long n);

/// H_{n,λ} = Σ_{k=1}^{n} (−1)^{k−1}(λ−1)⋯(λ−k+1)/k!.
LambdaPoly degen_harmonic(long n);
/// H_{n,λ} at a fixed λ.
Rational degen_harmonic(long n, const Rational& lambda);

/// Throws PreconditionError for (0, 0) and for the closed route with r = 0.
Rational hyperharmonic(long n, long r, HyperRoute route = HyperRoute::recurrence);

/// The closed route divides C(n+k,n)(H_{n+k,λ} − H_{k,λ}) by (−1)^k C(λ−1,k)
/// with k = r − 1 and throws InternalConsistencyError on a nonzero remainder.
LambdaPoly degen_hyperharmonic(long n, long r, DegenRoute route = DegenRoute::recurrence);

/// H_{k,λ}^{(0)} = (−1)^{k−1}(λ−1)(λ−2)⋯(λ−k+1)/k!, k ≥ 1.
LambdaPoly degen_hyperharmonic_order0(long k);

/// Signed Stirling numbers of the first kind; zero outside the triangle.
BigInt stirling1(long n, long k);

/// Π_{i<n}(1 − λ/(r+i)) = 1 + λ q_n(λ), n, r ≥ 1.
LambdaPoly q_poly(QPolyKey key, QRoute route = QRoute::closed);

/// All three routes, InternalConsistencyError if they differ.
LambdaPoly q_poly_checked(QPolyKey key);

std::string to_string(HyperRoute route);
std::string to_string(DegenRoute route);
std::string to_string(QRoute route);

}  // namespace dhh

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dhh/rational.hpp"

namespace dhh {

/// Dense polynomial in the degeneracy parameter λ over Q.
///
/// coefficients()[i] is the coefficient of λ^i. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and two polynomials
/// are equal exactly when their coefficient lists are.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<Rational> coefficients);
  LambdaPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// The indeterminate λ.
  static LambdaPoly lambda();
  static LambdaPoly monomial(const Rational& coefficient, std::size_t power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Zero past the degree.
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;

  /// Exact evaluation (Horner).
  Rational operator()(const Rational& at) const;

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& rhs);
  LambdaPoly& operator-=(const LambdaPoly& rhs);
  LambdaPoly& operator*=(const LambdaPoly& rhs);
  LambdaPoly& operator*=(const Rational& scalar);
  /// Division by a nonzero scalar.
  LambdaPoly& operator/=(const Rational& scalar);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(LambdaPoly a, const Rational& s) { return a *= s; }
  friend LambdaPoly operator*(const Rational& s, LambdaPoly a) { return a *= s; }
  friend LambdaPoly operator/(LambdaPoly a, const Rational& s) { return a /= s; }

  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

  /// Bracketed coefficient list, constant term first: "[3/2,-1/2]".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) {
    return os << p.to_string();
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  LambdaPoly quotient;
  LambdaPoly remainder;
};

/// Euclidean division; deg remainder < deg divisor. Throws DivisionByZero on
/// a zero divisor.
PolyDivision divide(const LambdaPoly& dividend, const LambdaPoly& divisor);

/// Returns r with λ·r = p. Throws PreconditionError naming the constant
/// coefficient when it is nonzero.
LambdaPoly divide_by_lambda(const LambdaPoly& p);

}  // namespace dhh

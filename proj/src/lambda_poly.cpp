#include "dhh/lambda_poly.hpp"

#include <algorithm>
#include <utility>

#include "dhh/errors.hpp"

namespace dhh {

LambdaPoly::LambdaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

LambdaPoly::LambdaPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LambdaPoly LambdaPoly::lambda() { return monomial(Rational(1), 1); }

LambdaPoly LambdaPoly::monomial(const Rational& coefficient, std::size_t power) {
  if (coefficient.is_zero()) return {};
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return LambdaPoly(std::move(c));
}

Rational LambdaPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational LambdaPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational() : coeffs_.back();
}

Rational LambdaPoly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  // Leading coefficient is a product of nonzero rationals, no trim needed.
  LambdaPoly p;
  p.coeffs_ = std::move(out);
  return p;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

LambdaPoly& LambdaPoly::operator/=(const Rational& scalar) {
  if (scalar.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

std::string LambdaPoly::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += coeffs_[i].to_string();
  }
  return out + "]";
}

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyDivision divide(const LambdaPoly& dividend, const LambdaPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {LambdaPoly(), dividend};

  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const auto dv = divisor.coefficients();
  const Rational lead = divisor.leading_coefficient();

  for (int shift = dividend.degree() - dd; shift >= 0; --shift) {
    const Rational top = rem[static_cast<std::size_t>(shift + dd)];
    if (top.is_zero()) continue;
    const Rational factor = top / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(shift + i)] -= factor * dv[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {LambdaPoly(std::move(quot)), LambdaPoly(std::move(rem))};
}

LambdaPoly divide_by_lambda(const LambdaPoly& p) {
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  if (!c.front().is_zero()) {
    throw PreconditionError("divide_by_lambda: nonzero constant term " + c.front().to_string());
  }
  return LambdaPoly(std::vector<Rational>(c.begin() + 1, c.end()));
}

}  // namespace dhh

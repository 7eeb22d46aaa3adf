#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descartes/rational.hpp"

namespace descartes {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 64;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// Comma-separated rationals, constant term first.
  static Polynomial parse(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const = default;

  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// Sign of p(x) without forming the value when x is an integer-friendly rational.
  int sign_at(const Rational& x) const;

  /// Quotient and remainder; throws ZeroPolynomial on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace descartes

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "descartes/polynomial.hpp"

namespace descartes {

/// Process-wide table of variable names; ids are stable for the process lifetime.
namespace vars {
int intern(const std::string& name);
std::string name(int id);
}  // namespace vars

/// Exponent of variable id i at index i; trailing zeros trimmed.
using Exponents = std::vector<std::uint16_t>;

/// Sparse polynomial over Q in interned variables.
class MultiPoly {
 public:
  static constexpr std::size_t kDefaultTermCap = 1000000;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(int id);
  static MultiPoly variable(const std::string& name) { return variable(vars::intern(name)); }
  static MultiPoly from_univariate(const Polynomial& p, int var);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const = default;
  MultiPoly pow(unsigned e) const;

  int degree_in(int var) const;
  int total_degree() const;
  std::set<int> variables() const;

  /// Coefficient of var^k, as a polynomial in the other variables.
  MultiPoly coeff_in(int var, int k) const;
  MultiPoly derivative(int var) const;
  /// Replaces var by a polynomial.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  /// Substitutes the given values and keeps the rest symbolic.
  MultiPoly evaluate(const std::map<int, Rational>& point) const;
  /// Full evaluation; throws if a variable is missing.
  Rational evaluate_all(const std::map<int, Rational>& point) const;
  /// Requires that no variable other than var occurs.
  Polynomial to_univariate(int var) const;

  /// Removes the largest monomial dividing every term; returns it.
  Exponents strip_monomial_content();

  std::string to_string() const;

  /// Throws ExpressionTooLarge when a product would exceed this many terms.
  static void set_term_cap(std::size_t cap);
  static std::size_t term_cap();

  /// Adds c * monomial(e); zero results are dropped.
  void add_term(const Exponents& e, const Rational& c);

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace descartes

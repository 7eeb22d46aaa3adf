#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "descartes/multipoly.hpp"

namespace descartes {

/// A formal quotient. No cancellation is ever performed, so the pair is a
/// polynomial function of the inputs and can be checked pointwise.
struct RatFunc {
  MultiPoly num;
  MultiPoly den = MultiPoly::constant(1);
  bool is_polynomial() const { return den.is_constant() && den.constant_term() == 1; }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Coeff, Diff, Subs, SqrtReduce };
  Kind kind = Kind::Number;
  Rational value;               // Number
  std::string name;             // Symbol, or the variable of Coeff/Diff/Subs/SqrtReduce
  long exponent = 0;            // Pow exponent, Coeff index, Diff order
  std::vector<ExprPtr> args;
};

/// Grammar: + - * / ^ (integer exponents), parentheses, exact decimals,
/// identifiers, and the functions coeff(e,x,k), diff(e,x[,k]), subs(e,x,v),
/// det([..],[..],..) and sqrt_reduce(e,Y,R). det is expanded on parse.
ExprPtr parse_expression(std::string_view text);

/// Named expressions, resolved innermost first.
class Scope {
 public:
  explicit Scope(const Scope* parent = nullptr) : parent_(parent) {}
  void define(const std::string& name, ExprPtr e);
  void define(const std::string& name, std::string_view text) { define(name, parse_expression(text)); }
  ExprPtr lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name) != nullptr; }

 private:
  const Scope* parent_;
  std::unordered_map<std::string, ExprPtr> defs_;
};

/// Per-variable degree bounds of the formal numerator and denominator.
struct DegreeBound {
  std::map<int, long> num;
  std::map<int, long> den;
  bool den_constant() const;
};

class Evaluator {
 public:
  explicit Evaluator(const Scope& scope) : scope_(scope) {}

  const DegreeBound& bound(const ExprPtr& e);

  /// Evaluates with the given variables fixed. Fixed values apply only to
  /// free occurrences; variables bound by coeff/subs stay symbolic.
  RatFunc eval(const ExprPtr& e, const std::map<int, Rational>& point = {});

  /// Convenience: evaluates and requires a polynomial.
  MultiPoly eval_polynomial(const ExprPtr& e, const std::map<int, Rational>& point = {});

  ExprPtr resolve(const std::string& name) const { return scope_.lookup(name); }

 private:
  struct Ctx;
  RatFunc eval_in(const Expr& e, Ctx& ctx);
  const DegreeBound& bound_of(const Expr& e);

  const Scope& scope_;
  std::unordered_map<const Expr*, DegreeBound> bounds_;
  std::set<std::string> resolving_;
  // bounds_ is keyed by node address, so every root seen stays alive.
  std::set<ExprPtr> keep_;
};

/// Numerator of lhs - rhs after cross multiplication: ln*rd - rn*ld.
DegreeBound difference_bound(const DegreeBound& l, const DegreeBound& r);

}  // namespace descartes

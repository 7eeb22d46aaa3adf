#include "descartes/expression.hpp"

#include <algorithm>
#include <cctype>

#include "descartes/error.hpp"

namespace descartes {

// ---------------------------------------------------------------- parser

namespace {

ExprPtr make(Expr::Kind k, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = std::move(args);
  return e;
}

ExprPtr number(const Rational& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->value = v;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in expression");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    auto lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make(Expr::Kind::Add, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Expr::Kind::Sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = make(Expr::Kind::Mul, {lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Expr::Kind::Div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make(Expr::Kind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  long integer_literal() {
    skip();
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren) expect(')');
    return neg ? -v : v;
  }

  ExprPtr power() {
    auto base = primary();
    if (accept('^')) {
      auto e = make(Expr::Kind::Pow, {base});
      std::const_pointer_cast<Expr>(e)->exponent = integer_literal();
      return e;
    }
    return base;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return number(parse_rational(s_.substr(start, pos_ - start)));
    }
    std::string id = identifier();
    if (!accept('(')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Symbol;
      e->name = id;
      return e;
    }
    return call(id);
  }

  ExprPtr with_var(Expr::Kind k, ExprPtr arg, std::string var, long n, std::vector<ExprPtr> extra = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args.push_back(std::move(arg));
    for (auto& x : extra) e->args.push_back(std::move(x));
    e->name = std::move(var);
    e->exponent = n;
    return e;
  }

  ExprPtr call(const std::string& fn) {
    if (fn == "det") return determinant();
    auto arg = expr();
    expect(',');
    std::string var = identifier();
    ExprPtr out;
    if (fn == "coeff") {
      expect(',');
      long k = integer_literal();
      if (k < 0) fail("coeff index must be nonnegative");
      out = with_var(Expr::Kind::Coeff, arg, var, k);
    } else if (fn == "diff") {
      long k = 1;
      if (accept(',')) k = integer_literal();
      if (k < 0) fail("diff order must be nonnegative");
      out = with_var(Expr::Kind::Diff, arg, var, k);
    } else if (fn == "subs") {
      expect(',');
      out = with_var(Expr::Kind::Subs, arg, var, 0, {expr()});
    } else if (fn == "sqrt_reduce") {
      expect(',');
      out = with_var(Expr::Kind::SqrtReduce, arg, var, 0, {expr()});
    } else {
      fail("unknown function '" + fn + "'");
    }
    expect(')');
    return out;
  }

  ExprPtr determinant() {
    std::vector<std::vector<ExprPtr>> rows;
    do {
      expect('[');
      std::vector<ExprPtr> row{expr()};
      while (accept(',')) row.push_back(expr());
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(')');
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail("det needs a square matrix");
    return laplace(rows);
  }

  // Expansion along the first row.
  static ExprPtr laplace(const std::vector<std::vector<ExprPtr>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    ExprPtr acc;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<ExprPtr>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<ExprPtr> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[i][k]);
        minor.push_back(std::move(row));
      }
      auto term = make(Expr::Kind::Mul, {m[0][j], laplace(minor)});
      if (!acc) {
        acc = term;
      } else {
        acc = make(j % 2 == 0 ? Expr::Kind::Add : Expr::Kind::Sub, {acc, term});
      }
    }
    return acc;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- scope

void Scope::define(const std::string& name, ExprPtr e) { defs_[name] = std::move(e); }

ExprPtr Scope::lookup(const std::string& name) const {
  for (const Scope* s = this; s; s = s->parent_) {
    auto it = s->defs_.find(name);
    if (it != s->defs_.end()) return it->second;
  }
  return nullptr;
}

// ---------------------------------------------------------------- bounds

bool DegreeBound::den_constant() const {
  return std::all_of(den.begin(), den.end(), [](const auto& kv) { return kv.second <= 0; });
}

namespace {

using BoundMap = std::map<int, long>;

long at(const BoundMap& m, int v) {
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

std::set<int> keys(std::initializer_list<const BoundMap*> maps) {
  std::set<int> k;
  for (auto* m : maps)
    for (const auto& [v, d] : *m) k.insert(v);
  return k;
}

BoundMap sum(const BoundMap& a, const BoundMap& b) {
  BoundMap r;
  for (int v : keys({&a, &b})) r[v] = at(a, v) + at(b, v);
  return r;
}

BoundMap max_of(const BoundMap& a, const BoundMap& b) {
  BoundMap r;
  for (int v : keys({&a, &b})) r[v] = std::max(at(a, v), at(b, v));
  return r;
}

BoundMap scaled(const BoundMap& a, long k) {
  BoundMap r;
  for (const auto& [v, d] : a) r[v] = d * k;
  return r;
}

BoundMap without(BoundMap a, int v) {
  a.erase(v);
  return a;
}

}  // namespace

DegreeBound difference_bound(const DegreeBound& l, const DegreeBound& r) {
  DegreeBound b;
  b.num = max_of(sum(l.num, r.den), sum(r.num, l.den));
  b.den = sum(l.den, r.den);
  return b;
}

const DegreeBound& Evaluator::bound(const ExprPtr& e) {
  keep_.insert(e);
  return bound_of(*e);
}

const DegreeBound& Evaluator::bound_of(const Expr& e) {
  if (auto it = bounds_.find(&e); it != bounds_.end()) return it->second;
  DegreeBound b;
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: break;
    case K::Symbol: {
      if (auto def = scope_.lookup(e.name)) {
        if (!resolving_.insert(e.name).second)
          throw Error(ErrorCode::ParseError, "recursive definition of '" + e.name + "'");
        b = bound_of(*def);
        resolving_.erase(e.name);
      } else {
        b.num[vars::intern(e.name)] = 1;
      }
      break;
    }
    case K::Neg: b = bound_of(*e.args[0]); break;
    case K::Add:
    case K::Sub: {
      const auto& l = bound_of(*e.args[0]);
      const auto& r = bound_of(*e.args[1]);
      if (l.den_constant() && r.den_constant()) {
        b.num = max_of(l.num, r.num);
      } else {
        b = difference_bound(l, r);
      }
      break;
    }
    case K::Mul: {
      const auto& l = bound_of(*e.args[0]);
      const auto& r = bound_of(*e.args[1]);
      b.num = sum(l.num, r.num);
      b.den = sum(l.den, r.den);
      break;
    }
    case K::Div: {
      const auto& l = bound_of(*e.args[0]);
      const auto& r = bound_of(*e.args[1]);
      b.num = sum(l.num, r.den);
      b.den = sum(l.den, r.num);
      break;
    }
    case K::Pow: {
      const auto& a = bound_of(*e.args[0]);
      long k = std::labs(e.exponent);
      b.num = scaled(e.exponent >= 0 ? a.num : a.den, k);
      b.den = scaled(e.exponent >= 0 ? a.den : a.num, k);
      break;
    }
    case K::Coeff: {
      const auto& a = bound_of(*e.args[0]);
      int x = vars::intern(e.name);
      if (at(a.den, x) > 0)
        throw Error(ErrorCode::InvalidArgument, "coeff: denominator depends on " + e.name);
      b.num = without(a.num, x);
      b.den = a.den;
      break;
    }
    case K::Diff: {
      const auto& a = bound_of(*e.args[0]);
      int x = vars::intern(e.name);
      b = a;
      if (at(a.den, x) > 0) {
        for (long i = 0; i < e.exponent; ++i) {
          b.num = sum(b.num, b.den);
          b.den = scaled(b.den, 2);
        }
      }
      break;
    }
    case K::Subs: {
      const auto& a = bound_of(*e.args[0]);
      const auto& v = bound_of(*e.args[1]);
      int x = vars::intern(e.name);
      long kn = at(a.num, x), kd = at(a.den, x);
      BoundMap an = without(a.num, x), ad = without(a.den, x);
      if (v.den_constant()) {
        b.num = sum(an, scaled(v.num, kn));
        b.den = sum(ad, scaled(v.num, kd));
      } else {
        BoundMap pq = max_of(v.num, v.den);
        b.num = sum(sum(an, scaled(pq, kn)), scaled(v.den, kd));
        b.den = sum(sum(ad, scaled(pq, kd)), scaled(v.den, kn));
      }
      break;
    }
    case K::SqrtReduce: {
      const auto& a = bound_of(*e.args[0]);
      const auto& r = bound_of(*e.args[1]);
      if (!r.den_constant()) throw Error(ErrorCode::InvalidArgument, "sqrt_reduce needs a polynomial radicand");
      int y = vars::intern(e.name);
      auto reduce = [&](const BoundMap& m) {
        long k = at(m, y);
        BoundMap out = sum(without(m, y), scaled(r.num, k / 2));
        out[y] = at(out, y) + std::min<long>(k, 1);
        return out;
      };
      b.num = reduce(a.num);
      b.den = reduce(a.den);
      break;
    }
  }
  return bounds_.emplace(&e, std::move(b)).first->second;
}

// ---------------------------------------------------------------- evaluation

struct Evaluator::Ctx {
  const std::map<int, Rational>& point;
  std::vector<int> shadow;
  std::map<std::string, RatFunc> cache;

  bool shadowed(int v) const { return std::find(shadow.begin(), shadow.end(), v) != shadow.end(); }
  bool assigned(int v) const { return point.count(v) && !shadowed(v); }
  std::string key(const std::string& name) const {
    std::string k = name;
    for (int v : shadow) k += "|" + std::to_string(v);
    return k;
  }
};

namespace {

// Folds a statically constant denominator into the numerator.
void fold(RatFunc& r, const DegreeBound& b) {
  if (!b.den_constant()) return;
  if (!r.den.is_constant()) throw Error(ErrorCode::InvalidArgument, "internal: denominator bound mismatch");
  Rational c = r.den.constant_term();
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (c != 1) r.num = r.num * Rational(1 / c);
  r.den = MultiPoly::constant(1);
}

MultiPoly homogenized(const MultiPoly& f, int x, long k, const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out;
  std::vector<MultiPoly> ppow{MultiPoly::constant(1)}, qpow{MultiPoly::constant(1)};
  for (long i = 1; i <= k; ++i) {
    ppow.push_back(ppow.back() * p);
    qpow.push_back(qpow.back() * q);
  }
  for (long i = 0; i <= k; ++i) {
    MultiPoly c = f.coeff_in(x, static_cast<int>(i));
    if (c.is_zero()) continue;
    out += c * ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(k - i)];
  }
  return out;
}

MultiPoly reduce_square(const MultiPoly& f, int y, const MultiPoly& r) {
  const int k = f.degree_in(y);
  if (k < 2) return f;
  MultiPoly out;
  MultiPoly yv = MultiPoly::variable(y);
  MultiPoly rpow = MultiPoly::constant(1);
  for (int i = 0; i <= k; ++i) {
    if (i >= 2 && i % 2 == 0) rpow = rpow * r;
    MultiPoly c = f.coeff_in(y, i);
    if (c.is_zero()) continue;
    out += i % 2 ? c * rpow * yv : c * rpow;
  }
  return out;
}

}  // namespace

RatFunc Evaluator::eval(const ExprPtr& e, const std::map<int, Rational>& point) {
  keep_.insert(e);
  Ctx ctx{point, {}, {}};
  return eval_in(*e, ctx);
}

MultiPoly Evaluator::eval_polynomial(const ExprPtr& e, const std::map<int, Rational>& point) {
  RatFunc r = eval(e, point);
  if (!r.den.is_constant()) throw Error(ErrorCode::InvalidArgument, "expression is not a polynomial");
  return r.num * Rational(1 / r.den.constant_term());
}

RatFunc Evaluator::eval_in(const Expr& e, Ctx& ctx) {
  using K = Expr::Kind;
  const DegreeBound& b = bound_of(e);
  RatFunc r;
  switch (e.kind) {
    case K::Number: r.num = MultiPoly::constant(e.value); return r;
    case K::Symbol: {
      if (auto def = scope_.lookup(e.name)) {
        std::string key = ctx.key(e.name);
        if (auto it = ctx.cache.find(key); it != ctx.cache.end()) return it->second;
        r = eval_in(*def, ctx);
        ctx.cache.emplace(key, r);
        return r;
      }
      int v = vars::intern(e.name);
      r.num = ctx.assigned(v) ? MultiPoly::constant(ctx.point.at(v)) : MultiPoly::variable(v);
      return r;
    }
    case K::Neg:
      r = eval_in(*e.args[0], ctx);
      r.num = -r.num;
      return r;
    case K::Add:
    case K::Sub: {
      RatFunc a = eval_in(*e.args[0], ctx);
      RatFunc c = eval_in(*e.args[1], ctx);
      bool sub = e.kind == K::Sub;
      if (bound_of(*e.args[0]).den_constant() && bound_of(*e.args[1]).den_constant()) {
        r.num = sub ? a.num - c.num : a.num + c.num;
      } else {
        MultiPoly x = a.num * c.den, y = c.num * a.den;
        r.num = sub ? x - y : x + y;
        r.den = a.den * c.den;
      }
      break;
    }
    case K::Mul: {
      RatFunc a = eval_in(*e.args[0], ctx);
      RatFunc c = eval_in(*e.args[1], ctx);
      r.num = a.num * c.num;
      r.den = a.den * c.den;
      break;
    }
    case K::Div: {
      RatFunc a = eval_in(*e.args[0], ctx);
      RatFunc c = eval_in(*e.args[1], ctx);
      r.num = a.num * c.den;
      r.den = a.den * c.num;
      break;
    }
    case K::Pow: {
      RatFunc a = eval_in(*e.args[0], ctx);
      unsigned k = static_cast<unsigned>(std::labs(e.exponent));
      r.num = (e.exponent >= 0 ? a.num : a.den).pow(k);
      r.den = (e.exponent >= 0 ? a.den : a.num).pow(k);
      break;
    }
    case K::Coeff: {
      int x = vars::intern(e.name);
      ctx.shadow.push_back(x);
      RatFunc a = eval_in(*e.args[0], ctx);
      ctx.shadow.pop_back();
      r.num = a.num.coeff_in(x, static_cast<int>(e.exponent));
      r.den = a.den;
      break;
    }
    case K::Diff: {
      int x = vars::intern(e.name);
      ctx.shadow.push_back(x);
      r = eval_in(*e.args[0], ctx);
      ctx.shadow.pop_back();
      const bool plain = at(bound_of(*e.args[0]).den, x) == 0;
      for (long i = 0; i < e.exponent; ++i) {
        if (plain) {
          r.num = r.num.derivative(x);
        } else {
          MultiPoly n = r.num.derivative(x) * r.den - r.num * r.den.derivative(x);
          r.den = r.den * r.den;
          r.num = std::move(n);
        }
      }
      if (ctx.assigned(x)) {
        std::map<int, Rational> p{{x, ctx.point.at(x)}};
        r.num = r.num.evaluate(p);
        r.den = r.den.evaluate(p);
      }
      break;
    }
    case K::Subs: {
      int x = vars::intern(e.name);
      RatFunc v = eval_in(*e.args[1], ctx);
      ctx.shadow.push_back(x);
      RatFunc a = eval_in(*e.args[0], ctx);
      ctx.shadow.pop_back();
      const auto& ab = bound_of(*e.args[0]);
      if (bound_of(*e.args[1]).den_constant()) {
        r.num = a.num.substitute(x, v.num);
        r.den = a.den.substitute(x, v.num);
      } else {
        long kn = at(ab.num, x), kd = at(ab.den, x);
        r.num = homogenized(a.num, x, kn, v.num, v.den) * v.den.pow(static_cast<unsigned>(kd));
        r.den = homogenized(a.den, x, kd, v.num, v.den) * v.den.pow(static_cast<unsigned>(kn));
      }
      break;
    }
    case K::SqrtReduce: {
      int y = vars::intern(e.name);
      RatFunc rad = eval_in(*e.args[1], ctx);
      ctx.shadow.push_back(y);
      RatFunc a = eval_in(*e.args[0], ctx);
      ctx.shadow.pop_back();
      r.num = reduce_square(a.num, y, rad.num);
      r.den = reduce_square(a.den, y, rad.num);
      if (ctx.assigned(y)) {
        std::map<int, Rational> p{{y, ctx.point.at(y)}};
        r.num = r.num.evaluate(p);
        r.den = r.den.evaluate(p);
      }
      break;
    }
  }
  fold(r, b);
  return r;
}

}  // namespace descartes

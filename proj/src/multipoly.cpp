#include "descartes/multipoly.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "descartes/error.hpp"

namespace descartes {

namespace vars {
namespace {
std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}
std::vector<std::string>& names() {
  static std::vector<std::string> v;
  return v;
}
std::unordered_map<std::string, int>& ids() {
  static std::unordered_map<std::string, int> m;
  return m;
}
}  // namespace

int intern(const std::string& name) {
  std::lock_guard lock(table_mutex());
  auto [it, inserted] = ids().try_emplace(name, static_cast<int>(names().size()));
  if (inserted) names().push_back(name);
  return it->second;
}

std::string name(int id) {
  std::lock_guard lock(table_mutex());
  return names().at(static_cast<std::size_t>(id));
}
}  // namespace vars

namespace {

std::atomic<std::size_t> g_term_cap{MultiPoly::kDefaultTermCap};

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents mul_exp(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
  return r;
}

int exp_of(const Exponents& e, int var) {
  return static_cast<std::size_t>(var) < e.size() ? e[static_cast<std::size_t>(var)] : 0;
}

}  // namespace

void MultiPoly::set_term_cap(std::size_t cap) { g_term_cap = cap; }
std::size_t MultiPoly::term_cap() { return g_term_cap; }

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(int id) {
  MultiPoly p;
  Exponents e(static_cast<std::size_t>(id) + 1, 0);
  e.back() = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::from_univariate(const Polynomial& p, int var) {
  MultiPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    Exponents e;
    if (i > 0) {
      e.assign(static_cast<std::size_t>(var) + 1, 0);
      e.back() = static_cast<std::uint16_t>(i);
    }
    out.terms_.emplace(std::move(e), p.coeff(i));
  }
  return out;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(*this);
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly r(*this);
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return *this * o.constant_term();
  if (is_constant()) return o * constant_term();
  MultiPoly r;
  const std::size_t cap = g_term_cap;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) r.add_term(mul_exp(ea, eb), ca * cb);
    if (r.terms_.size() > cap) throw Error(ErrorCode::ExpressionTooLarge, "product exceeds the term cap");
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

int MultiPoly::degree_in(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_of(e, var));
  return d;
}

int MultiPoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

std::set<int> MultiPoly::variables() const {
  std::set<int> out;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) out.insert(static_cast<int>(i));
  return out;
}

MultiPoly MultiPoly::coeff_in(int var, int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (exp_of(e, var) != k) continue;
    Exponents f = e;
    if (static_cast<std::size_t>(var) < f.size()) f[static_cast<std::size_t>(var)] = 0;
    trim(f);
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int k = exp_of(e, var);
    if (k == 0) continue;
    Exponents f = e;
    f[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k - 1);
    trim(f);
    r.add_term(f, c * k);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  const int d = degree_in(var);
  if (d <= 0) return *this;
  // Horner in var over coefficient polynomials.
  MultiPoly r = coeff_in(var, d);
  for (int k = d - 1; k >= 0; --k) r = r * value + coeff_in(var, k);
  return r;
}

MultiPoly MultiPoly::evaluate(const std::map<int, Rational>& point) const {
  MultiPoly r;
  std::map<std::pair<int, int>, Rational> powers;
  auto power = [&](int var, int k) -> const Rational& {
    auto [it, inserted] = powers.try_emplace({var, k});
    if (inserted) it->second = descartes::pow(point.at(var), static_cast<unsigned>(k));
    return it->second;
  };
  for (const auto& [e, c] : terms_) {
    Rational coef = c;
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0 || !point.count(static_cast<int>(i))) continue;
      coef *= power(static_cast<int>(i), f[i]);
      f[i] = 0;
    }
    trim(f);
    r.add_term(f, coef);
  }
  return r;
}

Rational MultiPoly::evaluate_all(const std::map<int, Rational>& point) const {
  MultiPoly r = evaluate(point);
  if (!r.is_constant()) throw Error(ErrorCode::InvalidArgument, "evaluation point misses a variable");
  return r.constant_term();
}

Polynomial MultiPoly::to_univariate(int var) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [e, v] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && static_cast<int>(i) != var)
        throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + vars::name(var));
    c[static_cast<std::size_t>(exp_of(e, var))] += v;
  }
  return Polynomial(std::move(c));
}

Exponents MultiPoly::strip_monomial_content() {
  if (terms_.empty()) return {};
  Exponents g = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    g.resize(std::min(g.size(), e.size()));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
  }
  trim(g);
  if (g.empty()) return g;
  std::map<Exponents, Rational> out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = static_cast<std::uint16_t>(f[i] - g[i]);
    trim(f);
    out.emplace(std::move(f), c);
  }
  terms_ = std::move(out);
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Rational>> t(terms_.begin(), terms_.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (auto v : a.first) da += v;
    for (auto v : b.first) db += v;
    return da > db;
  });
  for (const auto& [e, c] : t) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = e.empty();
    if (mag != 1 || is_const) {
      out << descartes::to_string(mag);
      if (!is_const) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << vars::name(static_cast<int>(i));
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

}  // namespace descartes

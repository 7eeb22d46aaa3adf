#include "descartes/rational.hpp"

#include <cmath>

#include "descartes/error.hpp"

namespace descartes {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeLimitExceeded: return "DegreeLimitExceeded";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::EpsilonExhausted: return "EpsilonExhausted";
    case ErrorCode::InadmissiblePair: return "InadmissiblePair";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::ExpressionTooLarge: return "ExpressionTooLarge";
    case ErrorCode::NotCertifiable: return "NotCertifiable";
    case ErrorCode::ManifestParse: return "ManifestParse";
    case ErrorCode::UnknownClaimKind: return "UnknownClaimKind";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    Integer d(std::string(den), 10);
    if (d == 0) throw fail();
    result = Rational(Integer(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(digits, scale);
    result.canonicalize();
  } else {
    if (!all_digits(s)) throw fail();
    result = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

int sign(const Rational& value) { return sgn(value); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

Rational from_double(double value, int bits) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
  if (value == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, 0.5 <= |mant| < 1
  double scaled = std::ldexp(mant, bits);
  Integer m;
  mpz_set_d(m.get_mpz_t(), std::nearbyint(scaled));
  int shift = exp - bits;
  Rational r(m);
  if (shift >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), shift);
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -shift);
  }
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace descartes

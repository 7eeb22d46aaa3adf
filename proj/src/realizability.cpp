#include "descartes/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "descartes/error.hpp"

namespace descartes {

// ---------------------------------------------------------------- kappa

SignPattern TwoChangePattern::pattern() const {
  if (m < 1 || n < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "m, n, q must be positive");
  std::vector<int8_t> s;
  s.insert(s.end(), static_cast<std::size_t>(m), 1);
  s.insert(s.end(), static_cast<std::size_t>(n), -1);
  s.insert(s.end(), static_cast<std::size_t>(q), 1);
  return SignPattern(std::move(s));
}

std::optional<TwoChangePattern> as_two_change(const SignPattern& pattern) {
  const auto& s = pattern.signs();
  if (sign_changes(s) != 2 || s.back() != 1) return std::nullopt;
  TwoChangePattern tp;
  std::size_t i = 0;
  while (s[i] == 1) ++i;
  tp.m = static_cast<int>(i);
  std::size_t j = i;
  while (s[j] == -1) ++j;
  tp.n = static_cast<int>(j - i);
  tp.q = static_cast<int>(s.size() - j);
  return tp;
}

Rational kappa(const TwoChangePattern& tp) {
  if (tp.m < 1 || tp.n < 1 || tp.q < 1) throw Error(ErrorCode::InvalidArgument, "m, n, q must be positive");
  const int d = tp.degree();
  Rational k = Rational(d - tp.m - 1, tp.m) * Rational(d - tp.q - 1, tp.q);
  k.canonicalize();
  return k;
}

TwoChangeVerdict two_change_verdict(const TwoChangePattern& tp) {
  TwoChangeVerdict v;
  v.kappa = kappa(tp);
  v.kappa.canonicalize();
  const int d = tp.degree();
  if (v.kappa >= 4) {
    v.nonrealizable = AdmissiblePair{0, d - 2};
    for (const auto& a : admissible_pairs(tp.pattern()))
      if (a.pos == 2) v.realizable.push_back(a);
  }
  return v;
}

bool excluded_by_kappa(const Couple& couple) {
  const int d = couple.pattern.degree();
  if (couple.pair.pos != 0 || couple.pair.neg != d - 2) return false;
  auto tp = as_two_change(couple.pattern);
  return tp && kappa(*tp) >= 4;
}

// ---------------------------------------------------------------- concatenation

SignPattern concatenated_pattern(const SignPattern& p1, const SignPattern& p2) {
  std::vector<int8_t> s = p1.signs();
  const int8_t last = s.back();
  for (std::size_t i = 1; i < p2.size(); ++i) s.push_back(static_cast<int8_t>(last * p2[i]));
  return SignPattern(std::move(s));
}

RealizationCertificate concatenate(const RealizationCertificate& p1, const RealizationCertificate& p2) {
  Couple target(concatenated_pattern(p1.couple.pattern, p2.couple.pattern),
                AdmissiblePair{p1.couple.pair.pos + p2.couple.pair.pos, p1.couple.pair.neg + p2.couple.pair.neg});
  Rational eps(1, 2);
  for (int k = 1; k <= 64; ++k, eps /= 2) {
    auto cert = certify(p1.poly * scale_substitute(p2.poly, eps), target);
    if (cert) return *cert;
  }
  throw Error(ErrorCode::EpsilonExhausted, "no epsilon down to 2^-64 realizes " + target.key());
}

// ---------------------------------------------------------------- base cases

std::optional<RealizationCertificate> base_construction(const Couple& couple) {
  const int d = couple.pattern.degree();
  const auto& s = couple.pattern.signs();
  RootConfiguration cfg;
  bool all_plus = std::all_of(s.begin(), s.end(), [](int8_t v) { return v == 1; });
  bool alternating = true;
  for (std::size_t i = 1; i < s.size(); ++i) alternating = alternating && s[i] == -s[i - 1];
  if (all_plus && couple.pair.neg == d) {
    for (int i = 1; i <= d; ++i) cfg.negative_roots.emplace_back(i);
  } else if (alternating && couple.pair.pos == d) {
    for (int i = 1; i <= d; ++i) cfg.positive_roots.emplace_back(i);
  } else if (d == 2 && couple.pair.pos == 0 && couple.pair.neg == 0) {
    // x^2 + b x + 1 with |b| < 2
    cfg.complex_pairs.push_back({Rational(-s[1], 2), Rational(1)});
  } else {
    return std::nullopt;
  }
  return certify(expand_from_roots(cfg), couple);
}

// ---------------------------------------------------------------- search

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t couple_seed(std::uint64_t seed, const Couple& c) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char ch : c.key()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return splitmix(seed ^ splitmix(h));
}

constexpr double kClamp = 40.0;
constexpr double kMargin = 1e-7;
// Short restarts from moderate magnitudes beat long descents: the ES is
// restarted once its step drops below kMinStep.
constexpr double kMinStep = 1e-3;
constexpr int kStall = 400;
constexpr double kInit = 10.0;
constexpr double kPi = 3.14159265358979323846;

// Root parameters in log space: neg roots -e^y, pos roots e^z,
// complex pairs rho e^{+-i theta} with rho = e^r, theta = pi * sigmoid(phi).
class Searcher {
 public:
  Searcher(const Couple& c, std::uint64_t seed) : couple_(c), rng_(seed) {
    d_ = c.pattern.degree();
    npos_ = c.pair.pos;
    nneg_ = c.pair.neg;
    ncx_ = (d_ - npos_ - nneg_) / 2;
    dim_ = npos_ + nneg_ + 2 * ncx_;
    for (int i = 0; i < d_; ++i) target_.push_back(c.pattern.sign_of_power(i));
  }

  SearchOutcome run(std::uint64_t budget, int rounds) {
    SearchOutcome out;
    if (dim_ == 0) return out;
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (out.samples < budget) {
      std::vector<double> x = random_start();
      double fx = loss(x);
      ++out.samples;
      double step = 1.0;
      int stall = 0, exact_tries = 0;
      bool moved = true;
      while (out.samples < budget) {
        if (fx == 0.0 && moved) {
          if (auto cert = exact(x, rounds)) {
            out.certificate = std::move(cert);
            return out;
          }
          if (++exact_tries > 20) break;
        }
        std::vector<double> y(x);
        for (auto& v : y) v = std::clamp(v + step * gauss(rng_), -kClamp, kClamp);
        double fy = loss(y);
        ++out.samples;
        if (fy <= fx) {
          moved = fy < fx || fx == 0.0;
          stall = fy < fx ? 0 : stall + 1;
          x.swap(y);
          fx = fy;
          step *= 1.5;
        } else {
          moved = false;
          ++stall;
          step *= 0.9036;  // 1.5^(-1/4): the one-fifth success rule
        }
        step = std::min(step, 10.0);
        if (step < kMinStep || stall > kStall * dim_) break;
      }
    }
    return out;
  }

 private:
  std::vector<double> random_start() {
    std::uniform_real_distribution<double> mag(-std::log(kInit), std::log(kInit));
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::vector<double> x(static_cast<std::size_t>(dim_));
    int k = 0;
    for (int i = 0; i < npos_ + nneg_; ++i) x[static_cast<std::size_t>(k++)] = mag(rng_);
    for (int i = 0; i < ncx_; ++i) {
      x[static_cast<std::size_t>(k++)] = mag(rng_);
      x[static_cast<std::size_t>(k++)] = ang(rng_);
    }
    return x;
  }

  // Multiplies the running product by a monic factor given low-to-high.
  static void mul(std::vector<double>& p, std::initializer_list<double> f) {
    std::vector<double> r(p.size() + f.size() - 1, 0.0);
    std::size_t j = 0;
    for (double fj : f) {
      for (std::size_t i = 0; i < p.size(); ++i) r[i + j] += p[i] * fj;
      ++j;
    }
    p.swap(r);
  }

  double loss(const std::vector<double>& x) {
    std::vector<double> a{1.0}, m{1.0};
    a.reserve(static_cast<std::size_t>(d_ + 1));
    m.reserve(static_cast<std::size_t>(d_ + 1));
    int k = 0;
    for (int i = 0; i < nneg_; ++i) {
      double r = std::exp(x[static_cast<std::size_t>(k++)]);
      mul(a, {r, 1.0});
      mul(m, {r, 1.0});
    }
    for (int i = 0; i < npos_; ++i) {
      double r = std::exp(x[static_cast<std::size_t>(k++)]);
      mul(a, {-r, 1.0});
      mul(m, {r, 1.0});
    }
    for (int i = 0; i < ncx_; ++i) {
      double rho = std::exp(x[static_cast<std::size_t>(k++)]);
      double theta = kPi / (1.0 + std::exp(-x[static_cast<std::size_t>(k++)]));
      mul(a, {rho * rho, -2.0 * rho * std::cos(theta), 1.0});
      mul(m, {rho * rho, 2.0 * rho, 1.0});
    }
    double f = 0.0;
    for (int i = 0; i < d_; ++i) {
      double v = target_[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)] / m[static_cast<std::size_t>(i)];
      if (v < kMargin) f += kMargin - v;
    }
    return f;
  }

  std::optional<RealizationCertificate> exact(const std::vector<double>& x, int rounds) {
    static constexpr int kBits[] = {24, 40, 53};
    for (int r = 0; r < std::min(rounds, 3); ++r) {
      const int bits = kBits[r];
      RootConfiguration cfg;
      int k = 0;
      for (int i = 0; i < nneg_; ++i) cfg.negative_roots.push_back(from_double(std::exp(x[static_cast<std::size_t>(k++)]), bits));
      for (int i = 0; i < npos_; ++i) cfg.positive_roots.push_back(from_double(std::exp(x[static_cast<std::size_t>(k++)]), bits));
      for (int i = 0; i < ncx_; ++i) {
        double rho = std::exp(x[static_cast<std::size_t>(k++)]);
        double theta = kPi / (1.0 + std::exp(-x[static_cast<std::size_t>(k++)]));
        Rational im = from_double(rho * std::sin(theta), bits);
        if (im <= 0) continue;
        cfg.complex_pairs.push_back({from_double(rho * std::cos(theta), bits), im});
      }
      if (cfg.degree() != d_) continue;
      if (auto cert = certify(expand_from_roots(cfg), couple_)) return cert;
    }
    return std::nullopt;
  }

  Couple couple_;
  std::mt19937_64 rng_;
  int d_ = 0, npos_ = 0, nneg_ = 0, ncx_ = 0, dim_ = 0;
  std::vector<int> target_;
};

}  // namespace

SearchOutcome search_realizer(const Couple& couple, const SearchBudget& budget) {
  SearchOutcome out;
  if (auto base = base_construction(couple)) {
    out.certificate = std::move(base);
    return out;
  }
  if (budget.max_samples == 0) return out;
  // Searching inside the orbit and transporting back widens the net cheaply.
  Orbit orb = orbit(couple);
  std::vector<Couple> order{couple};
  for (const auto& c : orb.couples)
    if (c != couple) order.push_back(c);
  std::uint64_t share = budget.max_samples / order.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t b = i + 1 == order.size() ? budget.max_samples - out.samples : share;
    Searcher s(order[i], couple_seed(budget.rng_seed, order[i]));
    auto r = s.run(b, budget.refinement_rounds);
    out.samples += r.samples;
    if (r.certificate) {
      out.certificate = transport_to(*r.certificate, couple);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- pool

std::optional<RealizationCertificate> CertificatePool::get(const Couple& c) const {
  std::lock_guard lock(mu_);
  auto it = certs_.find(c.key());
  if (it == certs_.end()) return std::nullopt;
  return it->second;
}

void CertificatePool::put(const RealizationCertificate& cert) {
  std::lock_guard lock(mu_);
  certs_.insert_or_assign(cert.couple.key(), cert);
}

std::vector<RealizationCertificate> CertificatePool::all() const {
  std::lock_guard lock(mu_);
  std::vector<RealizationCertificate> out;
  for (const auto& [k, v] : certs_) out.push_back(v);
  return out;
}

std::size_t CertificatePool::size() const {
  std::lock_guard lock(mu_);
  return certs_.size();
}

bool CertificatePool::degree_done(int d) const {
  std::lock_guard lock(mu_);
  return done_.count(d) > 0;
}

void CertificatePool::mark_degree_done(int d) {
  std::lock_guard lock(mu_);
  done_.insert(d);
}

// ---------------------------------------------------------------- classification

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Realized: return "realized";
    case OrbitStatus::NonrealizableByKappa: return "nonrealizable_by_kappa";
    case OrbitStatus::Unresolved: return "unresolved";
  }
  return "unknown";
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  w = std::min(w, n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < w; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Orbit> orbits_of_degree(int degree) {
  std::set<Couple> seen;
  std::vector<Orbit> out;
  for (const auto& pat : all_patterns(degree)) {
    if (pat[0] != 1) continue;
    for (const auto& pair : admissible_pairs(pat)) {
      Couple c(pat, pair);
      if (seen.count(c)) continue;
      Orbit o = orbit(c);
      for (const auto& m : o.couples) seen.insert(m);
      out.push_back(std::move(o));
    }
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.canonical() < b.canonical(); });
  return out;
}

namespace {

std::optional<RealizationCertificate> try_concatenation(const Couple& target, const CertificatePool& pool) {
  const int d = target.pattern.degree();
  const auto& s = target.pattern.signs();
  for (int d1 = 1; d1 < d; ++d1) {
    SignPattern p1(std::vector<int8_t>(s.begin(), s.begin() + d1 + 1));
    const int8_t last = s[static_cast<std::size_t>(d1)];
    std::vector<int8_t> tail{1};
    for (std::size_t i = static_cast<std::size_t>(d1) + 1; i < s.size(); ++i) tail.push_back(static_cast<int8_t>(last * s[i]));
    SignPattern p2(std::move(tail));
    for (const auto& a1 : admissible_pairs(p1)) {
      AdmissiblePair a2{target.pair.pos - a1.pos, target.pair.neg - a1.neg};
      if (a2.pos < 0 || a2.neg < 0 || !is_admissible(p2, a2)) continue;
      auto c1 = pool.get(Couple(p1, a1));
      if (!c1) continue;
      auto c2 = pool.get(Couple(p2, a2));
      if (!c2) continue;
      try {
        return concatenate(*c1, *c2);
      } catch (const Error&) {
        // try the next split
      }
    }
  }
  return std::nullopt;
}

OrbitResult resolve_orbit(const Orbit& orb, const SearchBudget& budget, const CertificatePool& pool) {
  OrbitResult r;
  r.orbit = orb;
  for (const auto& c : orb.couples) {
    if (excluded_by_kappa(c)) {
      r.status = OrbitStatus::NonrealizableByKappa;
      r.method = "kappa";
      return r;
    }
  }
  auto finish = [&](const RealizationCertificate& cert, const char* method) {
    r.certificate = transport_to(cert, orb.canonical());
    r.status = OrbitStatus::Realized;
    r.method = method;
    return r;
  };
  for (const auto& c : orb.couples)
    if (auto cert = pool.get(c)) return finish(*cert, "stored");
  for (const auto& c : orb.couples)
    if (auto cert = base_construction(c)) return finish(*cert, "base");
  for (const auto& c : orb.couples)
    if (auto cert = try_concatenation(c, pool)) return finish(*cert, "concatenation");
  auto s = search_realizer(orb.canonical(), budget);
  r.samples = s.samples;
  if (s.certificate) return finish(*s.certificate, "search");
  r.method = "none";
  return r;
}

}  // namespace

ClassificationReport classify_degree(int degree, const SearchBudget& budget, CertificatePool& pool, int workers) {
  if (degree < 1 || degree > Polynomial::kMaxDegree)
    throw Error(ErrorCode::DegreeLimitExceeded, "degree out of range");
  for (int d = 1; d < degree; ++d)
    if (!pool.degree_done(d)) classify_degree(d, budget, pool, workers);

  ClassificationReport rep;
  rep.degree = degree;
  auto orbs = orbits_of_degree(degree);
  rep.orbits.resize(orbs.size());
  parallel_for(orbs.size(), workers, [&](std::size_t i) { rep.orbits[i] = resolve_orbit(orbs[i], budget, pool); });
  for (const auto& o : rep.orbits) {
    rep.couples += static_cast<int>(o.orbit.couples.size());
    switch (o.status) {
      case OrbitStatus::Realized:
        ++rep.realized;
        for (const auto& c : o.orbit.couples) pool.put(*transport_to(*o.certificate, c));
        break;
      case OrbitStatus::NonrealizableByKappa: ++rep.nonrealizable_by_kappa; break;
      case OrbitStatus::Unresolved: ++rep.unresolved; break;
    }
  }
  pool.mark_degree_done(degree);
  return rep;
}

}  // namespace descartes

#include "descartes/descartes.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "descartes/error.hpp"
#include "descartes/report.hpp"
#include "descartes/store.hpp"

struct dsc_poly {
  descartes::Polynomial p;
};
struct dsc_config {
  descartes::Config c;
};
struct dsc_report {
  descartes::ReportDocument doc;
};

namespace {

using namespace descartes;

thread_local std::string g_last_error;

int status_of(ErrorCode code) { return static_cast<int>(code) + 1; }

// Runs fn, translating exceptions into status codes.
template <class F>
int guard(F&& fn) {
  g_last_error.clear();
  try {
    fn();
    return DSC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSC_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

// Command failures that the CLI reports as exit codes rather than API errors.
template <class F>
int command(const char* name, dsc_report** out, F&& fn) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    ReportDocument doc;
    try {
      doc = fn();
    } catch (const Error& e) {
      // NULL arguments and resource limits are API errors, not command outcomes.
      if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ExpressionTooLarge ||
          e.code() == ErrorCode::DegreeLimitExceeded || e.code() == ErrorCode::EpsilonExhausted)
        throw;
      doc = error_report(name, e.code(), e.what());
    }
    *out = new dsc_report{std::move(doc)};
  });
}

std::vector<std::string> split_ids(const char* only) {
  std::vector<std::string> ids;
  if (!only) return ids;
  std::stringstream ss(only);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) ids.push_back(id);
  return ids;
}

}  // namespace

extern "C" {

const char* dsc_version(void) { return kEngineVersion; }

const char* dsc_status_name(int status) {
  if (status == DSC_OK) return "OK";
  if (status == DSC_INTERNAL_ERROR) return "InternalError";
  if (status > 0 && status < DSC_INTERNAL_ERROR) return to_string(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

const char* dsc_last_error(void) { return g_last_error.c_str(); }

void dsc_string_free(char* s) { std::free(s); }

int dsc_poly_parse(const char* text, dsc_poly** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new dsc_poly{Polynomial::parse(text)};
  });
}

int dsc_poly_from_coeffs(const char* const* coeffs, size_t count, dsc_poly** out) {
  return guard([&] {
    require(out, "out");
    if (count) require(coeffs, "coeffs");
    std::vector<Rational> cs;
    for (size_t i = 0; i < count; ++i) {
      require(coeffs[i], "coefficient");
      cs.push_back(parse_rational(coeffs[i]));
    }
    *out = new dsc_poly{Polynomial(std::move(cs))};
  });
}

void dsc_poly_free(dsc_poly* p) { delete p; }

int dsc_poly_degree(const dsc_poly* p, int* degree) {
  return guard([&] {
    require(p, "poly");
    require(degree, "degree");
    *degree = p->p.degree();
  });
}

int dsc_poly_to_string(const dsc_poly* p, char** out) {
  return guard([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(p->p.to_string());
  });
}

int dsc_poly_sign_pattern(const dsc_poly* p, char** out) {
  return guard([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(pattern_of(p->p).to_string());
  });
}

int dsc_poly_root_summary(const dsc_poly* p, dsc_root_summary* out) {
  return guard([&] {
    require(p, "poly");
    require(out, "out");
    RootCountSummary s = root_summary(p->p);
    *out = {s.pos_distinct, s.neg_distinct, s.pos_with_mult, s.neg_with_mult, s.zero_mult, s.complex_pairs};
  });
}

int dsc_poly_count_roots_in(const dsc_poly* p, const char* lo, const char* hi, int* count) {
  return guard([&] {
    require(p, "poly");
    require(lo, "lo");
    require(hi, "hi");
    require(count, "count");
    *count = count_roots_in(p->p, parse_rational(lo), parse_rational(hi));
  });
}

int dsc_descartes_pair(const char* pattern, int* changes, int* preservations) {
  return guard([&] {
    require(pattern, "pattern");
    require(changes, "changes");
    require(preservations, "preservations");
    DescartesPair dp = descartes_pair(SignPattern::parse(pattern));
    *changes = dp.changes;
    *preservations = dp.preservations;
  });
}

int dsc_admissible_pairs(const char* pattern, char** json_out) {
  return guard([&] {
    require(pattern, "pattern");
    require(json_out, "json_out");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : admissible_pairs(SignPattern::parse(pattern))) arr.push_back({{"pos", a.pos}, {"neg", a.neg}});
    *json_out = dup(arr.dump());
  });
}

int dsc_kappa(int m, int n, int q, char** out) {
  return guard([&] {
    require(out, "out");
    if (m < 1 || n < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "m, n and q must be positive");
    *out = dup(to_string(kappa(TwoChangePattern{m, n, q})));
  });
}

int dsc_certify(const dsc_poly* p, const char* pattern, int pos, int neg, int* ok) {
  return guard([&] {
    require(p, "poly");
    require(pattern, "pattern");
    require(ok, "ok");
    *ok = certify(p->p, Couple(SignPattern::parse(pattern), {pos, neg})).has_value() ? 1 : 0;
  });
}

int dsc_config_new(dsc_config** out) {
  return guard([&] {
    require(out, "out");
    *out = new dsc_config{};
  });
}

int dsc_config_load(const char* path, dsc_config** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new dsc_config{load_config(path)};
  });
}

int dsc_config_set(dsc_config* cfg, const char* key, const char* value) {
  return guard([&] {
    require(cfg, "config");
    require(key, "key");
    require(value, "value");
    Config copy = cfg->c;
    copy.set(key, value);
    copy.validate();
    cfg->c = copy;
  });
}

void dsc_config_free(dsc_config* cfg) { delete cfg; }

int dsc_cmd_classify(const dsc_config* cfg, int degree, dsc_report** out) {
  return command("classify", out, [&] {
    require(cfg, "config");
    return cmd_classify(cfg->c, degree);
  });
}

int dsc_cmd_orbit(const dsc_config* cfg, const char* pattern, int pos, int neg, dsc_report** out) {
  return command("orbit", out, [&] {
    require(cfg, "config");
    require(pattern, "pattern");
    return cmd_orbit(cfg->c, pattern, pos, neg);
  });
}

int dsc_cmd_verify(const dsc_config* cfg, const char* manifest, const char* only, dsc_report** out) {
  return command("verify", out, [&] {
    require(cfg, "config");
    return cmd_verify(cfg->c, manifest ? manifest : cfg->c.manifest, split_ids(only));
  });
}

int dsc_cmd_search(const dsc_config* cfg, const char* pattern, int pos, int neg, dsc_report** out) {
  return command("search", out, [&] {
    require(cfg, "config");
    require(pattern, "pattern");
    return cmd_search(cfg->c, pattern, pos, neg);
  });
}

const char* dsc_report_text(const dsc_report* r) { return r ? r->doc.text.c_str() : ""; }

int dsc_report_json(const dsc_report* r, int with_metadata, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(r->doc.json(with_metadata != 0));
  });
}

int dsc_report_exit_code(const dsc_report* r) { return r ? r->doc.exit_code : 2; }

void dsc_report_free(dsc_report* r) { delete r; }

}  // extern "C"

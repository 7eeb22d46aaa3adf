// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "descartes/descartes.h"

namespace {

struct Options {
  std::string config_path;
  std::optional<std::string> budget, seed, store, workers;
  bool json = false;
  bool no_metadata = false;
  std::string report_path;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_path, "TOML-style config file");
  sub->add_option("--budget", o.budget, "search sample budget");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--store", o.store, "NDJSON certificate/result store");
  sub->add_option("--workers", o.workers, "worker threads");
  sub->add_flag("--json", o.json, "print the JSON report instead of text");
  sub->add_flag("--no-metadata", o.no_metadata, "omit timings and timestamps from JSON");
  sub->add_option("--report", o.report_path, "also write the JSON report to this file");
}

int fail(const char* what, int status) {
  std::cerr << "error: " << what << ": " << dsc_status_name(status) << ": " << dsc_last_error() << "\n";
  return 2;
}

// Builds the config: file first, then command-line overrides.
dsc_config* make_config(const Options& o, int& status) {
  dsc_config* cfg = nullptr;
  status = o.config_path.empty() ? dsc_config_new(&cfg) : dsc_config_load(o.config_path.c_str(), &cfg);
  if (status != DSC_OK) return nullptr;
  auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (status == DSC_OK && v) status = dsc_config_set(cfg, key, v->c_str());
  };
  set("budget", o.budget);
  set("seed", o.seed);
  set("store", o.store);
  set("workers", o.workers);
  if (status != DSC_OK) {
    dsc_config_free(cfg);
    return nullptr;
  }
  return cfg;
}

int emit(dsc_report* rep, const Options& o) {
  char* json = nullptr;
  int st = dsc_report_json(rep, o.no_metadata ? 0 : 1, &json);
  if (st != DSC_OK) return fail("report", st);
  if (o.json)
    std::cout << json << "\n";
  else
    std::cout << dsc_report_text(rep);
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path);
    out << json << "\n";
    if (!out) std::cerr << "warning: could not write " << o.report_path << "\n";
  }
  dsc_string_free(json);
  int code = dsc_report_exit_code(rep);
  dsc_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic tools for Descartes' rule of signs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dsc_version()));

  Options o;
  int degree = 0, pos = 0, neg = 0;
  std::string pattern, manifest, only;

  auto* classify = app.add_subcommand("classify", "classify every orbit of one degree");
  classify->add_option("--degree", degree, "polynomial degree")->required();
  add_common(classify, o);

  auto* orbit = app.add_subcommand("orbit", "list the orbit of a couple");
  auto* search = app.add_subcommand("search", "search for a realizing polynomial");
  for (auto* sub : {orbit, search}) {
    sub->add_option("--pattern", pattern, "sign pattern, e.g. ++-++")->required();
    sub->add_option("--pos", pos, "positive roots")->required();
    sub->add_option("--neg", neg, "negative roots")->required();
    add_common(sub, o);
  }

  auto* verify = app.add_subcommand("verify", "verify a claim manifest");
  verify->add_option("--manifest", manifest, "manifest path (default from config)");
  verify->add_option("--only", only, "comma-separated claim ids");
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int st = DSC_OK;
  dsc_config* cfg = make_config(o, st);
  if (!cfg) return fail("config", st);

  dsc_report* rep = nullptr;
  if (*classify)
    st = dsc_cmd_classify(cfg, degree, &rep);
  else if (*orbit)
    st = dsc_cmd_orbit(cfg, pattern.c_str(), pos, neg, &rep);
  else if (*search)
    st = dsc_cmd_search(cfg, pattern.c_str(), pos, neg, &rep);
  else
    st = dsc_cmd_verify(cfg, manifest.empty() ? nullptr : manifest.c_str(), only.empty() ? nullptr : only.c_str(),
                        &rep);
  dsc_config_free(cfg);
  if (st != DSC_OK) return fail("command", st);
  return emit(rep, o);
}

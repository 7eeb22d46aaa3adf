#include "descartes/config.hpp"

#include <fstream>
#include <sstream>

#include "descartes/error.hpp"

namespace descartes {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

std::uint64_t as_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
    auto x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    config_error("'" + key + "' expects a nonnegative integer, got '" + v + "'");
  }
}

int as_int(const std::string& key, const std::string& v) {
  auto x = as_u64(key, v);
  if (x > 1000000000ULL) config_error("'" + key + "' is out of range");
  return static_cast<int>(x);
}

Rational as_rational(const std::string& key, const std::string& v) {
  // Accept plain decimals, p/q, and 1e-9 style exponents.
  std::string s = v;
  auto e = s.find_first_of("eE");
  try {
    if (e == std::string::npos) return parse_rational(s);
    Rational mant = parse_rational(s.substr(0, e));
    int ex = std::stoi(s.substr(e + 1));
    Rational ten = pow(Rational(10), static_cast<unsigned>(ex < 0 ? -ex : ex));
    return ex < 0 ? Rational(mant / ten) : Rational(mant * ten);
  } catch (const std::exception&) {
    config_error("'" + key + "' expects a rational number, got '" + v + "'");
  }
}

}  // namespace

void Config::set(const std::string& raw_key, const std::string& raw_value) {
  std::string key = raw_key;
  // Section prefixes are accepted and ignored: [search] budget == budget.
  if (auto dot = key.rfind('.'); dot != std::string::npos) key = key.substr(dot + 1);
  std::string value = trim(raw_value);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
  if (key == "max_degree") max_degree = as_int(key, value);
  else if (key == "budget") budget = as_u64(key, value);
  else if (key == "seed") seed = as_u64(key, value);
  else if (key == "refinement_rounds") refinement_rounds = as_int(key, value);
  else if (key == "floor") floor = as_rational(key, value);
  else if (key == "max_boxes") max_boxes = static_cast<long>(as_u64(key, value));
  else if (key == "truncation") truncation = as_rational(key, value);
  else if (key == "grid_point_cap") grid_point_cap = as_u64(key, value);
  else if (key == "expand_term_cap") expand_term_cap = as_u64(key, value);
  else if (key == "manifest") manifest = value;
  else if (key == "store") store = value;
  else if (key == "workers") workers = as_int(key, value);
  else config_error("unknown configuration key '" + raw_key + "'");
}

void Config::validate() const {
  if (max_degree < 1 || max_degree > Polynomial::kMaxDegree) config_error("max_degree must be in 1..64");
  if (refinement_rounds < 1) config_error("refinement_rounds must be positive");
  if (floor <= 0) config_error("floor must be positive");
  if (max_boxes <= 0) config_error("max_boxes must be positive");
  if (truncation <= 0) config_error("truncation must be positive");
  if (grid_point_cap == 0 || expand_term_cap == 0) config_error("size caps must be positive");
  if (workers < 1) config_error("workers must be positive");
}

std::string Config::canonical() const {
  std::ostringstream os;
  os << "budget = " << budget << "\n"
     << "expand_term_cap = " << expand_term_cap << "\n"
     << "floor = " << to_string(floor) << "\n"
     << "grid_point_cap = " << grid_point_cap << "\n"
     << "manifest = \"" << manifest << "\"\n"
     << "max_boxes = " << max_boxes << "\n"
     << "max_degree = " << max_degree << "\n"
     << "refinement_rounds = " << refinement_rounds << "\n"
     << "seed = " << seed << "\n"
     << "truncation = " << to_string(truncation) << "\n";
  // store and workers do not change results, so they stay out of the hash.
  return os.str();
}

std::string Config::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerifyOptions Config::verify_options() const {
  VerifyOptions o;
  o.positivity.floor = floor;
  o.positivity.max_boxes = max_boxes;
  o.positivity.truncation = truncation;
  o.grid_point_cap = grid_point_cap;
  o.expand_term_cap = expand_term_cap;
  return o;
}

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') config_error("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) config_error("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) config_error("line " + std::to_string(lineno) + ": empty key");
    c.set(section.empty() ? key : section + "." + key, line.substr(eq + 1));
  }
  c.validate();
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace descartes

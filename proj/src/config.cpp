#include "hardy/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hardy/coeff_vec.hpp"

namespace hardy {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& text, const std::string& what) {
  throw ValidationError("config: key '" + key + "' has invalid value '" + text + "' (" + what + ")");
}

}  // namespace

const std::vector<std::string>& known_experiments() {
  static const std::vector<std::string> names{"kernel-sweep", "berezin",      "semigroup-check",
                                              "hk-table",     "gram-dist",    "eq-checks",
                                              "codim-probe",  "density-probe", "orbit-probe"};
  return names;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_experiment = false;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
    if (!seen.insert(key).second) throw ValidationError("config: duplicate key '" + key + "'");
    if (key == "experiment") {
      if (std::find(known_experiments().begin(), known_experiments().end(), value) == known_experiments().end()) {
        bad_value(key, value, "unknown experiment");
      }
      cfg.experiment = value;
      have_experiment = true;
    } else if (key == "seed") {
      std::uint64_t s = 0;
      auto res = std::from_chars(value.data(), value.data() + value.size(), s);
      if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) bad_value(key, value, "nonnegative integer");
      cfg.seed = s;
      cfg.seed_text = value;
    } else if (key == "outputDir") {
      if (value.empty()) bad_value(key, value, "path");
      cfg.output_dir = value;
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const ValidationError&) {
        bad_value(key, value, "csv, json or both");
      }
    } else {
      cfg.params[key] = value;
    }
  }
  if (!have_experiment) throw ValidationError("config: missing required key 'experiment'");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

long long parse_int(const std::string& key, const std::string& text) {
  long long v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) bad_value(key, text, "integer");
  return v;
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || !std::isfinite(v)) bad_value(key, text, "real");
  return v;
}

std::complex<double> parse_complex(const std::string& key, const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() == 1) return {parse_real(key, parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(key, parts[0]), parse_real(key, parts[1])};
  bad_value(key, text, "complex as re,im");
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_real(key, item));
  if (out.empty()) bad_value(key, text, "nonempty list");
  return out;
}

std::vector<long long> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<long long> out;
  for (const auto& item : split_list(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(key, item));
      continue;
    }
    const long long lo = parse_int(key, item.substr(0, dots));
    const long long hi = parse_int(key, item.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) bad_value(key, text, "range a..b with a <= b");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) bad_value(key, text, "nonempty list");
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  bad_value(key, text, "true or false");
}

const std::string& ParamReader::raw(const std::string& key, const std::string& def) {
  used_.insert(key);
  auto it = cfg_.params.find(key);
  if (it != cfg_.params.end()) return it->second;
  scratch_ = def;
  return scratch_;
}

std::string ParamReader::text(const std::string& key, const std::string& def) {
  const std::string v = raw(key, def);
  resolved(key, v);
  return v;
}

long long ParamReader::integer(const std::string& key, long long def, long long min_value) {
  const std::string t = raw(key, std::to_string(def));
  const long long v = parse_int(key, t);
  if (v < min_value) bad_value(key, t, "must be >= " + std::to_string(min_value));
  resolved(key, std::to_string(v));
  return v;
}

double ParamReader::real(const std::string& key, double def) {
  const std::string t = raw(key, format_double(def));
  const double v = parse_real(key, t);
  resolved(key, format_double(v));
  return v;
}

std::complex<double> ParamReader::complex(const std::string& key, const std::string& def) {
  const std::string t = raw(key, def);
  const auto v = parse_complex(key, t);
  resolved(key, format_double(v.real()) + "," + format_double(v.imag()));
  return v;
}

std::vector<double> ParamReader::reals(const std::string& key, const std::string& def) {
  const std::string t = raw(key, def);
  const auto v = parse_real_list(key, t);
  std::string canon;
  for (std::size_t i = 0; i < v.size(); ++i) canon += (i ? "," : "") + format_double(v[i]);
  resolved(key, canon);
  return v;
}

std::vector<long long> ParamReader::integers(const std::string& key, const std::string& def, long long min_value) {
  const std::string t = raw(key, def);
  const auto v = parse_int_list(key, t);
  for (long long x : v) {
    if (x < min_value) bad_value(key, t, "entries must be >= " + std::to_string(min_value));
  }
  resolved(key, t);
  return v;
}

bool ParamReader::boolean(const std::string& key, bool def) {
  const std::string t = raw(key, def ? "true" : "false");
  const bool v = parse_bool(key, t);
  resolved(key, v ? "true" : "false");
  return v;
}

void ParamReader::resolved(const std::string& key, const std::string& value) {
  for (auto& [k, v] : resolved_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  resolved_.emplace_back(key, value);
}

void ParamReader::finish() const {
  for (const auto& [k, v] : cfg_.params) {
    if (!used_.count(k)) {
      throw ValidationError("config: unknown key '" + k + "' (value '" + v + "') for experiment '" + cfg_.experiment +
                            "'");
    }
  }
}

}  // namespace hardy

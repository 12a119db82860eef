#pragma once

// Flat key=value run configuration, one pair per line, '#' starts a comment.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hardy/report.hpp"

namespace hardy {

struct RunConfig {
  std::string experiment;
  std::map<std::string, std::string> params;
  std::string seed_text = "0";
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "out";
  OutputFormat format = OutputFormat::both;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

const std::vector<std::string>& known_experiments();

long long parse_int(const std::string& key, const std::string& text);
double parse_real(const std::string& key, const std::string& text);
/// "re,im" or a single real.
std::complex<double> parse_complex(const std::string& key, const std::string& text);
std::vector<std::string> split_list(const std::string& text, char sep = ',');
std::vector<double> parse_real_list(const std::string& key, const std::string& text);
/// Comma-separated integers and inclusive ranges "a..b".
std::vector<long long> parse_int_list(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);

/// Reads typed parameters with defaults and records every resolved value,
/// so a report's metadata is enough to rerun it. finish() rejects any
/// configured key that no reader asked for.
class ParamReader {
 public:
  explicit ParamReader(const RunConfig& cfg) : cfg_(cfg) {}

  std::string text(const std::string& key, const std::string& def);
  long long integer(const std::string& key, long long def, long long min_value);
  double real(const std::string& key, double def);
  std::complex<double> complex(const std::string& key, const std::string& def);
  std::vector<double> reals(const std::string& key, const std::string& def);
  std::vector<long long> integers(const std::string& key, const std::string& def, long long min_value);
  bool boolean(const std::string& key, bool def);
  /// Records a value derived from other parameters.
  void resolved(const std::string& key, const std::string& value);

  void finish() const;
  const std::vector<std::pair<std::string, std::string>>& resolved() const { return resolved_; }

 private:
  const std::string& raw(const std::string& key, const std::string& def);

  const RunConfig& cfg_;
  std::set<std::string> used_;
  std::vector<std::pair<std::string, std::string>> resolved_;
  std::string scratch_;
};

}  // namespace hardy

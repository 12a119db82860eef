#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hardy/coeff_vec.hpp"

namespace hardy {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Labeled table produced by sweeps and probes.
///
/// Complex quantities are stored as two adjacent real columns, named
/// re(x) and im(x). Metadata keys keep insertion order.
class SweepReport {
 public:
  SweepReport() = default;
  SweepReport(std::string id, std::vector<std::string> columns);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

  void add_row(std::vector<Cell> row);
  /// Sets or replaces a metadata entry.
  void set_meta(const std::string& key, std::string value);
  void set_meta(const std::string& key, double value);
  void set_meta(const std::string& key, std::int64_t value);
  const std::string* meta(const std::string& key) const;

  std::size_t column_index(const std::string& name) const;
  /// Numeric column as doubles (integers widened); throws on text cells.
  std::vector<double> numeric_column(const std::string& name) const;
  std::vector<std::string> text_column(const std::string& name) const;

 private:
  std::string id_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

/// Shortest string that parses back to the same double.
std::string format_double(double v);

enum class OutputFormat { csv, json, both };

OutputFormat parse_format(const std::string& text);

std::string to_csv(const SweepReport& report);
std::string to_json(const SweepReport& report);

/// Writes <dir>/<id>.csv and/or <dir>/<id>.json; returns the paths written.
std::vector<std::filesystem::path> emit(const SweepReport& report, OutputFormat format,
                                        const std::filesystem::path& dir);

}  // namespace hardy

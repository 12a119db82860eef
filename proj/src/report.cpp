#include "hardy/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace hardy {

SweepReport::SweepReport(std::string id, std::vector<std::string> columns)
    : id_(std::move(id)), columns_(std::move(columns)) {
  if (columns_.empty()) throw ValidationError("SweepReport " + id_ + ": no columns");
}

void SweepReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw ValidationError("SweepReport " + id_ + ": row has " + std::to_string(row.size()) +
                          " cells, expected " + std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void SweepReport::set_meta(const std::string& key, std::string value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata_.emplace_back(key, std::move(value));
}

void SweepReport::set_meta(const std::string& key, double value) { set_meta(key, format_double(value)); }

void SweepReport::set_meta(const std::string& key, std::int64_t value) {
  set_meta(key, std::to_string(value));
}

const std::string* SweepReport::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::size_t SweepReport::column_index(const std::string& name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw ValidationError("SweepReport " + id_ + ": no column " + name);
  return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> SweepReport::numeric_column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    if (const auto* d = std::get_if<double>(&row[c])) {
      out.push_back(*d);
    } else if (const auto* i = std::get_if<std::int64_t>(&row[c])) {
      out.push_back(static_cast<double>(*i));
    } else {
      throw ValidationError("SweepReport " + id_ + ": column " + name + " is not numeric");
    }
  }
  return out;
}

std::vector<std::string> SweepReport::text_column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    if (const auto* s = std::get_if<std::string>(&row[c])) {
      out.push_back(*s);
    } else {
      throw ValidationError("SweepReport " + id_ + ": column " + name + " is not text");
    }
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "both") return OutputFormat::both;
  throw ValidationError("format: expected csv, json or both (got '" + text + "')");
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const SweepReport& report) {
  std::string out;
  // metadata travels as leading comment lines, the header row follows
  out += "# experiment=" + report.id() + "\n";
  for (const auto& [k, v] : report.metadata()) out += "# " + k + "=" + v + "\n";
  for (std::size_t c = 0; c < report.columns().size(); ++c) {
    if (c) out += ',';
    out += csv_escape(report.columns()[c]);
  }
  out += '\n';
  for (const auto& row : report.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(cell_text(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepReport& report) {
  using nlohmann::ordered_json;
  ordered_json meta = ordered_json::object();
  meta["experiment"] = report.id();
  for (const auto& [k, v] : report.metadata()) meta[k] = v;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows()) {
    ordered_json r = ordered_json::array();
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        if (std::isfinite(*d)) {
          r.push_back(*d);
        } else {
          r.push_back(format_double(*d));
        }
      } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        r.push_back(*i);
      } else {
        r.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(r));
  }
  ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["columns"] = report.columns();
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::vector<std::filesystem::path> emit(const SweepReport& report, OutputFormat format,
                                        const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
  };
  if (format != OutputFormat::json) write(dir / (report.id() + ".csv"), to_csv(report));
  if (format != OutputFormat::csv) write(dir / (report.id() + ".json"), to_json(report));
  return written;
}

}  // namespace hardy

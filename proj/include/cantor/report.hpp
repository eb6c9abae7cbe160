#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cantor {

inline constexpr std::string_view kEngineVersion = "cantor-cover 0.1.0";

enum class OutputFormat { kTable, kCsv, kJson };

// Accepts "table", "csv", "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

// Small column-aligned text table / RFC-4180 CSV emitter.
class TableWriter {
 public:
  explicit TableWriter(std::vector<std::string> headers) : headers_(std::move(headers)) {}

  void add_row(std::vector<std::string> cells);
  std::string table() const;
  std::string csv() const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(const std::string& field);

// "2026-08-09T12:34:56Z"
std::string iso8601_utc_now();

// Stable content hash for record file names.
std::string fnv1a_hex(std::string_view data);

}  // namespace cantor

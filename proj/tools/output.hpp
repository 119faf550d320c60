#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace altbest::cli {

inline constexpr const char* kFormatVersion = "1";

/// Rounds to 12 significant digits, the precision every printed number uses.
double round12(double x);
std::string format12(double x);

struct OutputRecord {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();  // flat: numbers or strings
  std::string format_version = kFormatVersion;

  /// Stores a probability or other real at 12 significant digits.
  void set_real(const std::string& key, double value) { results[key] = round12(value); }
};

enum class Format { JsonLines, Csv };

Format parse_format(const std::string& name);

/// JSON lines: one object per record. CSV: header from the first record's
/// result keys, then one row per record.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

std::string to_json_line(const OutputRecord& record);

}  // namespace altbest::cli

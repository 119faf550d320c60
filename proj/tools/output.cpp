#include "output.hpp"

#include <cstdio>
#include <cstdlib>

#include "altbest/errors.hpp"

namespace altbest::cli {

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

Format parse_format(const std::string& name) {
  if (name == "json") return Format::JsonLines;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown format '" + name + "' (expected json or csv)");
}

std::string to_json_line(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["format_version"] = record.format_version;
  j["parameters"] = record.parameters;
  j["results"] = record.results;
  return j.dump();
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) return format12(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
  if (format == Format::JsonLines) {
    for (const auto& r : records) out << to_json_line(r) << '\n';
    return;
  }
  if (records.empty()) return;
  bool first = true;
  for (const auto& [key, _] : records.front().results.items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& r : records) {
    first = true;
    for (const auto& [_, value] : r.results.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace altbest::cli

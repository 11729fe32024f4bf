#include "credal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "credal/documents.hpp"

namespace credal {

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  // Avoid printing "-0.000000" for negative dust.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_vector(std::span<const double> values, int decimals) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_fixed(values[i], decimals);
  }
  return out + "]";
}

std::string render_mass_table(std::span<const MassColumn> columns, OutputFormat format) {
  if (columns.empty()) throw std::invalid_argument("no columns to render");
  const Frame& frame = columns.front().mass.frame();
  for (const auto& c : columns) require_same_frame(frame, c.mass.frame());

  if (format == OutputFormat::Json) {
    if (columns.size() == 1) return to_json(columns.front().mass).dump(2) + "\n";
    nlohmann::json results = nlohmann::json::array();
    for (const auto& c : columns) {
      nlohmann::json doc = to_json(c.mass);
      doc["name"] = c.name;
      results.push_back(std::move(doc));
    }
    return nlohmann::json{{"results", std::move(results)}}.dump(2) + "\n";
  }

  std::set<SubsetMask> rows{frame.empty_set(), frame.full_set()};
  for (const auto& c : columns) {
    for (const auto& [set, mass] : c.mass.focal()) rows.insert(set);
  }

  std::string out;
  if (format == OutputFormat::Csv) {
    out += "set";
    for (const auto& c : columns) out += "," + csv_quote(c.name);
    out += "\n";
    for (SubsetMask row : rows) {
      out += csv_quote(frame.format(row));
      for (const auto& c : columns) out += "," + format_fixed(c.mass.at(row), 6);
      out += "\n";
    }
    return out;
  }

  std::size_t set_width = 3;
  for (SubsetMask row : rows) set_width = std::max(set_width, frame.format(row).size());
  std::vector<std::size_t> widths;
  for (const auto& c : columns) widths.push_back(std::max<std::size_t>(c.name.size(), 8));

  out += pad("set", set_width, false);
  for (std::size_t i = 0; i < columns.size(); ++i) out += "  " + pad(columns[i].name, widths[i], true);
  out += "\n";
  for (SubsetMask row : rows) {
    out += pad(frame.format(row), set_width, false);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out += "  " + pad(format_fixed(columns[i].mass.at(row), 6), widths[i], true);
    }
    out += "\n";
  }
  return out;
}

}  // namespace credal

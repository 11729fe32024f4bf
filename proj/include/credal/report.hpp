#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credal/mass_function.hpp"

namespace credal {

enum class OutputFormat { Text, Csv, Json };

/// "text", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view name);

struct MassColumn {
  std::string name;
  MassFunction mass;
};

/// One row per subset focal in any column plus the empty set and the whole
/// frame, ascending by bitmask; masses to six decimals. All columns must share
/// a frame. JSON output is a mass document for a single column and
/// {"results": [{"name": ..., "frame": ..., "masses": ...}]} otherwise.
std::string render_mass_table(std::span<const MassColumn> columns, OutputFormat format);

/// "[0.6931, 0.1733, 0.0462]"
std::string format_vector(std::span<const double> values, int decimals);

std::string format_fixed(double value, int decimals);

}  // namespace credal

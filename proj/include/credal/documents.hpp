#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "credal/context.hpp"
#include "credal/mass_function.hpp"
#include "credal/temporal.hpp"

namespace credal {

/// Malformed or invalid JSON document. The message names the offending line
/// and column (syntax errors) or field path such as `masses[1].set[0]`.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mass document:    {"frame": ["a","h","r"], "masses": [{"set": ["a"], "mass": 0.5}, ...]}
// Context document: {"contexts": [{"set": ["h","r"], "alpha": 0.4}]}
// Decay document:   {"decay": [{"set": ["w1"], "half_life_s": 1.0} | {"set": [...], "lambda": 0.17}
//                              | {"set": [...], "fraction": {"n": 16, "t_s": 4.0}}]}
// "set": [] is the empty set and "set": "*" the whole frame.

MassFunction parse_mass_document(std::string_view text);
ContextVector parse_context_document(const Frame& frame, std::string_view text);
DecaySpec parse_decay_document(const Frame& frame, std::string_view text);

nlohmann::json to_json(const MassFunction& m);
nlohmann::json to_json(const ContextVector& ctx);

/// Whole file as a string; DocumentError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace credal

#include "credal/documents.hpp"

#include <fstream>
#include <sstream>

#include "credal/error.hpp"

namespace credal {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
}

const json& require_field(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw DocumentError(path + ": expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw DocumentError(path + "." + key + ": missing field");
  return *it;
}

double require_number(const json& value, const std::string& path) {
  if (!value.is_number()) throw DocumentError(path + ": expected a number");
  return value.get<double>();
}

const json& require_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw DocumentError(path + ": expected an array");
  return value;
}

SubsetMask parse_set(const Frame& frame, const json& value, const std::string& path) {
  if (value.is_string()) {
    if (value.get<std::string>() == "*") return frame.full_set();
    throw DocumentError(path + ": a string set must be \"*\"");
  }
  require_array(value, path);
  SubsetMask result;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    if (!value[i].is_string()) throw DocumentError(item_path + ": expected a label string");
    const int index = frame.index_of(value[i].get<std::string>());
    if (index < 0) throw DocumentError(item_path + ": unknown label '" + value[i].get<std::string>() + "'");
    result = result | frame.singleton(index);
  }
  return result;
}

// Library validation failures are reported against the document they came from.
template <typename F>
auto validated(const std::string& what, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw DocumentError(what + ": " + e.what());
  }
}

json set_to_json(const Frame& frame, SubsetMask a) { return frame.members(a); }

}  // namespace

MassFunction parse_mass_document(std::string_view text) {
  const json doc = parse_json(text);
  const json& labels = require_array(require_field(doc, "frame", "$"), "$.frame");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw DocumentError("$.frame[" + std::to_string(i) + "]: expected a label string");
    names.push_back(labels[i].get<std::string>());
  }
  const Frame frame = validated("$.frame", [&] { return Frame::build(names); });

  const json& masses = require_array(require_field(doc, "masses", "$"), "$.masses");
  std::vector<std::pair<SubsetMask, double>> entries;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string path = "$.masses[" + std::to_string(i) + "]";
    const SubsetMask set = parse_set(frame, require_field(masses[i], "set", path), path + ".set");
    const double mass = require_number(require_field(masses[i], "mass", path), path + ".mass");
    entries.emplace_back(set, mass);
  }
  return validated("$.masses", [&] { return MassFunction::from_masks(frame, entries); });
}

ContextVector parse_context_document(const Frame& frame, std::string_view text) {
  const json doc = parse_json(text);
  const json& list = require_array(require_field(doc, "contexts", "$"), "$.contexts");
  std::vector<Context> contexts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.contexts[" + std::to_string(i) + "]";
    const SubsetMask set = parse_set(frame, require_field(list[i], "set", path), path + ".set");
    const double alpha = require_number(require_field(list[i], "alpha", path), path + ".alpha");
    contexts.push_back({set, alpha});
  }
  return validated("$.contexts", [&] { return ContextVector(frame, std::move(contexts)); });
}

DecaySpec parse_decay_document(const Frame& frame, std::string_view text) {
  const json doc = parse_json(text);
  const json& list = require_array(require_field(doc, "decay", "$"), "$.decay");
  std::vector<DecayEntry> entries;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.decay[" + std::to_string(i) + "]";
    const json& item = list[i];
    const SubsetMask set = parse_set(frame, require_field(item, "set", path), path + ".set");
    const int forms = static_cast<int>(item.contains("half_life_s")) + static_cast<int>(item.contains("lambda")) +
                      static_cast<int>(item.contains("fraction"));
    if (forms != 1) throw DocumentError(path + ": exactly one of half_life_s, lambda, fraction is required");
    double lambda = 0.0;
    if (item.contains("half_life_s")) {
      const double t = require_number(item["half_life_s"], path + ".half_life_s");
      lambda = validated(path + ".half_life_s", [&] { return lambda_from_half_life(t); });
    } else if (item.contains("lambda")) {
      lambda = require_number(item["lambda"], path + ".lambda");
    } else {
      const json& fraction = item["fraction"];
      const double n = require_number(require_field(fraction, "n", path + ".fraction"), path + ".fraction.n");
      const double t = require_number(require_field(fraction, "t_s", path + ".fraction"), path + ".fraction.t_s");
      lambda = validated(path + ".fraction", [&] { return lambda_from_fraction_life(n, t); });
    }
    entries.push_back({set, lambda});
  }
  return validated("$.decay", [&] { return DecaySpec(frame, std::move(entries)); });
}

nlohmann::json to_json(const MassFunction& m) {
  json masses = json::array();
  for (const auto& [set, mass] : m.focal()) masses.push_back({{"set", set_to_json(m.frame(), set)}, {"mass", mass}});
  return {{"frame", m.frame().labels()}, {"masses", std::move(masses)}};
}

nlohmann::json to_json(const ContextVector& ctx) {
  json list = json::array();
  for (const auto& c : ctx) list.push_back({{"set", set_to_json(ctx.frame(), c.set)}, {"alpha", c.alpha}});
  return {{"contexts", std::move(list)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace credal

#include "credal/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "credal/error.hpp"

namespace credal {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Frame Frame::build(std::span<const std::string> labels) {
  if (labels.empty() || labels.size() > static_cast<std::size_t>(kMaxFrameSize)) {
    throw Error(ErrorKind::FrameTooLarge,
                "frame must hold between 1 and " + std::to_string(kMaxFrameSize) + " labels, got " +
                    std::to_string(labels.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error(ErrorKind::EmptyLabel, "frame labels must be non-empty");
    if (!seen.insert(label).second) throw Error(ErrorKind::DuplicateLabel, "label '" + label + "' appears twice");
  }
  return Frame(std::make_shared<const std::vector<std::string>>(labels.begin(), labels.end()));
}

Frame Frame::build(std::initializer_list<std::string_view> labels) {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return build(std::span<const std::string>(owned));
}

int Frame::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  return it == labels_->end() ? -1 : static_cast<int>(it - labels_->begin());
}

SubsetMask Frame::subset_of(std::span<const std::string> labels) const {
  SubsetMask result;
  for (const auto& label : labels) {
    const int i = index_of(label);
    if (i < 0) throw Error(ErrorKind::UnknownLabel, "label '" + label + "' is not in the frame");
    result = result | singleton(i);
  }
  return result;
}

SubsetMask Frame::parse_subset(std::string_view expr) const {
  expr = trim(expr);
  if (expr == "*") return full_set();
  if (!expr.empty() && expr.front() == '{') {
    if (expr.back() != '}') throw Error(ErrorKind::UnknownLabel, "unbalanced braces in '" + std::string(expr) + "'");
    expr = trim(expr.substr(1, expr.size() - 2));
  }
  SubsetMask result;
  while (!expr.empty()) {
    const auto comma = expr.find(',');
    const auto token = trim(expr.substr(0, comma));
    const int i = index_of(token);
    if (i < 0) throw Error(ErrorKind::UnknownLabel, "label '" + std::string(token) + "' is not in the frame");
    result = result | singleton(i);
    if (comma == std::string_view::npos) break;
    expr = expr.substr(comma + 1);
  }
  return result;
}

std::string Frame::format(SubsetMask a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!a.contains(singleton(i))) continue;
    if (!first) out += ',';
    out += label(i);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<std::string> Frame::members(SubsetMask a) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (a.contains(singleton(i))) out.push_back(label(i));
  }
  return out;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::FrameMismatch, "operands are defined on different frames");
  }
}

}  // namespace credal

#include "credal/context.hpp"

#include <cmath>
#include <set>

#include "credal/error.hpp"

namespace credal {

ContextVector::ContextVector(Frame frame, std::vector<Context> contexts)
    : frame_(std::move(frame)), contexts_(std::move(contexts)) {
  std::set<SubsetMask> seen;
  for (const auto& c : contexts_) {
    if (!frame_.is_valid(c.set)) throw Error(ErrorKind::UnknownLabel, "context bitmask is outside the frame");
    if (c.set.empty()) throw Error(ErrorKind::EmptyContext, "no discount rate can be attached to the empty set");
    if (!seen.insert(c.set).second) {
      throw Error(ErrorKind::DuplicateContext, "context " + frame_.format(c.set) + " listed twice");
    }
    if (!std::isfinite(c.alpha) || c.alpha < 0.0 || c.alpha > 1.0) {
      throw Error(ErrorKind::AlphaOutOfRange,
                  "discount rate of " + frame_.format(c.set) + " must lie in [0,1], got " + std::to_string(c.alpha),
                  c.alpha);
    }
  }
}

ContextVector ContextVector::make(const Frame& frame, std::span<const std::pair<std::string, double>> contexts) {
  std::vector<Context> out;
  out.reserve(contexts.size());
  for (const auto& [expr, alpha] : contexts) out.push_back({frame.parse_subset(expr), alpha});
  return ContextVector(frame, std::move(out));
}

ContextVector ContextVector::make(const Frame& frame,
                                  std::initializer_list<std::pair<std::string, double>> contexts) {
  return make(frame, std::span<const std::pair<std::string, double>>(contexts.begin(), contexts.size()));
}

ContextVector ContextVector::singletons(const Frame& frame, std::span<const double> alphas) {
  if (alphas.size() != static_cast<std::size_t>(frame.size())) {
    throw Error(ErrorKind::NotSingletonCover, "expected one discount rate per label (" +
                                                  std::to_string(frame.size()) + "), got " +
                                                  std::to_string(alphas.size()));
  }
  std::vector<Context> out;
  for (int i = 0; i < frame.size(); ++i) out.push_back({frame.singleton(i), alphas[static_cast<std::size_t>(i)]});
  return ContextVector(frame, std::move(out));
}

std::vector<double> ContextVector::alphas() const {
  std::vector<double> out;
  out.reserve(contexts_.size());
  for (const auto& c : contexts_) out.push_back(c.alpha);
  return out;
}

bool ContextVector::is_pairwise_disjoint() const {
  SubsetMask covered;
  for (const auto& c : contexts_) {
    if (covered.intersects(c.set)) return false;
    covered = covered | c.set;
  }
  return true;
}

bool ContextVector::is_partition() const {
  SubsetMask covered;
  for (const auto& c : contexts_) covered = covered | c.set;
  return is_pairwise_disjoint() && covered == frame_.full_set();
}

}  // namespace credal

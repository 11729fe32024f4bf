#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "credal/frame.hpp"

namespace credal {

struct Context {
  SubsetMask set;
  double alpha = 0.0;

  double beta() const { return 1.0 - alpha; }
  friend bool operator==(const Context&, const Context&) = default;
};

/// Discount rates attached to non-empty, pairwise distinct contexts of a
/// frame. The contexts need not partition the frame.
class ContextVector {
 public:
  /// Errors: EmptyContext, DuplicateContext, AlphaOutOfRange, UnknownLabel.
  ContextVector(Frame frame, std::vector<Context> contexts);

  /// Contexts given as subset expressions, e.g. {{"h,r", 0.4}}.
  static ContextVector make(const Frame& frame, std::span<const std::pair<std::string, double>> contexts);
  static ContextVector make(const Frame& frame, std::initializer_list<std::pair<std::string, double>> contexts);

  /// One context per label, in frame order.
  static ContextVector singletons(const Frame& frame, std::span<const double> alphas);

  const Frame& frame() const { return frame_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  std::size_t size() const { return contexts_.size(); }
  auto begin() const { return contexts_.begin(); }
  auto end() const { return contexts_.end(); }

  std::vector<double> alphas() const;

  /// True when the contexts are pairwise disjoint and cover the frame.
  bool is_partition() const;
  /// True when the contexts are pairwise disjoint as sets of labels.
  bool is_pairwise_disjoint() const;

  friend bool operator==(const ContextVector&, const ContextVector&) = default;

 private:
  Frame frame_;
  std::vector<Context> contexts_;
};

}  // namespace credal

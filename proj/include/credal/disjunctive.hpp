#pragma once

#include <vector>

#include "credal/context.hpp"
#include "credal/mass_function.hpp"

namespace credal {

inline constexpr int kMaxDecompositionFrameSize = 20;

/// Canonical disjunctive decomposition of a strictly subnormal BBA: one
/// weight v(A) > 0 per non-empty subset A, such that combining every
/// component {empty: v(A), A: 1 - v(A)} disjunctively restores the BBA.
class DisjunctiveWeights {
 public:
  /// `dense` is indexed by bitmask; entry 0 is ignored. Weights must be
  /// finite and strictly positive (NotAMassFunction otherwise).
  DisjunctiveWeights(Frame frame, std::vector<double> dense);

  /// All weights equal to one (decomposition of {empty: 1}).
  static DisjunctiveWeights neutral(const Frame& frame);

  const Frame& frame() const { return frame_; }
  double weight(SubsetMask a) const { return weights_[a.bits]; }
  const std::vector<double>& dense() const { return weights_; }

 private:
  Frame frame_;
  std::vector<double> weights_;
};

/// v(A) = prod_{B subset of A} b(B)^{(-1)^{|A|-|B|+1}}, evaluated as a signed
/// Moebius transform of log-implicability.
/// Errors: ZeroImplicability, FrameTooLarge (more than 20 labels).
DisjunctiveWeights disjunctive_decompose(const MassFunction& m);

/// Disjunctive combination of all weight components. Errors: NotAMassFunction.
MassFunction recompose_weights(const DisjunctiveWeights& w);

/// Generalised contextual discounting: v(A) scaled by 1 - alpha_A for every
/// context A, then recomposed. Requires the decomposition preconditions.
MassFunction generalized_contextual_discount(const MassFunction& m, const ContextVector& ctx);

}  // namespace credal

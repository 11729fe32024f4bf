#include "credal/disjunctive.hpp"

#include <cmath>
#include <limits>

#include "credal/error.hpp"
#include "credal/lattice.hpp"

namespace credal {

namespace {

// b(C) = prod over non-empty A not contained in C of v(A), built in log space.
// Zero weights are tracked separately so that alpha = 1 contexts stay exact.
SignedMassVector recompose_dense(const Frame& frame, const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  std::vector<double> log_w(n, 0.0);
  std::vector<double> zeros(n, 0.0);
  double log_total = 0.0;
  double zero_total = 0.0;
  for (std::size_t a = 1; a < n; ++a) {
    if (weights[a] == 0.0) {
      zeros[a] = 1.0;
      zero_total += 1.0;
    } else {
      log_w[a] = std::log(weights[a]);
      log_total += log_w[a];
    }
  }
  lattice::subset_zeta(log_w);
  lattice::subset_zeta(zeros);
  std::vector<double> b(n);
  for (std::size_t c = 0; c < n; ++c) {
    b[c] = zero_total - zeros[c] > 0.5 ? 0.0 : std::exp(log_total - log_w[c]);
  }
  lattice::subset_mobius(b);
  return SignedMassVector::from_values(frame, std::move(b));
}

}  // namespace

DisjunctiveWeights::DisjunctiveWeights(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), weights_(std::move(dense)) {
  if (weights_.size() != frame_.subset_count()) {
    throw Error(ErrorKind::NotAMassFunction, "weight vector needs one entry per subset");
  }
  weights_[0] = 1.0;
  for (std::size_t a = 1; a < weights_.size(); ++a) {
    if (!std::isfinite(weights_[a]) || weights_[a] <= 0.0) {
      throw Error(ErrorKind::NotAMassFunction,
                  "weight of " + frame_.format(SubsetMask(static_cast<std::uint32_t>(a))) +
                      " must be finite and positive",
                  weights_[a]);
    }
  }
}

DisjunctiveWeights DisjunctiveWeights::neutral(const Frame& frame) {
  return DisjunctiveWeights(frame, std::vector<double>(frame.subset_count(), 1.0));
}

DisjunctiveWeights disjunctive_decompose(const MassFunction& m) {
  require_dense_capacity(m.frame(), kMaxDecompositionFrameSize);
  std::vector<double> b = m.dense();
  lattice::subset_zeta(b);
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (!(b[a] > 0.0)) {
      throw Error(ErrorKind::ZeroImplicability,
                  "implicability of " + m.frame().format(SubsetMask(static_cast<std::uint32_t>(a))) +
                      " is zero; the decomposition needs a strictly subnormal BBA");
    }
    b[a] = std::log(b[a]);
  }
  lattice::subset_mobius(b);
  for (auto& x : b) x = std::exp(-x);
  return DisjunctiveWeights(m.frame(), std::move(b));
}

MassFunction recompose_weights(const DisjunctiveWeights& w) {
  return recompose_dense(w.frame(), w.dense()).to_mass_function();
}

MassFunction generalized_contextual_discount(const MassFunction& m, const ContextVector& ctx) {
  require_same_frame(m.frame(), ctx.frame());
  std::vector<double> weights = disjunctive_decompose(m).dense();
  for (const auto& c : ctx) weights[c.set.bits] *= c.beta();
  return recompose_dense(m.frame(), weights).to_mass_function();
}

}  // namespace credal

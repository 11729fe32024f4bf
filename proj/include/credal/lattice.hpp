#pragma once

#include <span>

namespace credal::lattice {

// In-place transforms over the dense subset lattice of a frame. The span is
// indexed by subset bitmask and its length must be a power of two.

/// f(A) <- sum over B subset of A of f(B).
void subset_zeta(std::span<double> f);

/// Inverse of subset_zeta: f(A) <- sum over B subset of A of (-1)^{|A|-|B|} f(B).
void subset_mobius(std::span<double> f);

}  // namespace credal::lattice

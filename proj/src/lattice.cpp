#include "credal/lattice.hpp"

#include <bit>
#include <cassert>

namespace credal::lattice {

void subset_zeta(std::span<double> f) {
  assert(std::has_single_bit(f.size()));
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (a & bit) f[a] += f[a ^ bit];
    }
  }
}

void subset_mobius(std::span<double> f) {
  assert(std::has_single_bit(f.size()));
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (a & bit) f[a] -= f[a ^ bit];
    }
  }
}

}  // namespace credal::lattice

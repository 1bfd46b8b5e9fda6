#include "flowcut/cut.hpp"

#include <cmath>
#include <stdexcept>

namespace flowcut {

double achieved_epsilon(std::int64_t small_side, std::int64_t large_side) {
  const std::int64_t n = small_side + large_side;
  if (n < 1 || small_side < 0 || small_side > large_side)
    throw std::invalid_argument("achieved_epsilon requires 0 <= small <= large and n >= 1");
  return static_cast<double>(large_side - small_side) / static_cast<double>(n);
}

bool meets_imbalance(std::int64_t large_side, std::int64_t total, double epsilon) {
  // The tolerance absorbs products like 1.03 * 4720 / 2 landing just above
  // an integer.
  const double bound = std::ceil((1.0 + epsilon) * static_cast<double>(total) / 2.0 - 1e-9);
  return static_cast<double>(large_side) <= bound;
}

}  // namespace flowcut

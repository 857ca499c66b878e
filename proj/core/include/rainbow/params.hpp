#pragma once

#include <stdexcept>

namespace rainbow {

/// Structure filtration: minimum stack length and minimum arc length.
/// Every maximal stack must have at least `min_stack` arcs and every arc
/// (i, j) must satisfy j - i >= min_arc.
struct Params {
  int min_stack = 1;
  int min_arc = 1;

  friend bool operator==(const Params&, const Params&) = default;
};

inline void check_params(const Params& p) {
  if (p.min_stack < 1) throw std::invalid_argument("min_stack must be >= 1");
  if (p.min_arc < 1) throw std::invalid_argument("min_arc must be >= 1");
}

}  // namespace rainbow

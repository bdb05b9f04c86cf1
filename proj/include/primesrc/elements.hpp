#pragma once

#include <optional>
#include <vector>

#include "primesrc/ring.hpp"

namespace primesrc {

struct ElementProfile {
  Element element = 0;
  bool idempotent = false;
  /// Least n >= 1 with x^n = 0; zero has index 1. Absent if no power up to
  /// order + 1 vanishes.
  std::optional<unsigned> nilpotency_index;
  /// Zero is never counted as a zero divisor.
  bool left_zero_divisor = false;   // x*b = 0 for some b != 0
  bool right_zero_divisor = false;  // b*x = 0 for some b != 0
  bool unit = false;
  bool central = false;

  bool zero_divisor() const noexcept { return left_zero_divisor || right_zero_divisor; }
};

/// x^k for k >= 1.
Element power(const FiniteRing& r, Element x, unsigned k);

ElementProfile classify_element(const FiniteRing& r, Element x);
std::vector<ElementProfile> classify_all(const FiniteRing& r);

bool all_idempotent(const FiniteRing& r);

}  // namespace primesrc

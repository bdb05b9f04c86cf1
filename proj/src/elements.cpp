#include "primesrc/elements.hpp"

namespace primesrc {

Element power(const FiniteRing& r, Element x, unsigned k) {
  if (k == 0) throw Error("power: exponent must be at least 1");
  Element acc = x;
  for (unsigned i = 1; i < k; ++i) acc = r.mul(acc, x);
  return acc;
}

ElementProfile classify_element(const FiniteRing& r, Element x) {
  if (x >= r.order()) throw Error("classify_element: element out of range");
  const std::size_t n = r.order();
  ElementProfile p;
  p.element = x;
  p.idempotent = r.mul(x, x) == x;

  // The power sequence of x enters a cycle within `order` steps.
  Element acc = x;
  for (unsigned k = 1; k <= n + 1; ++k) {
    if (acc == r.zero()) {
      p.nilpotency_index = k;
      break;
    }
    acc = r.mul(acc, x);
  }

  if (x != r.zero()) {
    for (Element b = 1; b < n; ++b) {
      if (r.mul(x, b) == r.zero()) p.left_zero_divisor = true;
      if (r.mul(b, x) == r.zero()) p.right_zero_divisor = true;
    }
  }

  if (const auto& one = r.one()) {
    for (Element y = 0; y < n && !p.unit; ++y) {
      p.unit = r.mul(x, y) == *one && r.mul(y, x) == *one;
    }
  }

  p.central = true;
  for (Element y = 0; y < n && p.central; ++y) p.central = r.mul(x, y) == r.mul(y, x);
  return p;
}

std::vector<ElementProfile> classify_all(const FiniteRing& r) {
  std::vector<ElementProfile> out;
  out.reserve(r.order());
  for (Element x = 0; x < r.order(); ++x) out.push_back(classify_element(r, x));
  return out;
}

bool all_idempotent(const FiniteRing& r) {
  for (Element x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) != x) return false;
  }
  return true;
}

}  // namespace primesrc

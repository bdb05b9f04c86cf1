#pragma once

#include <string>
#include <vector>

#include "primesrc/expr.hpp"
#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"
#include "primesrc/theorems.hpp"

namespace testing_helpers {

/// Subset from labels, e.g. labels(r, {"0", "4"}).
inline primesrc::Subset labels(const primesrc::FiniteRing& r,
                               const std::vector<std::string>& names) {
  auto s = primesrc::Subset::empty(r);
  for (const auto& n : names) s.insert(r.find_label(n).value());
  return s;
}

/// The rings of the default battery, built.
inline std::vector<primesrc::FiniteRing> battery_rings() {
  std::vector<primesrc::FiniteRing> out;
  for (const auto& src : primesrc::default_battery().rings) {
    out.push_back(primesrc::ring_from_text(std::get<std::string>(src)));
  }
  return out;
}

}  // namespace testing_helpers

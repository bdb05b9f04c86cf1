#pragma once

// Annihilator-style sets attached to a nonempty subset A of a ring R:
//
//   s_set(a, A)              = { b : a*x*b = 0 for every x in A }
//   primeness_source(A)      = intersection of s_set(a, A) over all a in R
//                            = { x : r*y*x = 0 for every r in R, y in A }
//   semiprimeness_source(A)  = { b : b*x*b = 0 for every x in A }
//
// primeness_source and primeness_source_direct compute the same set by two
// deliberately separate loops; tests hold them against each other.

#include <optional>
#include <string_view>
#include <utility>

#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"

namespace primesrc {

enum class SourceKind { s_set, primeness, semiprimeness };

std::string_view to_string(SourceKind kind);

struct SourceResult {
  SourceKind kind = SourceKind::primeness;
  std::optional<Element> parameter_a;  // only for SourceKind::s_set
  Subset subset_a;
  Subset members;
};

Subset s_set(const FiniteRing& r, Element a, const Subset& subset_a);
Subset primeness_source(const FiniteRing& r, const Subset& subset_a);
Subset primeness_source_direct(const FiniteRing& r, const Subset& subset_a);
Subset semiprimeness_source(const FiniteRing& r, const Subset& subset_a);

/// Dispatches on `kind`; `a` is required for SourceKind::s_set.
SourceResult compute_source(const FiniteRing& r, SourceKind kind, const Subset& subset_a,
                            std::optional<Element> a = std::nullopt);

struct PrimeCheck {
  bool holds = false;
  /// First nonzero (a, b) in scan order with aRb = 0.
  std::optional<std::pair<Element, Element>> witness;
};

struct SemiprimeCheck {
  bool holds = false;
  /// First nonzero a in scan order with aRa = 0.
  std::optional<Element> witness;
};

PrimeCheck is_prime_ring(const FiniteRing& r);
SemiprimeCheck is_semiprime_ring(const FiniteRing& r);

}  // namespace primesrc

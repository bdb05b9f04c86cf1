#pragma once

// Catalog of every ring whose additive group is cyclic, up to a given
// order. On Z_n each such ring is SZ(n, e) for some e in [0, n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primesrc/ring.hpp"
#include "primesrc/serialize.hpp"

namespace primesrc {

struct CyclicRing {
  std::uint64_t n;
  std::uint64_t e;
  FiniteRing ring;
};

struct CatalogEntry {
  std::string descriptor;
  std::size_t order = 0;
  std::uint64_t e = 0;
  bool has_identity = false;
  bool commutative = false;
  bool is_prime = false;
  bool is_semiprime = false;
  std::vector<std::string> p_source;
  std::vector<std::string> semi_source;
  std::size_t prime_ideal_count = 0;
  std::vector<std::string> radical;
};

/// SZ(n, e) for n = 1..max_order, e = 0..n-1, in that order.
std::vector<CyclicRing> enumerate_cyclic_rings(std::size_t max_order, const Limits& limits = {});

/// Isomorphism a -> b, if both have cyclic additive groups and one exists.
/// Tries every generator of b as the image of a fixed generator of a.
std::optional<std::vector<Element>> find_cyclic_isomorphism(const FiniteRing& a,
                                                            const FiniteRing& b);

struct DedupResult {
  std::vector<CyclicRing> rings;
  std::vector<std::string> notes;
};

/// Keeps the first ring of each isomorphism class (input order, so the
/// smallest e for enumerate_cyclic_rings output). Rings above
/// limits.iso_dedup_max_order are kept untouched and noted.
DedupResult dedup_isomorphic(std::vector<CyclicRing> rings, const Limits& limits = {});

CatalogEntry make_catalog_entry(const CyclicRing& r, const Limits& limits = {});
Json catalog_entry_to_json(const CatalogEntry& e);

/// Writes one JSON object per line. Returns the number of entries.
std::size_t build_catalog(std::size_t max_order, const std::string& out_path, bool dedup,
                          const Limits& limits = {});

}  // namespace primesrc

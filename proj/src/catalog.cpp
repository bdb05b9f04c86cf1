#include "primesrc/catalog.hpp"

#include <fstream>

#include "primesrc/ideals.hpp"
#include "primesrc/primeness.hpp"

namespace primesrc {

namespace {

std::size_t additive_order(const FiniteRing& r, Element x) {
  std::size_t k = 1;
  for (Element acc = x; acc != r.zero(); acc = r.add(acc, x)) ++k;
  return k;
}

std::optional<Element> additive_generator(const FiniteRing& r) {
  for (Element x = 0; x < r.order(); ++x) {
    if (additive_order(r, x) == r.order()) return x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CyclicRing> enumerate_cyclic_rings(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.max_order) {
    throw CapExceeded("enumerate_cyclic_rings", max_order, limits.max_order);
  }
  std::vector<CyclicRing> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (std::uint64_t e = 0; e < n; ++e) out.push_back({n, e, make_scaled_zn(n, e, limits)});
  }
  return out;
}

std::optional<std::vector<Element>> find_cyclic_isomorphism(const FiniteRing& a,
                                                            const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto g = additive_generator(a);
  if (!g) return std::nullopt;
  const std::size_t n = a.order();
  for (Element h = 0; h < n; ++h) {
    if (additive_order(b, h) != n) continue;
    // k*g -> k*h is an additive isomorphism; check it respects products.
    std::vector<Element> map(n, 0);
    Element x = a.zero(), y = b.zero();
    for (std::size_t k = 0; k < n; ++k) {
      map[x] = y;
      x = a.add(x, *g);
      y = b.add(y, h);
    }
    bool ok = true;
    for (Element u = 0; u < n && ok; ++u) {
      for (Element v = 0; v < n && ok; ++v) ok = map[a.mul(u, v)] == b.mul(map[u], map[v]);
    }
    if (ok) return map;
  }
  return std::nullopt;
}

DedupResult dedup_isomorphic(std::vector<CyclicRing> rings, const Limits& limits) {
  DedupResult out;
  for (auto& candidate : rings) {
    if (candidate.ring.order() > limits.iso_dedup_max_order) {
      out.notes.push_back(candidate.ring.descriptor() + ": order " +
                          std::to_string(candidate.ring.order()) +
                          " above the dedup bound, kept without isomorphism check");
      out.rings.push_back(std::move(candidate));
      continue;
    }
    bool duplicate = false;
    for (const auto& kept : out.rings) {
      if (kept.ring.order() > limits.iso_dedup_max_order) continue;
      if (find_cyclic_isomorphism(candidate.ring, kept.ring)) {
        out.notes.push_back(candidate.ring.descriptor() + " isomorphic to " +
                            kept.ring.descriptor());
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.rings.push_back(std::move(candidate));
  }
  return out;
}

CatalogEntry make_catalog_entry(const CyclicRing& c, const Limits& limits) {
  const FiniteRing& r = c.ring;
  const Subset whole = Subset::whole(r);
  CatalogEntry e;
  e.descriptor = r.descriptor();
  e.order = r.order();
  e.e = c.e;
  e.has_identity = r.one().has_value();
  e.commutative = is_commutative(r);
  e.is_prime = is_prime_ring(r).holds;
  e.is_semiprime = is_semiprime_ring(r).holds;
  e.p_source = member_labels(r, primeness_source(r, whole));
  e.semi_source = member_labels(r, semiprimeness_source(r, whole));
  e.prime_ideal_count = enumerate_prime_ideals(r, limits).size();
  e.radical = member_labels(r, prime_radical(r, limits));
  return e;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j;
  j["descriptor"] = e.descriptor;
  j["order"] = e.order;
  j["e"] = e.e;
  j["has_identity"] = e.has_identity;
  j["commutative"] = e.commutative;
  j["is_prime"] = e.is_prime;
  j["is_semiprime"] = e.is_semiprime;
  j["p_source"] = e.p_source;
  j["semi_source"] = e.semi_source;
  j["prime_ideal_count"] = e.prime_ideal_count;
  j["radical"] = e.radical;
  return j;
}

std::size_t build_catalog(std::size_t max_order, const std::string& out_path, bool dedup,
                          const Limits& limits) {
  auto rings = enumerate_cyclic_rings(max_order, limits);
  if (dedup) rings = dedup_isomorphic(std::move(rings), limits).rings;

  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + out_path + " for writing");
  for (const auto& r : rings) out << catalog_entry_to_json(make_catalog_entry(r, limits)).dump() << '\n';
  out.flush();
  if (!out) throw Error("write to " + out_path + " failed");
  return rings.size();
}

}  // namespace primesrc

#include "primesrc/primeness.hpp"

namespace primesrc {

namespace {

void require_subset_a(const FiniteRing& r, const Subset& subset_a, const char* what) {
  if (!subset_a.belongs_to(r)) {
    throw Error(std::string(what) + ": subset belongs to a different ring");
  }
  if (subset_a.is_empty()) throw Error(std::string(what) + ": A must be nonempty");
}

// a*R*b == {0}
bool annihilates_through_ring(const FiniteRing& r, Element a, Element b) {
  for (Element x = 0; x < r.order(); ++x) {
    if (r.mul(r.mul(a, x), b) != r.zero()) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::s_set:
      return "S_a";
    case SourceKind::primeness:
      return "P";
    case SourceKind::semiprimeness:
      return "S_semi";
  }
  return "?";
}

Subset s_set(const FiniteRing& r, Element a, const Subset& subset_a) {
  require_subset_a(r, subset_a, "s_set");
  if (a >= r.order()) throw Error("s_set: element a out of range");
  std::vector<Element> left;  // a*x for x in A
  for (Element x : subset_a.members()) left.push_back(r.mul(a, x));
  Subset out = Subset::empty(r);
  for (Element b = 0; b < r.order(); ++b) {
    bool kills = true;
    for (auto it = left.begin(); kills && it != left.end(); ++it) {
      kills = r.mul(*it, b) == r.zero();
    }
    if (kills) out.insert(b);
  }
  return out;
}

Subset primeness_source(const FiniteRing& r, const Subset& subset_a) {
  require_subset_a(r, subset_a, "primeness_source");
  Subset out = Subset::whole(r);
  for (Element a = 0; a < r.order(); ++a) out = out.intersect(s_set(r, a, subset_a));
  return out;
}

Subset primeness_source_direct(const FiniteRing& r, const Subset& subset_a) {
  require_subset_a(r, subset_a, "primeness_source_direct");
  const auto a_members = subset_a.members();
  Subset out = Subset::empty(r);
  for (Element x = 0; x < r.order(); ++x) {
    bool in_source = true;
    for (auto it = a_members.begin(); in_source && it != a_members.end(); ++it) {
      for (Element t = 0; t < r.order() && in_source; ++t) {
        in_source = r.mul(r.mul(t, *it), x) == r.zero();
      }
    }
    if (in_source) out.insert(x);
  }
  return out;
}

Subset semiprimeness_source(const FiniteRing& r, const Subset& subset_a) {
  require_subset_a(r, subset_a, "semiprimeness_source");
  const auto a_members = subset_a.members();
  Subset out = Subset::empty(r);
  for (Element b = 0; b < r.order(); ++b) {
    bool kills = true;
    for (auto it = a_members.begin(); kills && it != a_members.end(); ++it) {
      kills = r.mul(r.mul(b, *it), b) == r.zero();
    }
    if (kills) out.insert(b);
  }
  return out;
}

SourceResult compute_source(const FiniteRing& r, SourceKind kind, const Subset& subset_a,
                            std::optional<Element> a) {
  switch (kind) {
    case SourceKind::s_set:
      if (!a) throw Error("the S_a set needs a parameter element a");
      return {kind, a, subset_a, s_set(r, *a, subset_a)};
    case SourceKind::primeness:
      return {kind, std::nullopt, subset_a, primeness_source(r, subset_a)};
    case SourceKind::semiprimeness:
      return {kind, std::nullopt, subset_a, semiprimeness_source(r, subset_a)};
  }
  throw Error("unknown source kind");
}

PrimeCheck is_prime_ring(const FiniteRing& r) {
  for (Element a = 1; a < r.order(); ++a) {
    for (Element b = 1; b < r.order(); ++b) {
      if (annihilates_through_ring(r, a, b)) return {false, std::make_pair(a, b)};
    }
  }
  return {true, std::nullopt};
}

SemiprimeCheck is_semiprime_ring(const FiniteRing& r) {
  for (Element a = 1; a < r.order(); ++a) {
    if (annihilates_through_ring(r, a, a)) return {false, a};
  }
  return {true, std::nullopt};
}

}  // namespace primesrc

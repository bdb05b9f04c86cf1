#pragma once

// Exhaustive verifiers for the structural results about primeness sources,
// and a battery runner that applies them across rings, subsets and maps.
//
// Each verifier returns one Entry. An entry whose hypotheses do not hold is
// reported as skipped, never as passed. A failed entry (hypotheses hold,
// conclusion does not) means the implementation is wrong somewhere.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primesrc/hom.hpp"
#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"

namespace primesrc {

enum class TheoremId {
  product,
  square_zero,
  prime_implies_trivial,
  monotonicity,
  subring_containment,
  semiprimeness_containment,
  s_set_ideal_props,
  p_ideal,
  prime_ideal_containment,
  element_corollaries,
  hom_pushforward,
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::product,
    TheoremId::square_zero,
    TheoremId::prime_implies_trivial,
    TheoremId::monotonicity,
    TheoremId::subring_containment,
    TheoremId::semiprimeness_containment,
    TheoremId::s_set_ideal_props,
    TheoremId::p_ideal,
    TheoremId::prime_ideal_containment,
    TheoremId::element_corollaries,
    TheoremId::hom_pushforward,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

enum class Status { pass, fail, skip };
std::string_view to_string(Status s);

struct Entry {
  TheoremId theorem;
  std::string context;
  bool hypotheses_satisfied = true;
  bool conclusion_holds = true;
  std::vector<std::string> witnesses;
  std::string notes;

  Status status() const noexcept {
    if (!hypotheses_satisfied) return Status::skip;
    return conclusion_holds ? Status::pass : Status::fail;
  }
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t total() const noexcept { return pass + fail + skip; }
};

struct VerificationReport {
  std::string ring;
  std::vector<Entry> entries;
  /// Set when the ring (or map) could not be built; no entries then.
  std::optional<std::string> error;

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

Entry verify_product_theorem(const FiniteRing& r, const FiniteRing& s, const Subset& a,
                             const Subset& b, const Limits& limits = {});
Entry verify_square_zero(const FiniteRing& r);
Entry verify_prime_implies_trivial(const FiniteRing& r);
Entry verify_monotonicity(const FiniteRing& r, const Subset& a, const Subset& b);
Entry verify_subring_containment(const FiniteRing& r, const Subset& a);
Entry verify_semiprimeness_containment(const FiniteRing& r, const Subset& a);
Entry verify_s_set_ideal_props(const FiniteRing& r, Element a, const Subset& i);
/// verify_s_set_ideal_props for every a in R, merged into one entry; the
/// first failing a (if any) is reported.
Entry verify_s_set_ideal_props_all(const FiniteRing& r, const Subset& i);
Entry verify_p_ideal(const FiniteRing& r, const Subset& i);
Entry verify_prime_ideal_containment(const FiniteRing& r, const Limits& limits = {});
Entry verify_element_corollaries(const FiniteRing& r);
Entry verify_hom_pushforward(const RingHom& h);

// ---------------------------------------------------------------------------
// Battery

struct SubsetPolicy {
  bool whole = true;
  bool principal_ideals = true;
  bool singletons = true;
  bool generated_subrings = true;
  std::size_t max_subsets = 64;
};

/// Whole ring, principal ideals, singletons, then subrings generated by
/// single elements; duplicates dropped, capped at policy.max_subsets.
std::vector<Subset> select_subsets(const FiniteRing& r, const SubsetPolicy& policy);

struct CustomRingSpec {
  std::string name = "custom";
  std::size_t order = 0;
  std::vector<std::vector<Element>> add;
  std::vector<std::vector<Element>> mul;
  std::vector<std::string> labels;
  std::optional<Element> one;
};

/// Either a ring expression or raw tables.
using RingSource = std::variant<std::string, CustomRingSpec>;

/// Map constructions understood by the battery:
///   identity   ring
///   inclusion  ring, subset        induced subring on `subset` -> ring
///   quotient   ring, subset        ring -> ring / subset
///   reduction  n, m                Z(n) -> Z(m)
///   projection ring, other, factor ring x other -> factor
struct HomSpec {
  std::string kind;
  std::string ring;
  std::string subset;
  std::string other;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  int factor = 0;
};

struct ProductSpec {
  std::string left;
  std::string right;
};

struct BatteryConfig {
  std::vector<RingSource> rings;
  SubsetPolicy subset_policy;
  std::vector<HomSpec> homs;
  std::vector<ProductSpec> products;
  /// Per ring: identity map and quotient maps onto R/I.
  bool auto_homs = true;
  std::size_t max_quotients_per_ring = 16;
  /// Per ring: product theorem on R x R when |R|^2 is within the bound.
  bool auto_products = true;
  std::size_t product_order_bound = 256;
  std::size_t product_subsets = 4;
  /// Empty means every theorem.
  std::set<TheoremId> theorems;
  Limits limits;
};

BatteryConfig default_battery();

RingHom build_hom(const HomSpec& spec, const Limits& limits = {});
std::string describe(const HomSpec& spec);

/// All checks for one ring with the configured subset policy.
VerificationReport verify_ring(const FiniteRing& r, const BatteryConfig& config);

std::vector<VerificationReport> run_battery(const BatteryConfig& config);

}  // namespace primesrc

#pragma once

// Subring and ideal predicates, ideal generation and enumeration.
//
// Every predicate that takes a candidate set rejects the empty set; the
// quantities studied here are only defined for nonempty subsets.

#include <vector>

#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"

namespace primesrc {

bool is_additive_subgroup(const FiniteRing& r, const Subset& s);
bool is_subring(const FiniteRing& r, const Subset& s);
bool is_right_ideal(const FiniteRing& r, const Subset& s);
bool is_left_ideal(const FiniteRing& r, const Subset& s);
bool is_ideal(const FiniteRing& r, const Subset& s);

/// Smallest two-sided ideal containing `gens`. Works without an identity:
/// closes under addition and under left and right multiplication by every
/// ring element. Empty `gens` yields {0}.
Subset ideal_generated_by(const FiniteRing& r, const Subset& gens);

/// Smallest subring containing `gens` (closure under + and *).
Subset subring_generated_by(const FiniteRing& r, const Subset& gens);

/// All two-sided ideals, sorted by size then members. Built from the
/// principal ideals closed under pairwise sums.
std::vector<Subset> enumerate_ideals(const FiniteRing& r, const Limits& limits = {});

/// Proper ideal P such that aRb subset of P forces a in P or b in P.
/// Throws if `p` is not an ideal.
bool is_prime_ideal(const FiniteRing& r, const Subset& p);

std::vector<Subset> enumerate_prime_ideals(const FiniteRing& r, const Limits& limits = {});

/// Intersection of all prime ideals; the whole ring if there are none.
Subset prime_radical(const FiniteRing& r, const Limits& limits = {});

}  // namespace primesrc

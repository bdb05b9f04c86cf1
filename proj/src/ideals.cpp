#include "primesrc/ideals.hpp"

#include <deque>
#include <set>

namespace primesrc {

namespace {

void require_candidate(const FiniteRing& r, const Subset& s, const char* what) {
  if (!s.belongs_to(r)) throw Error(std::string(what) + ": subset belongs to a different ring");
  if (s.is_empty()) throw Error(std::string(what) + ": subset must be nonempty");
}

void require_cap(const FiniteRing& r, const Limits& limits, const char* what) {
  if (r.order() > limits.max_order) throw CapExceeded(what, r.order(), limits.max_order);
}

bool closed_under_subtraction(const FiniteRing& r, const std::vector<Element>& m,
                              const Subset& s) {
  for (Element x : m) {
    for (Element y : m) {
      if (!s.contains(r.sub(x, y))) return false;
    }
  }
  return true;
}

// Sum of two additive subgroups: {i + j}.
Subset subgroup_sum(const FiniteRing& r, const Subset& a, const Subset& b) {
  Subset out = Subset::empty(r);
  const auto bm = b.members();
  for (Element i : a.members()) {
    for (Element j : bm) out.insert(r.add(i, j));
  }
  return out;
}

}  // namespace

bool is_additive_subgroup(const FiniteRing& r, const Subset& s) {
  require_candidate(r, s, "is_additive_subgroup");
  return closed_under_subtraction(r, s.members(), s);
}

bool is_subring(const FiniteRing& r, const Subset& s) {
  require_candidate(r, s, "is_subring");
  const auto m = s.members();
  if (!closed_under_subtraction(r, m, s)) return false;
  for (Element x : m) {
    for (Element y : m) {
      if (!s.contains(r.mul(x, y))) return false;
    }
  }
  return true;
}

bool is_right_ideal(const FiniteRing& r, const Subset& s) {
  require_candidate(r, s, "is_right_ideal");
  const auto m = s.members();
  if (!closed_under_subtraction(r, m, s)) return false;
  for (Element x : m) {
    for (Element t = 0; t < r.order(); ++t) {
      if (!s.contains(r.mul(x, t))) return false;
    }
  }
  return true;
}

bool is_left_ideal(const FiniteRing& r, const Subset& s) {
  require_candidate(r, s, "is_left_ideal");
  const auto m = s.members();
  if (!closed_under_subtraction(r, m, s)) return false;
  for (Element x : m) {
    for (Element t = 0; t < r.order(); ++t) {
      if (!s.contains(r.mul(t, x))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteRing& r, const Subset& s) {
  return is_right_ideal(r, s) && is_left_ideal(r, s);
}

Subset ideal_generated_by(const FiniteRing& r, const Subset& gens) {
  if (!gens.belongs_to(r)) throw Error("ideal_generated_by: subset belongs to a different ring");
  // Worklist closure under x+y, t*x and x*t. Closing under one-sided
  // products also yields every t*x*u, so no identity is needed.
  Subset out = Subset::zero(r);
  std::vector<Element> members{r.zero()};
  std::deque<Element> pending;
  auto push = [&](Element x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
      pending.push_back(x);
    }
  };
  for (Element g : gens.members()) push(g);
  while (!pending.empty()) {
    const Element x = pending.front();
    pending.pop_front();
    for (Element t = 0; t < r.order(); ++t) {
      push(r.mul(t, x));
      push(r.mul(x, t));
    }
    // members may grow while iterating; index-based loop picks that up.
    for (std::size_t i = 0; i < members.size(); ++i) push(r.add(x, members[i]));
  }
  return out;
}

Subset subring_generated_by(const FiniteRing& r, const Subset& gens) {
  if (!gens.belongs_to(r)) throw Error("subring_generated_by: subset belongs to a different ring");
  Subset out = Subset::zero(r);
  std::vector<Element> members{r.zero()};
  std::deque<Element> pending;
  auto push = [&](Element x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
      pending.push_back(x);
    }
  };
  for (Element g : gens.members()) push(g);
  while (!pending.empty()) {
    const Element x = pending.front();
    pending.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      push(r.add(x, y));
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  }
  return out;
}

std::vector<Subset> enumerate_ideals(const FiniteRing& r, const Limits& limits) {
  require_cap(r, limits, "enumerate_ideals");
  std::set<Subset> found;
  std::deque<Subset> pending;
  auto push = [&](Subset s) {
    if (found.insert(s).second) pending.push_back(std::move(s));
  };
  for (Element x = 0; x < r.order(); ++x) push(ideal_generated_by(r, Subset::of(r, {x})));
  // Every ideal of a finite ring is a finite sum of principal ideals.
  while (!pending.empty()) {
    const Subset current = std::move(pending.front());
    pending.pop_front();
    const std::vector<Subset> snapshot(found.begin(), found.end());
    for (const auto& other : snapshot) push(subgroup_sum(r, current, other));
  }
  return {found.begin(), found.end()};
}

bool is_prime_ideal(const FiniteRing& r, const Subset& p) {
  if (!is_ideal(r, p)) throw Error("is_prime_ideal: subset is not a two-sided ideal");
  if (p.is_whole()) return false;
  const auto outside = p.complement().members();
  for (Element a : outside) {
    for (Element b : outside) {
      bool escapes = false;
      for (Element x = 0; x < r.order() && !escapes; ++x) {
        escapes = !p.contains(r.mul(r.mul(a, x), b));
      }
      if (!escapes) return false;
    }
  }
  return true;
}

std::vector<Subset> enumerate_prime_ideals(const FiniteRing& r, const Limits& limits) {
  std::vector<Subset> out;
  for (auto& i : enumerate_ideals(r, limits)) {
    if (is_prime_ideal(r, i)) out.push_back(std::move(i));
  }
  return out;
}

Subset prime_radical(const FiniteRing& r, const Limits& limits) {
  Subset out = Subset::whole(r);
  for (const auto& p : enumerate_prime_ideals(r, limits)) out = out.intersect(p);
  return out;
}

}  // namespace primesrc

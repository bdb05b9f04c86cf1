#include "primesrc/theorems.hpp"

#include <set>

#include "primesrc/elements.hpp"
#include "primesrc/expr.hpp"
#include "primesrc/ideals.hpp"
#include "primesrc/primeness.hpp"

namespace primesrc {

namespace {

constexpr std::array<std::string_view, kAllTheorems.size()> kTheoremNames = {
    "product",
    "square_zero",
    "prime_implies_trivial",
    "monotonicity",
    "subring_containment",
    "semiprimeness_containment",
    "s_set_ideal_props",
    "p_ideal",
    "prime_ideal_containment",
    "element_corollaries",
    "hom_pushforward",
};

std::string set_text(const FiniteRing& r, const Subset& s) { return format_subset(r, s); }

// Records the first element of `lhs` missing from `rhs` as a witness.
bool check_contained(const FiniteRing& r, const Subset& lhs, const Subset& rhs,
                     std::string_view what, Entry& e) {
  if (auto x = lhs.first_not_in(rhs)) {
    e.conclusion_holds = false;
    e.witnesses.push_back("x=" + r.label(*x) + " lies in " + std::string(what));
    return false;
  }
  return true;
}

// First failure of right (or left) ideal closure, as a witness string.
std::optional<std::string> ideal_violation(const FiniteRing& r, const Subset& s, bool right) {
  const auto m = s.members();
  for (Element x : m) {
    for (Element y : m) {
      if (!s.contains(r.sub(x, y))) {
        return "x=" + r.label(x) + ", y=" + r.label(y) + ": x-y=" + r.label(r.sub(x, y)) +
               " escapes";
      }
    }
  }
  for (Element x : m) {
    for (Element t = 0; t < r.order(); ++t) {
      const Element p = right ? r.mul(x, t) : r.mul(t, x);
      if (!s.contains(p)) {
        return "x=" + r.label(x) + ", r=" + r.label(t) + ": " + (right ? "x*r=" : "r*x=") +
               r.label(p) + " escapes";
      }
    }
  }
  return std::nullopt;
}

Subset to_parent(const FiniteRing& parent, const InducedSubring& sub, const Subset& local) {
  Subset out = Subset::empty(parent);
  for (Element x : local.members()) out.insert(sub.embedding[x]);
  return out;
}

void require_nonempty(const FiniteRing& r, const Subset& s, const char* what) {
  if (!s.belongs_to(r)) throw Error(std::string(what) + ": subset belongs to a different ring");
  if (s.is_empty()) throw Error(std::string(what) + ": subsets must be nonempty");
}

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == name) return kAllTheorems[i];
  }
  return std::nullopt;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "?";
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& e : entries) {
    switch (e.status()) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::skip:
        ++s.skip;
        break;
    }
  }
  return s;
}

Entry verify_product_theorem(const FiniteRing& r, const FiniteRing& s, const Subset& a,
                             const Subset& b, const Limits& limits) {
  require_nonempty(r, a, "verify_product_theorem");
  require_nonempty(s, b, "verify_product_theorem");
  Entry e{TheoremId::product, "A=" + set_text(r, a) + ", B=" + set_text(s, b)};

  const FiniteRing rs = make_product(r, s, limits);
  const std::size_t sn = s.order();
  Subset ab = Subset::empty(rs);
  for (Element x : a.members()) {
    for (Element y : b.members()) ab.insert(static_cast<Element>(x * sn + y));
  }
  const Subset lhs = primeness_source(rs, ab);

  const Subset pa = primeness_source(r, a);
  const Subset pb = primeness_source(s, b);
  Subset rhs = Subset::empty(rs);
  for (Element x : pa.members()) {
    for (Element y : pb.members()) rhs.insert(static_cast<Element>(x * sn + y));
  }

  check_contained(rs, lhs, rhs, "P(AxB) but not in P(A)xP(B)", e);
  check_contained(rs, rhs, lhs, "P(A)xP(B) but not in P(AxB)", e);
  e.notes = "|P(AxB)|=" + std::to_string(lhs.size()) + ", |P(A)xP(B)|=" +
            std::to_string(rhs.size()) + "; " +
            (r.same_tables(s) ? "R x R case" : "two-ring generalization R x S");
  return e;
}

Entry verify_square_zero(const FiniteRing& r) {
  Entry e{TheoremId::square_zero, "A=R"};
  const bool unital = r.one().has_value();
  const bool commutative = is_commutative(r);
  if (!unital || !commutative) {
    e.hypotheses_satisfied = false;
    e.notes = std::string("hypotheses fail:") + (unital ? "" : " no identity") +
              (commutative ? "" : " not commutative");
    return e;
  }
  Subset square_zero = Subset::empty(r);
  for (Element x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) == r.zero()) square_zero.insert(x);
  }
  const Subset p = primeness_source(r, Subset::whole(r));
  check_contained(r, p, square_zero, "P_R with x^2 != 0", e);
  e.notes = "P_R=" + set_text(r, p) + " within {x : x^2=0}=" + set_text(r, square_zero) +
            "; with an identity P_R={0} already, so the containment is immediate";
  return e;
}

Entry verify_prime_implies_trivial(const FiniteRing& r) {
  Entry e{TheoremId::prime_implies_trivial, "A=R"};
  const PrimeCheck prime = is_prime_ring(r);
  const Subset p = primeness_source(r, Subset::whole(r));
  const bool trivial = p == Subset::zero(r);
  if (!prime.holds) {
    e.hypotheses_satisfied = false;
    const auto [a, b] = *prime.witness;
    e.notes = "not a prime ring: aRb=0 for (a,b)=(" + r.label(a) + "," + r.label(b) + ")";
    if (trivial) e.notes += "; P_R={0} nonetheless, so the converse does not hold";
    return e;
  }
  if (!trivial) {
    e.conclusion_holds = false;
    e.witnesses.push_back("P_R=" + set_text(r, p));
  }
  e.notes = "prime ring, P_R=" + set_text(r, p);
  return e;
}

Entry verify_monotonicity(const FiniteRing& r, const Subset& a, const Subset& b) {
  require_nonempty(r, a, "verify_monotonicity");
  require_nonempty(r, b, "verify_monotonicity");
  Entry e{TheoremId::monotonicity, "A=" + set_text(r, a) + ", B=" + set_text(r, b)};
  if (!a.is_subset_of(b)) {
    e.hypotheses_satisfied = false;
    e.notes = "A is not a subset of B";
    return e;
  }
  const Subset pa = primeness_source(r, a);
  const Subset pb = primeness_source(r, b);
  const Subset pr = primeness_source(r, Subset::whole(r));
  check_contained(r, pb, pa, "P(B) but not in P(A)", e);
  check_contained(r, pr, pa, "P_R but not in P(A)", e);
  e.notes = "P(B)=" + set_text(r, pb) + " within P(A)=" + set_text(r, pa);
  return e;
}

Entry verify_subring_containment(const FiniteRing& r, const Subset& a) {
  require_nonempty(r, a, "verify_subring_containment");
  Entry e{TheoremId::subring_containment, "A=" + set_text(r, a)};
  if (!is_subring(r, a)) {
    e.hypotheses_satisfied = false;
    e.notes = "A is not a subring";
    return e;
  }
  const InducedSubring sub = make_induced_subring(r, a);
  const Subset p_standalone = to_parent(r, sub, primeness_source(sub.ring, Subset::whole(sub.ring)));
  const Subset lhs = a.intersect(primeness_source(r, a));
  check_contained(r, lhs, p_standalone, "A and P_R(A) but not in P_A", e);
  e.notes = "A n P_R(A)=" + set_text(r, lhs) + " within P_A=" + set_text(r, p_standalone);
  return e;
}

Entry verify_semiprimeness_containment(const FiniteRing& r, const Subset& a) {
  require_nonempty(r, a, "verify_semiprimeness_containment");
  Entry e{TheoremId::semiprimeness_containment, "A=" + set_text(r, a)};
  const Subset p = primeness_source(r, a);
  const Subset semi = semiprimeness_source(r, a);
  check_contained(r, p, semi, "P_R(A) but not in S_R(A)", e);
  e.notes = "P_R(A)=" + set_text(r, p) + " within S_R(A)=" + set_text(r, semi);
  return e;
}

Entry verify_s_set_ideal_props(const FiniteRing& r, Element a, const Subset& i) {
  require_nonempty(r, i, "verify_s_set_ideal_props");
  if (a >= r.order()) throw Error("verify_s_set_ideal_props: a out of range");
  Entry e{TheoremId::s_set_ideal_props, "a=" + r.label(a) + ", I=" + set_text(r, i)};
  const Subset s = s_set(r, a, i);
  if (auto w = ideal_violation(r, s, /*right=*/true)) {
    e.conclusion_holds = false;
    e.witnesses.push_back("right ideal: " + *w);
  }
  if (is_right_ideal(r, i)) {
    if (auto w = ideal_violation(r, s, /*right=*/false)) {
      e.conclusion_holds = false;
      e.witnesses.push_back("left ideal: " + *w);
    }
    e.notes = "S^a(I)=" + set_text(r, s) + "; I is a right ideal, so S^a(I) checked as a two-sided ideal";
  } else {
    e.notes = "S^a(I)=" + set_text(r, s) + "; I is not a right ideal, so S^a(I) checked as a right ideal only";
  }
  return e;
}

Entry verify_s_set_ideal_props_all(const FiniteRing& r, const Subset& i) {
  for (Element a = 0; a < r.order(); ++a) {
    Entry e = verify_s_set_ideal_props(r, a, i);
    if (e.status() == Status::fail) return e;
  }
  Entry e{TheoremId::s_set_ideal_props, "a in R, I=" + set_text(r, i)};
  e.notes = is_right_ideal(r, i) ? "every a: S^a(I) is a two-sided ideal"
                                 : "every a: S^a(I) is a right ideal (I is not a right ideal)";
  return e;
}

Entry verify_p_ideal(const FiniteRing& r, const Subset& i) {
  require_nonempty(r, i, "verify_p_ideal");
  Entry e{TheoremId::p_ideal, "I=" + set_text(r, i)};
  if (!is_right_ideal(r, i)) {
    e.hypotheses_satisfied = false;
    e.notes = "I is not a right ideal";
    return e;
  }
  const Subset p = primeness_source(r, i);
  for (bool right : {true, false}) {
    if (auto w = ideal_violation(r, p, right)) {
      e.conclusion_holds = false;
      e.witnesses.push_back(*w);
    }
  }
  e.notes = "P_R(I)=" + set_text(r, p);
  return e;
}

Entry verify_prime_ideal_containment(const FiniteRing& r, const Limits& limits) {
  Entry e{TheoremId::prime_ideal_containment, "A=R"};
  const Subset p = primeness_source(r, Subset::whole(r));
  const auto primes = enumerate_prime_ideals(r, limits);
  for (const auto& q : primes) {
    check_contained(r, p, q, "P_R but not in prime ideal " + set_text(r, q), e);
  }
  const Subset radical = prime_radical(r, limits);
  check_contained(r, p, radical, "P_R but not in the prime radical", e);
  e.notes = "P_R=" + set_text(r, p) + ", " + std::to_string(primes.size()) +
            " prime ideal(s), radical=" + set_text(r, radical);
  if (primes.empty()) e.notes += " (no prime ideals: containment vacuous, radical is R)";
  return e;
}

Entry verify_element_corollaries(const FiniteRing& r) {
  Entry e{TheoremId::element_corollaries, "A=R"};
  const Subset p = primeness_source(r, Subset::whole(r));
  std::size_t nonzero = 0;
  for (Element x : p.members()) {
    if (x == r.zero()) continue;
    ++nonzero;
    const ElementProfile prof = classify_element(r, x);
    const std::string who = "x=" + r.label(x) + ": ";
    if (power(r, x, 3) != r.zero()) {
      e.conclusion_holds = false;
      e.witnesses.push_back(who + "x^3 != 0");
    }
    if (prof.idempotent) {
      e.conclusion_holds = false;
      e.witnesses.push_back(who + "nonzero idempotent");
    }
    if (!prof.left_zero_divisor || !prof.right_zero_divisor) {
      e.conclusion_holds = false;
      e.witnesses.push_back(who + "not a two-sided zero divisor");
    }
  }
  const bool idem = all_idempotent(r);
  const bool unital = r.one().has_value();
  const bool trivial = p == Subset::zero(r);
  if (idem && !trivial) {
    e.conclusion_holds = false;
    e.witnesses.push_back("every element idempotent but P_R=" + set_text(r, p));
  }
  if (unital && !trivial) {
    e.conclusion_holds = false;
    e.witnesses.push_back("identity present but P_R=" + set_text(r, p));
  }
  e.notes = "P_R=" + set_text(r, p) + ", " + std::to_string(nonzero) + " nonzero member(s)" +
            (idem ? ", all elements idempotent" : "") + (unital ? ", unital" : "");
  return e;
}

Entry verify_hom_pushforward(const RingHom& h) {
  Entry e{TheoremId::hom_pushforward, h.name};
  if (!h.validated) {
    e.hypotheses_satisfied = false;
    e.notes = "map has not been validated as a homomorphism";
    return e;
  }
  const ImageRing image = image_subring(h);
  const Subset fp = push_forward(h, primeness_source(h.source, Subset::whole(h.source)));
  const Subset p_image =
      to_parent(h.target, image.ring,
                primeness_source(image.ring.ring, Subset::whole(image.ring.ring)));
  check_contained(h.target, fp, p_image, "f(P_R) but not in P_f(R)", e);
  if (h.injective) check_contained(h.target, p_image, fp, "P_f(R) but not in f(P_R)", e);
  e.notes = "f(P_R)=" + set_text(h.target, fp) + ", P_f(R)=" + set_text(h.target, p_image) +
            (h.injective ? "; injective, equality checked" : "; not injective, containment only");
  return e;
}

// ---------------------------------------------------------------------------

std::vector<Subset> select_subsets(const FiniteRing& r, const SubsetPolicy& policy) {
  std::vector<Subset> out;
  std::set<Subset> seen;
  auto add = [&](Subset s) {
    if (out.size() < policy.max_subsets && !s.is_empty() && seen.insert(s).second) {
      out.push_back(std::move(s));
    }
  };
  if (policy.whole) add(Subset::whole(r));
  if (policy.principal_ideals) {
    for (Element x = 0; x < r.order(); ++x) add(ideal_generated_by(r, Subset::of(r, {x})));
  }
  if (policy.singletons) {
    for (Element x = 0; x < r.order(); ++x) add(Subset::of(r, {x}));
  }
  if (policy.generated_subrings) {
    for (Element x = 0; x < r.order(); ++x) add(subring_generated_by(r, Subset::of(r, {x})));
  }
  return out;
}

BatteryConfig default_battery() {
  BatteryConfig c;
  for (int n = 1; n <= 12; ++n) c.rings.emplace_back("Z(" + std::to_string(n) + ")");
  for (int n = 1; n <= 8; ++n) c.rings.emplace_back("N(" + std::to_string(n) + ")");
  for (int e = 0; e < 4; ++e) c.rings.emplace_back("SZ(4," + std::to_string(e) + ")");
  for (const char* s : {"2Z(16)", "2Z(4)", "M(2,Z(2))", "Z(2) x Z(3)", "N(2) x N(2)"}) {
    c.rings.emplace_back(s);
  }
  c.homs.push_back(HomSpec{.kind = "inclusion", .ring = "Z(4)", .subset = "{0,2}"});
  c.homs.push_back(HomSpec{.kind = "reduction", .n = 4, .m = 2});
  c.homs.push_back(HomSpec{.kind = "identity", .ring = "2Z(16)"});
  c.homs.push_back(HomSpec{.kind = "inclusion", .ring = "2Z(16)", .subset = "{0,4,8,12}"});
  c.homs.push_back(HomSpec{.kind = "quotient", .ring = "SZ(4,2)", .subset = "{0,2}"});
  c.homs.push_back(HomSpec{.kind = "projection", .ring = "2Z(16)", .other = "N(2)", .factor = 0});
  c.homs.push_back(HomSpec{.kind = "projection", .ring = "Z(2)", .other = "Z(3)", .factor = 1});
  c.products.push_back({"2Z(16)", "2Z(16)"});
  c.products.push_back({"2Z(16)", "N(2)"});
  c.products.push_back({"Z(6)", "SZ(4,2)"});
  return c;
}

std::string describe(const HomSpec& spec) {
  if (spec.kind == "identity") return "identity on " + spec.ring;
  if (spec.kind == "inclusion") return "inclusion " + spec.subset + " -> " + spec.ring;
  if (spec.kind == "quotient") return "quotient " + spec.ring + " -> " + spec.ring + "/" + spec.subset;
  if (spec.kind == "reduction") {
    return "reduction Z(" + std::to_string(spec.n) + ") -> Z(" + std::to_string(spec.m) + ")";
  }
  if (spec.kind == "projection") {
    return "projection " + spec.ring + " x " + spec.other + " -> factor " +
           std::to_string(spec.factor);
  }
  return spec.kind;
}

RingHom build_hom(const HomSpec& spec, const Limits& limits) {
  if (spec.kind == "identity") return identity_hom(ring_from_text(spec.ring, limits));
  if (spec.kind == "inclusion") {
    const auto r = ring_from_text(spec.ring, limits);
    return inclusion_hom(r, parse_subset(spec.subset, r));
  }
  if (spec.kind == "quotient") {
    const auto r = ring_from_text(spec.ring, limits);
    return make_quotient(r, parse_subset(spec.subset, r)).map;
  }
  if (spec.kind == "reduction") return reduction_hom(spec.n, spec.m, limits);
  if (spec.kind == "projection") {
    return projection_hom(ring_from_text(spec.ring, limits), ring_from_text(spec.other, limits),
                          spec.factor, limits);
  }
  throw Error("unknown homomorphism kind '" + spec.kind + "'");
}

VerificationReport verify_ring(const FiniteRing& r, const BatteryConfig& config) {
  VerificationReport report{r.descriptor()};
  auto wants = [&](TheoremId id) { return config.theorems.empty() || config.theorems.count(id); };
  auto& out = report.entries;
  try {
    if (wants(TheoremId::square_zero)) out.push_back(verify_square_zero(r));
    if (wants(TheoremId::prime_implies_trivial)) out.push_back(verify_prime_implies_trivial(r));
    if (wants(TheoremId::prime_ideal_containment)) {
      out.push_back(verify_prime_ideal_containment(r, config.limits));
    }
    if (wants(TheoremId::element_corollaries)) out.push_back(verify_element_corollaries(r));

    const auto subsets = select_subsets(r, config.subset_policy);
    for (const auto& a : subsets) {
      if (wants(TheoremId::semiprimeness_containment)) {
        out.push_back(verify_semiprimeness_containment(r, a));
      }
      if (wants(TheoremId::subring_containment)) out.push_back(verify_subring_containment(r, a));
      if (wants(TheoremId::s_set_ideal_props)) out.push_back(verify_s_set_ideal_props_all(r, a));
      if (wants(TheoremId::p_ideal)) out.push_back(verify_p_ideal(r, a));
    }
    if (wants(TheoremId::monotonicity)) {
      for (const auto& a : subsets) {
        for (const auto& b : subsets) {
          if (a.is_subset_of(b)) out.push_back(verify_monotonicity(r, a, b));
        }
      }
    }
    if (wants(TheoremId::product) && config.auto_products &&
        r.order() * r.order() <= config.product_order_bound) {
      const std::size_t k = std::min(config.product_subsets, subsets.size());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          out.push_back(verify_product_theorem(r, r, subsets[i], subsets[j], config.limits));
        }
      }
    }
    if (wants(TheoremId::hom_pushforward) && config.auto_homs) {
      out.push_back(verify_hom_pushforward(identity_hom(r)));
      std::size_t quotients = 0;
      for (const auto& ideal : enumerate_ideals(r, config.limits)) {
        if (quotients++ >= config.max_quotients_per_ring) break;
        out.push_back(verify_hom_pushforward(make_quotient(r, ideal).map));
      }
    }
  } catch (const Error& err) {
    report.error = err.what();
  }
  return report;
}

std::vector<VerificationReport> run_battery(const BatteryConfig& config) {
  std::vector<VerificationReport> reports;
  auto wants = [&](TheoremId id) { return config.theorems.empty() || config.theorems.count(id); };

  for (const auto& source : config.rings) {
    std::string name = std::holds_alternative<std::string>(source)
                           ? std::get<std::string>(source)
                           : std::get<CustomRingSpec>(source).name;
    try {
      FiniteRing r = std::visit(
          [&](const auto& s) -> FiniteRing {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, std::string>) {
              return ring_from_text(s, config.limits);
            } else {
              return make_custom(s.order, s.add, s.mul, s.labels, s.one, config.limits);
            }
          },
          source);
      reports.push_back(verify_ring(r, config));
    } catch (const Error& err) {
      reports.push_back(VerificationReport{std::move(name), {}, std::string(err.what())});
    }
  }

  if (wants(TheoremId::product)) {
    for (const auto& spec : config.products) {
      VerificationReport report{"product " + spec.left + " x " + spec.right};
      try {
        const auto r = ring_from_text(spec.left, config.limits);
        const auto s = ring_from_text(spec.right, config.limits);
        const auto ra = select_subsets(r, config.subset_policy);
        const auto sb = select_subsets(s, config.subset_policy);
        for (std::size_t i = 0; i < std::min(config.product_subsets, ra.size()); ++i) {
          for (std::size_t j = 0; j < std::min(config.product_subsets, sb.size()); ++j) {
            report.entries.push_back(verify_product_theorem(r, s, ra[i], sb[j], config.limits));
          }
        }
      } catch (const Error& err) {
        report.error = err.what();
      }
      reports.push_back(std::move(report));
    }
  }

  if (wants(TheoremId::hom_pushforward)) {
    for (const auto& spec : config.homs) {
      VerificationReport report{describe(spec)};
      try {
        report.entries.push_back(verify_hom_pushforward(build_hom(spec, config.limits)));
      } catch (const Error& err) {
        report.error = err.what();
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace primesrc

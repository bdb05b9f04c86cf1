#pragma once

// Ring homomorphisms between finite rings, and the constructions that
// produce them: induced subrings with their inclusion, quotients with
// their projection, identity, reductions Z(n) -> Z(m), and product
// projections.

#include <string>
#include <vector>

#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"

namespace primesrc {

/// A map failed the homomorphism check. `kind` is "zero", "additive" or
/// "multiplicative"; the witness is the first offending pair (or the single
/// element 0 for "zero").
class HomViolation : public Error {
 public:
  HomViolation(std::string kind, std::vector<Element> witness);
  const std::string& kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::vector<Element> witness_;
};

struct RingHom {
  FiniteRing source;
  FiniteRing target;
  std::vector<Element> map;
  std::string name;
  bool validated = false;
  bool injective = false;

  Element operator()(Element x) const { return map.at(x); }
};

/// Exhaustive pair check of f(x+y) = f(x)+f(y) and f(xy) = f(x)f(y), plus
/// f(0) = 0. Returns the hom with `validated` and `injective` set.
RingHom validate_hom(RingHom h);

RingHom make_hom(const FiniteRing& source, const FiniteRing& target,
                 std::vector<Element> map, std::string name = {});

RingHom identity_hom(const FiniteRing& r);

/// A subring of `parent` rebuilt as a ring in its own right. Element i of
/// `ring` is parent element embedding[i]; members keep their labels.
struct InducedSubring {
  FiniteRing ring;
  Subset members;
  std::vector<Element> embedding;
};

InducedSubring make_induced_subring(const FiniteRing& parent, const Subset& s);

/// Inclusion of the induced subring on `s` into `parent`.
RingHom inclusion_hom(const FiniteRing& parent, const Subset& s);

struct Quotient {
  FiniteRing ring;
  RingHom map;
};

/// R / I for a two-sided ideal I. Each coset is represented by its least
/// element index and labelled with that element's label.
Quotient make_quotient(const FiniteRing& r, const Subset& ideal);

/// x -> x mod m from Z(n) onto Z(m); m must divide n.
RingHom reduction_hom(std::uint64_t n, std::uint64_t m, const Limits& limits = {});

/// Projection of make_product(r, s) onto its first (index 0) or second
/// (index 1) factor.
RingHom projection_hom(const FiniteRing& r, const FiniteRing& s, int factor,
                       const Limits& limits = {});

struct ImageRing {
  Subset image;  // f(R) inside the target
  InducedSubring ring;
};

/// f(R) as a subset of the target and as a standalone ring.
ImageRing image_subring(const RingHom& h);

/// Elementwise image of a subset of the source.
Subset push_forward(const RingHom& h, const Subset& s);

}  // namespace primesrc

#include "primesrc/hom.hpp"

#include <sstream>

#include "primesrc/ideals.hpp"

namespace primesrc {

namespace {

std::string describe(const std::string& kind, const std::vector<Element>& w) {
  std::ostringstream out;
  out << "not a ring homomorphism: " << kind << " check fails at (";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ')';
  return out.str();
}

void require_validated(const RingHom& h, const char* what) {
  if (!h.validated) throw Error(std::string(what) + ": homomorphism has not been validated");
}

}  // namespace

HomViolation::HomViolation(std::string kind, std::vector<Element> witness)
    : Error(describe(kind, witness)), kind_(std::move(kind)), witness_(std::move(witness)) {}

RingHom validate_hom(RingHom h) {
  const std::size_t n = h.source.order();
  if (h.map.size() != n) {
    throw Error("homomorphism map has " + std::to_string(h.map.size()) +
                " entries, source ring has " + std::to_string(n));
  }
  for (Element y : h.map) {
    if (y >= h.target.order()) throw Error("homomorphism map entry out of target range");
  }
  if (h.map[h.source.zero()] != h.target.zero()) throw HomViolation("zero", {0});
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (h.map[h.source.add(x, y)] != h.target.add(h.map[x], h.map[y])) {
        throw HomViolation("additive", {x, y});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (h.map[h.source.mul(x, y)] != h.target.mul(h.map[x], h.map[y])) {
        throw HomViolation("multiplicative", {x, y});
      }
    }
  }
  std::vector<bool> hit(h.target.order(), false);
  h.injective = true;
  for (Element y : h.map) {
    if (hit[y]) h.injective = false;
    hit[y] = true;
  }
  h.validated = true;
  return h;
}

RingHom make_hom(const FiniteRing& source, const FiniteRing& target, std::vector<Element> map,
                 std::string name) {
  if (name.empty()) name = source.descriptor() + " -> " + target.descriptor();
  return validate_hom(RingHom{source, target, std::move(map), std::move(name)});
}

RingHom identity_hom(const FiniteRing& r) {
  std::vector<Element> map(r.order());
  for (Element x = 0; x < r.order(); ++x) map[x] = x;
  return make_hom(r, r, std::move(map), "identity on " + r.descriptor());
}

InducedSubring make_induced_subring(const FiniteRing& parent, const Subset& s) {
  if (!is_subring(parent, s)) throw Error("make_induced_subring: subset is not a subring");
  const auto embedding = s.members();  // zero (index 0) comes first
  const std::size_t m = embedding.size();
  std::vector<Element> local(parent.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[embedding[i]] = static_cast<Element>(i);

  FiniteRing::Tables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      t.add[i * m + j] = local[parent.add(embedding[i], embedding[j])];
      t.mul[i * m + j] = local[parent.mul(embedding[i], embedding[j])];
    }
  }
  for (Element x : embedding) t.labels.push_back(parent.label(x));
  auto ring = FiniteRing::from_tables_unchecked(
      std::move(t), parent.descriptor() + " restricted to " + format_subset(parent, s));
  return {std::move(ring), s, embedding};
}

RingHom inclusion_hom(const FiniteRing& parent, const Subset& s) {
  auto sub = make_induced_subring(parent, s);
  auto name = "inclusion " + format_subset(parent, s) + " -> " + parent.descriptor();
  return make_hom(sub.ring, parent, sub.embedding, std::move(name));
}

Quotient make_quotient(const FiniteRing& r, const Subset& ideal) {
  if (!is_ideal(r, ideal)) throw Error("make_quotient: subset is not a two-sided ideal");
  const std::size_t n = r.order();
  const auto ideal_members = ideal.members();

  // Coset of x is x + I; its representative is its least index.
  std::vector<Element> rep(n, 0);
  std::vector<bool> assigned(n, false);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    reps.push_back(x);
    for (Element i : ideal_members) {
      const Element y = r.add(x, i);
      rep[y] = x;
      assigned[y] = true;
    }
  }
  const std::size_t m = reps.size();
  std::vector<Element> class_of(n, 0);
  std::vector<Element> rep_index(n, 0);
  for (std::size_t c = 0; c < m; ++c) rep_index[reps[c]] = static_cast<Element>(c);
  for (Element x = 0; x < n; ++x) class_of[x] = rep_index[rep[x]];

  FiniteRing::Tables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = class_of[r.add(reps[a], reps[b])];
      t.mul[a * m + b] = class_of[r.mul(reps[a], reps[b])];
    }
  }
  for (Element x : reps) t.labels.push_back(r.label(x));
  auto ring = FiniteRing::from_tables_unchecked(
      std::move(t), r.descriptor() + "/" + format_subset(r, ideal));
  auto name = "quotient " + r.descriptor() + " -> " + ring.descriptor();
  auto map = make_hom(r, ring, std::move(class_of), std::move(name));
  return {std::move(ring), std::move(map)};
}

RingHom reduction_hom(std::uint64_t n, std::uint64_t m, const Limits& limits) {
  if (m < 1 || n % m != 0) throw Error("reduction Z(n) -> Z(m) needs m to divide n");
  auto source = make_zn(n, limits);
  auto target = make_zn(m, limits);
  std::vector<Element> map(n);
  for (std::uint64_t x = 0; x < n; ++x) map[x] = static_cast<Element>(x % m);
  return make_hom(source, target, std::move(map),
                  "reduction Z(" + std::to_string(n) + ") -> Z(" + std::to_string(m) + ")");
}

RingHom projection_hom(const FiniteRing& r, const FiniteRing& s, int factor,
                       const Limits& limits) {
  if (factor != 0 && factor != 1) throw Error("projection factor must be 0 or 1");
  auto prod = make_product(r, s, limits);
  std::vector<Element> map(prod.order());
  for (Element x = 0; x < prod.order(); ++x) {
    map[x] = factor == 0 ? static_cast<Element>(x / s.order())
                         : static_cast<Element>(x % s.order());
  }
  const auto& target = factor == 0 ? r : s;
  auto name = "projection " + prod.descriptor() + " -> " + target.descriptor();
  return make_hom(prod, target, std::move(map), std::move(name));
}

ImageRing image_subring(const RingHom& h) {
  require_validated(h, "image_subring");
  Subset image = Subset::empty(h.target);
  for (Element y : h.map) image.insert(y);
  auto ring = make_induced_subring(h.target, image);
  return {std::move(image), std::move(ring)};
}

Subset push_forward(const RingHom& h, const Subset& s) {
  require_validated(h, "push_forward");
  if (!s.belongs_to(h.source)) throw Error("push_forward: subset is not in the source ring");
  Subset out = Subset::empty(h.target);
  for (Element x : s.members()) out.insert(h.map[x]);
  return out;
}

}  // namespace primesrc

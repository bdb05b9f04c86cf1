#pragma once

// Finite rings stored as dense Cayley tables.
//
// Elements are the indices 0..order-1 and the additive identity is always
// index 0. Rings need not be unital. A FiniteRing is immutable once built
// and copies share the underlying tables, so it can be passed by value and
// read from several threads at once.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primesrc {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kDefaultIsoDedupMaxOrder = 8;

/// Size limits applied by every constructor and enumeration.
struct Limits {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t iso_dedup_max_order = kDefaultIsoDedupMaxOrder;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string_view what, std::uint64_t requested, std::size_t cap);
  std::uint64_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::size_t cap_;
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// A ring axiom failed; `witness` holds the first offending tuple in
/// lexicographic scan order (one, two or three elements).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Element> witness);
  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<Element> witness_;
};

class FiniteRing {
 public:
  /// Raw tables in row-major order: add[x * order + y] = x + y.
  struct Tables {
    std::size_t order = 0;
    std::vector<Element> add;
    std::vector<Element> mul;
    std::vector<std::string> labels;
  };

  /// Wraps tables without checking the ring axioms. Shape and range are
  /// still checked. Constructors below use this; make_custom validates.
  static FiniteRing from_tables_unchecked(Tables tables, std::string descriptor);

  std::size_t order() const noexcept { return data_->order; }
  Element zero() const noexcept { return 0; }
  const std::optional<Element>& one() const noexcept { return one_; }

  Element add(Element x, Element y) const noexcept {
    return data_->add[x * data_->order + y];
  }
  Element mul(Element x, Element y) const noexcept {
    return data_->mul[x * data_->order + y];
  }
  Element neg(Element x) const noexcept { return neg_[x]; }
  Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

  const std::string& label(Element x) const { return data_->labels.at(x); }
  const std::vector<std::string>& labels() const noexcept {
    return data_->labels;
  }
  std::optional<Element> find_label(std::string_view label) const;

  const std::string& descriptor() const noexcept { return descriptor_; }

  /// Content hash of (order, add, mul). Two rings with identical tables
  /// share a fingerprint; subsets use it to refuse cross-ring mixing.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  const Tables& tables() const noexcept { return *data_; }

  bool same_tables(const FiniteRing& other) const noexcept;

 private:
  FiniteRing() = default;

  std::shared_ptr<const Tables> data_;
  std::vector<Element> neg_;
  std::optional<Element> one_;
  std::string descriptor_;
  std::uint64_t fingerprint_ = 0;
};

/// Exhaustively checks every ring axiom over all pairs and triples.
/// Throws AxiomViolation naming the first failing axiom and its witness.
void check_axioms(const FiniteRing::Tables& tables);
inline void check_axioms(const FiniteRing& r) { check_axioms(r.tables()); }

FiniteRing make_zn(std::uint64_t n, const Limits& limits = {});
FiniteRing make_zero_mult_ring(std::uint64_t n, const Limits& limits = {});

/// Additive group Z_n with x * y = x * y * e (mod n). Every ring whose
/// additive group is cyclic of order n arises this way.
FiniteRing make_scaled_zn(std::uint64_t n, std::uint64_t e,
                          const Limits& limits = {});

/// The subring kZ_n = {0, k, 2k, ...} of Z_n; labels are the residues.
FiniteRing make_subring_kzn(std::uint64_t k, std::uint64_t n,
                            const Limits& limits = {});

/// Full d x d matrix ring over `base`. Entries are base-|base| digits of
/// the element index, row-major, most significant first.
FiniteRing make_matrix_ring(std::uint64_t d, const FiniteRing& base,
                            const Limits& limits = {});

/// Direct product; (x, y) has index x * s.order() + y.
FiniteRing make_product(const FiniteRing& r, const FiniteRing& s,
                        const Limits& limits = {});

/// Builds a ring from raw tables after full axiom validation. If `one` is
/// given it must be a two-sided identity.
FiniteRing make_custom(std::size_t order, std::vector<std::vector<Element>> add,
                       std::vector<std::vector<Element>> mul,
                       std::vector<std::string> labels,
                       std::optional<Element> one = std::nullopt,
                       const Limits& limits = {});

std::optional<Element> find_identity(const FiniteRing& r);
bool is_commutative(const FiniteRing& r);

}  // namespace primesrc

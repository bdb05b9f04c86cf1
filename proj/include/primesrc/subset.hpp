#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "primesrc/ring.hpp"

namespace primesrc {

/// A set of element indices of one particular ring.
///
/// Membership is a bitset. Subsets remember the fingerprint of the ring
/// they were built for; combining subsets of different rings throws, and
/// equality across rings is always false.
class Subset {
 public:
  static Subset empty(const FiniteRing& r);
  static Subset whole(const FiniteRing& r);
  static Subset zero(const FiniteRing& r);
  static Subset of(const FiniteRing& r, std::initializer_list<Element> elements);
  static Subset of(const FiniteRing& r, const std::vector<Element>& elements);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t ring_fingerprint() const noexcept { return ring_; }
  bool belongs_to(const FiniteRing& r) const noexcept {
    return ring_ == r.fingerprint() && universe_ == r.order();
  }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x / 64] >> (x % 64)) & 1u);
  }
  void insert(Element x);
  void erase(Element x);

  std::size_t size() const noexcept;
  bool is_empty() const noexcept { return size() == 0; }
  bool is_whole() const noexcept { return size() == universe_; }

  /// Members in increasing index order.
  std::vector<Element> members() const;

  bool is_subset_of(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  Subset complement() const;

  /// First element (by index) that is in this set but not in `other`.
  std::optional<Element> first_not_in(const Subset& other) const;

  bool operator==(const Subset& other) const noexcept {
    return ring_ == other.ring_ && universe_ == other.universe_ && words_ == other.words_;
  }

  /// Size first, then lexicographic on the sorted member lists.
  std::strong_ordering operator<=>(const Subset& other) const;

 private:
  Subset(const FiniteRing& r);
  void require_same_ring(const Subset& other) const;

  std::uint64_t ring_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Labels of the members, in index order.
std::vector<std::string> member_labels(const FiniteRing& r, const Subset& s);

/// "{0,4,8,12}" using ring labels.
std::string format_subset(const FiniteRing& r, const Subset& s);

}  // namespace primesrc

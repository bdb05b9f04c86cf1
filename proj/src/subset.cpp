#include "primesrc/subset.hpp"

#include <algorithm>
#include <bit>

namespace primesrc {

Subset::Subset(const FiniteRing& r)
    : ring_(r.fingerprint()), universe_(r.order()), words_((r.order() + 63) / 64, 0) {}

Subset Subset::empty(const FiniteRing& r) { return Subset(r); }

Subset Subset::whole(const FiniteRing& r) {
  Subset s(r);
  for (Element x = 0; x < r.order(); ++x) s.insert(x);
  return s;
}

Subset Subset::zero(const FiniteRing& r) { return of(r, {r.zero()}); }

Subset Subset::of(const FiniteRing& r, std::initializer_list<Element> elements) {
  Subset s(r);
  for (Element x : elements) s.insert(x);
  return s;
}

Subset Subset::of(const FiniteRing& r, const std::vector<Element>& elements) {
  Subset s(r);
  for (Element x : elements) s.insert(x);
  return s;
}

void Subset::insert(Element x) {
  if (x >= universe_) {
    throw Error("element index " + std::to_string(x) + " out of range for ring of order " +
                std::to_string(universe_));
  }
  words_[x / 64] |= std::uint64_t{1} << (x % 64);
}

void Subset::erase(Element x) {
  if (x < universe_) words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
}

std::size_t Subset::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Element> Subset::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

void Subset::require_same_ring(const Subset& other) const {
  if (ring_ != other.ring_ || universe_ != other.universe_) {
    throw Error("subsets belong to different rings");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ring(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Subset Subset::intersect(const Subset& other) const {
  require_same_ring(other);
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

Subset Subset::unite(const Subset& other) const {
  require_same_ring(other);
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

Subset Subset::complement() const {
  Subset out = *this;
  for (auto& w : out.words_) w = ~w;
  if (universe_ % 64) out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  return out;
}

std::optional<Element> Subset::first_not_in(const Subset& other) const {
  require_same_ring(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto diff = words_[i] & ~other.words_[i];
    if (diff) return static_cast<Element>(i * 64 + std::countr_zero(diff));
  }
  return std::nullopt;
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (auto c = ring_ <=> other.ring_; c != 0) return c;
  if (auto c = size() <=> other.size(); c != 0) return c;
  const auto a = members(), b = other.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::string> member_labels(const FiniteRing& r, const Subset& s) {
  std::vector<std::string> out;
  for (Element x : s.members()) out.push_back(r.label(x));
  return out;
}

std::string format_subset(const FiniteRing& r, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s.members()) {
    if (!first) out += ',';
    first = false;
    out += r.label(x);
  }
  out += '}';
  return out;
}

}  // namespace primesrc

#pragma once

// Ring expression language.
//
//   expr := term ( 'x' term )*          left-associative direct product
//   term := 'Z' '(' int ')'             Z_n
//         | 'N' '(' int ')'             zero multiplication on Z_n
//         | 'SZ' '(' int ',' int ')'    Z_n with x*y = x*y*e
//         | int 'Z' '(' int ')'         kZ_n
//         | 'M' '(' int ',' expr ')'    d x d matrices
//         | '(' expr ')'
//
// Whitespace is ignored between tokens. The product operator may also be
// written as U+00D7. Error offsets are byte offsets into the input.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"

namespace primesrc {

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

namespace expr {

struct Zn {
  std::uint64_t n;
  bool operator==(const Zn&) const = default;
};
struct ZeroMult {
  std::uint64_t n;
  bool operator==(const ZeroMult&) const = default;
};
struct ScaledZn {
  std::uint64_t n;
  std::uint64_t e;
  bool operator==(const ScaledZn&) const = default;
};
struct SubringKZn {
  std::uint64_t k;
  std::uint64_t n;
  bool operator==(const SubringKZn&) const = default;
};
struct Matrix {
  std::uint64_t d;
  RingExprPtr base;
};
struct Product {
  RingExprPtr lhs;
  RingExprPtr rhs;
};

}  // namespace expr

struct RingExpr {
  std::variant<expr::Zn, expr::ZeroMult, expr::ScaledZn, expr::SubringKZn, expr::Matrix,
               expr::Product>
      node;
};

/// Structural equality.
bool operator==(const RingExpr& a, const RingExpr& b);

RingExprPtr make_expr(RingExpr e);

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string message);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

RingExprPtr parse_ring_expr(std::string_view text);

/// Canonical text form; parse_ring_expr(render(e)) is structurally equal
/// to e.
std::string render(const RingExpr& e);

FiniteRing build_ring(const RingExpr& e, const Limits& limits = {});

/// Parses and builds in one step; the ring's descriptor is the canonical
/// rendering.
FiniteRing ring_from_text(std::string_view text, const Limits& limits = {});

/// "{l1, l2, ...}" of ring labels, or "*" for the whole ring. The empty
/// set is rejected.
Subset parse_subset(std::string_view text, const FiniteRing& r);

/// Underline for an error offset, e.g. "Z(6\n   ^".
std::string caret_line(std::string_view text, std::size_t offset);

}  // namespace primesrc

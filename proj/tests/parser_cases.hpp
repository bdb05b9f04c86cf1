#pragma once

// Golden parser cases shared by the unit tests and the acceptance binary.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "primesrc/expr.hpp"

namespace parser_cases {

struct Golden {
  std::string input;
  std::string canonical;
};

struct Failure {
  std::string input;
  std::size_t offset;
  std::string message;  // substring of the error message
};

inline const std::vector<Golden>& golden() {
  static const std::vector<Golden> cases{
      {"Z(6)", "Z(6)"},
      {" Z ( 6 ) ", "Z(6)"},
      {"N(4)", "N(4)"},
      {"SZ(4,2)", "SZ(4,2)"},
      {"SZ( 12 , 0 )", "SZ(12,0)"},
      {"2Z(16)", "2Z(16)"},
      {"1Z(5)", "1Z(5)"},
      {"4 Z(16)", "4Z(16)"},
      {"M(2,Z(2))", "M(2,Z(2))"},
      {"M(1,N(3))", "M(1,N(3))"},
      {"M(2,M(1,Z(2)))", "M(2,M(1,Z(2)))"},
      {"Z(2) x Z(3)", "Z(2) x Z(3)"},
      {"Z(2)xZ(3)", "Z(2) x Z(3)"},
      {"Z(2) \xC3\x97 Z(3)", "Z(2) x Z(3)"},
      {"Z(2) x Z(3) x Z(5)", "Z(2) x Z(3) x Z(5)"},
      {"Z(2) x (Z(3) x Z(5))", "Z(2) x (Z(3) x Z(5))"},
      {"(Z(2) x Z(3)) x Z(5)", "Z(2) x Z(3) x Z(5)"},
      {"((Z(7)))", "Z(7)"},
      {"N(2) x N(2)", "N(2) x N(2)"},
      {"2Z(16) x 2Z(16)", "2Z(16) x 2Z(16)"},
      {"M(2,Z(2) x Z(2))", "M(2,Z(2) x Z(2))"},
      {"SZ(4,0) x SZ(4,3)", "SZ(4,0) x SZ(4,3)"},
      {"M(2,SZ(4,2))", "M(2,SZ(4,2))"},
      {"M(2,2Z(4))", "M(2,2Z(4))"},
      {"(N(3))x(SZ(9,3))", "N(3) x SZ(9,3)"},
      {"Z(1)", "Z(1)"},
      {"Z(18446744073709551615)", "Z(18446744073709551615)"},
      {"\tZ(3)\n", "Z(3)"},
      {"M(3, Z(2) x (N(2) x Z(3)))", "M(3,Z(2) x (N(2) x Z(3)))"},
      {"Z(4) x M(2,Z(2))", "Z(4) x M(2,Z(2))"},
  };
  return cases;
}

inline const std::vector<Failure>& failures() {
  static const std::vector<Failure> cases{
      {"Z(6", 3, "expected ')'"},
      {"", 0, "expected a ring term"},
      {"Q(3)", 0, "unknown ring constructor 'Q'"},
      {"Z(0)", 2, "expected a positive integer"},
      {"SZ(4,4)", 5, "e in SZ(n,e) must be less than n"},
      {"3Z(16)", 0, "must divide n"},
      {"Z(6) Z(2)", 5, "expected 'x' or end of input"},
      {"2N(4)", 1, "expected 'Z' after integer"},
      {"Z(99999999999999999999)", 2, "integer overflow"},
      {"Z(6) x", 6, "expected a ring term"},
      {"Z(6]", 3, "unexpected character"},
      {"M(2 Z(2))", 4, "expected ','"},
      {"Z(2) x x Z(3)", 7, "expected a ring term"},
      {"Z(-1)", 2, "unexpected character '-'"},
      {"Zx(3)", 1, "expected '('"},
      {"()", 1, "expected a ring term"},
  };
  return cases;
}

// Random well-formed AST. Products and matrices nest up to `depth`.
inline primesrc::RingExprPtr random_expr(std::mt19937_64& rng, int depth) {
  using namespace primesrc;
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const std::uint64_t kinds = depth > 0 ? 6 : 4;
  switch (pick(0, kinds - 1)) {
    case 0:
      return make_expr({expr::Zn{pick(1, 1000)}});
    case 1:
      return make_expr({expr::ZeroMult{pick(1, 1000)}});
    case 2: {
      const auto n = pick(1, 1000);
      return make_expr({expr::ScaledZn{n, pick(0, n - 1)}});
    }
    case 3: {
      const auto k = pick(1, 40), m = pick(1, 40);
      return make_expr({expr::SubringKZn{k, k * m}});
    }
    case 4:
      return make_expr({expr::Matrix{pick(1, 5), random_expr(rng, depth - 1)}});
    default:
      return make_expr({expr::Product{random_expr(rng, depth - 1), random_expr(rng, depth - 1)}});
  }
}

// Same text with every space removed; the grammar does not need them.
inline std::string squeeze(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out += c;
  }
  return out;
}

}  // namespace parser_cases

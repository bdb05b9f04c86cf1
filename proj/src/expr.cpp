#include "primesrc/expr.hpp"

#include <cctype>
#include <vector>

namespace primesrc {

namespace {

enum class Tok { integer, ident, lparen, rparen, comma, times, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
  std::uint64_t value = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::integer:
      return "integer " + t.text;
    case Tok::ident:
      return "'" + t.text + "'";
    case Tok::end:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

bool is_ident_letter(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) && c != 'x';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(s[i] - '0');
        if (v > (UINT64_MAX - digit) / 10) throw ParseError(start, "integer overflow");
        v = v * 10 + digit;
        ++i;
      }
      out.push_back({Tok::integer, start, std::string(s.substr(start, i - start)), v});
    } else if (c == 'x') {
      out.push_back({Tok::times, i, "x"});
      ++i;
    } else if (c == '\xC3' && i + 1 < s.size() && s[i + 1] == '\x97') {
      out.push_back({Tok::times, i, "\xC3\x97"});
      i += 2;
    } else if (is_ident_letter(c)) {
      const std::size_t start = i;
      while (i < s.size() && is_ident_letter(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (word != "Z" && word != "N" && word != "SZ" && word != "M") {
        throw ParseError(start, "unknown ring constructor '" + word + "'");
      }
      out.push_back({Tok::ident, start, std::move(word)});
    } else if (c == '(' || c == ')' || c == ',') {
      out.push_back({c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : Tok::comma, i,
                     std::string(1, c)});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  RingExprPtr parse() {
    auto e = expr();
    if (peek().kind != Tok::end) {
      throw ParseError(peek().offset, "expected 'x' or end of input, found " + describe(peek()));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(peek().offset,
                       std::string("expected ") + what + ", found " + describe(peek()));
    }
    return next();
  }

  const Token& positive_int() {
    const Token& t = expect(Tok::integer, "integer");
    if (t.value < 1) throw ParseError(t.offset, "expected a positive integer");
    return t;
  }

  RingExprPtr expr() {
    auto lhs = term();
    while (peek().kind == Tok::times) {
      next();
      auto rhs = term();
      lhs = make_expr({expr::Product{std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  RingExprPtr term() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      next();
      auto inner = expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind == Tok::integer) {
      const Token& k = next();
      if (peek().kind != Tok::ident || peek().text != "Z") {
        throw ParseError(peek().offset, "expected 'Z' after integer, found " + describe(peek()));
      }
      next();
      expect(Tok::lparen, "'('");
      const Token& n = positive_int();
      expect(Tok::rparen, "')'");
      if (k.value < 1) throw ParseError(k.offset, "k in kZ(n) must be positive");
      if (n.value % k.value != 0) {
        throw ParseError(k.offset, "k in kZ(n) must divide n (" + k.text + " does not divide " +
                                       n.text + ")");
      }
      return make_expr({expr::SubringKZn{k.value, n.value}});
    }
    if (t.kind != Tok::ident) {
      throw ParseError(t.offset,
                       "expected a ring term (Z, N, SZ, kZ, M or '('), found " + describe(t));
    }
    const std::string name = next().text;
    expect(Tok::lparen, "'('");
    if (name == "Z" || name == "N") {
      const Token& n = positive_int();
      expect(Tok::rparen, "')'");
      return name == "Z" ? make_expr({expr::Zn{n.value}}) : make_expr({expr::ZeroMult{n.value}});
    }
    if (name == "SZ") {
      const Token& n = positive_int();
      expect(Tok::comma, "','");
      const Token& e = expect(Tok::integer, "integer");
      expect(Tok::rparen, "')'");
      if (e.value >= n.value) throw ParseError(e.offset, "e in SZ(n,e) must be less than n");
      return make_expr({expr::ScaledZn{n.value, e.value}});
    }
    // M
    const Token& d = positive_int();
    expect(Tok::comma, "','");
    auto base = expr();
    expect(Tok::rparen, "')'");
    return make_expr({expr::Matrix{d.value, std::move(base)}});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const expr::Matrix& m) {
            const auto& o = std::get<expr::Matrix>(b.node);
            return m.d == o.d && *m.base == *o.base;
          },
          [&](const expr::Product& p) {
            const auto& o = std::get<expr::Product>(b.node);
            return *p.lhs == *o.lhs && *p.rhs == *o.rhs;
          },
          [&](const auto& leaf) {
            return leaf == std::get<std::decay_t<decltype(leaf)>>(b.node);
          }},
      a.node);
}

RingExprPtr make_expr(RingExpr e) { return std::make_shared<const RingExpr>(std::move(e)); }

ParseError::ParseError(std::size_t offset, std::string message)
    : Error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      message_(std::move(message)) {}

RingExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const RingExpr& e) {
  return std::visit(
      overloaded{
          [](const expr::Zn& z) { return "Z(" + std::to_string(z.n) + ")"; },
          [](const expr::ZeroMult& z) { return "N(" + std::to_string(z.n) + ")"; },
          [](const expr::ScaledZn& z) {
            return "SZ(" + std::to_string(z.n) + "," + std::to_string(z.e) + ")";
          },
          [](const expr::SubringKZn& z) {
            return std::to_string(z.k) + "Z(" + std::to_string(z.n) + ")";
          },
          [](const expr::Matrix& m) {
            return "M(" + std::to_string(m.d) + "," + render(*m.base) + ")";
          },
          [](const expr::Product& p) {
            const bool nested = std::holds_alternative<expr::Product>(p.rhs->node);
            const auto rhs = render(*p.rhs);
            return render(*p.lhs) + " x " + (nested ? "(" + rhs + ")" : rhs);
          }},
      e.node);
}

FiniteRing build_ring(const RingExpr& e, const Limits& limits) {
  return std::visit(
      overloaded{
          [&](const expr::Zn& z) { return make_zn(z.n, limits); },
          [&](const expr::ZeroMult& z) { return make_zero_mult_ring(z.n, limits); },
          [&](const expr::ScaledZn& z) { return make_scaled_zn(z.n, z.e, limits); },
          [&](const expr::SubringKZn& z) { return make_subring_kzn(z.k, z.n, limits); },
          [&](const expr::Matrix& m) {
            return make_matrix_ring(m.d, build_ring(*m.base, limits), limits);
          },
          [&](const expr::Product& p) {
            return make_product(build_ring(*p.lhs, limits), build_ring(*p.rhs, limits), limits);
          }},
      e.node);
}

FiniteRing ring_from_text(std::string_view text, const Limits& limits) {
  return build_ring(*parse_ring_expr(text), limits);
}

Subset parse_subset(std::string_view text, const FiniteRing& r) {
  const std::string_view body = trim(text);
  const std::size_t lead = body.empty() ? text.size() : static_cast<std::size_t>(body.data() - text.data());
  if (body == "*") return Subset::whole(r);
  if (body.empty() || body.front() != '{') throw ParseError(lead, "expected '{' or '*'");
  if (body.back() != '}') throw ParseError(lead + body.size(), "expected '}'");

  Subset out = Subset::empty(r);
  const std::size_t inner_begin = lead + 1;
  const std::size_t inner_end = lead + body.size() - 1;
  if (trim(text.substr(inner_begin, inner_end - inner_begin)).empty()) {
    throw ParseError(inner_begin, "A must be nonempty");
  }

  // Split at commas that are not nested inside a label such as (0,1).
  std::size_t start = inner_begin;
  int depth = 0;
  auto take = [&](std::size_t end) {
    std::string label;
    for (std::size_t i = start; i < end; ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) label += text[i];
    }
    std::size_t at = start;
    while (at < end && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    if (label.empty()) throw ParseError(at, "empty element label");
    auto x = r.find_label(label);
    if (!x) throw ParseError(at, "unknown element label '" + label + "' in " + r.descriptor());
    out.insert(*x);
  };
  for (std::size_t i = inner_begin; i < inner_end; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      if (--depth < 0) throw ParseError(i, "unbalanced bracket");
    } else if (c == ',' && depth == 0) {
      take(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError(inner_end, "unbalanced bracket");
  take(inner_end);
  return out;
}

std::string caret_line(std::string_view text, std::size_t offset) {
  return std::string(text) + "\n" + std::string(offset, ' ') + "^";
}

}  // namespace primesrc

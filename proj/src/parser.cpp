#include "abelred/parser.hpp"

#include <cctype>
#include <vector>

namespace abelred {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Semi, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, k = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') throw ParseError("decimal literals are not supported", l, k);
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*':
        if (i + 1 < s.size() && s[i + 1] == '*') {
          kind = Tok::Caret;
          len = 2;
        } else {
          kind = Tok::Star;
        }
        break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equals; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
    out.push_back({kind, std::string(s.substr(i, len)), l, k});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what, peek());
    next();
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool plus = next().kind == Tok::Plus;
      BiPoly rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

 private:
  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      if (at(Tok::Star)) {
        next();
        acc = acc * unary();
      } else if (at(Tok::Slash) && depth_ > 0) {
        fail("division is only allowed at top level between M and N", peek());
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (at(Tok::Minus)) {
      next();
      return -unary();
    }
    if (at(Tok::Plus)) {
      next();
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (!at(Tok::Caret)) return base;
    next();
    const Token& t = peek();
    unsigned long e;
    if (at(Tok::Number)) {
      e = std::stoul(next().text);
    } else if (at(Tok::LParen) && peek(1).kind == Tok::Number && peek(2).kind == Tok::RParen) {
      next();
      e = std::stoul(next().text);
      next();
    } else {
      fail("exponent must be a nonnegative integer literal", t);
    }
    if (at(Tok::Caret)) fail("chained exponents are not supported", peek());
    return base.pow(static_cast<unsigned>(e));
  }

  BiPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Int num(t.text);
        if (at(Tok::Slash) && peek(1).kind == Tok::Number) {
          next();
          const Token& d = next();
          Int den(d.text);
          if (den == 0) fail("zero denominator in rational literal", d);
          Rat r(num, den);
          r.canonicalize();
          return BiPoly(r);
        }
        return BiPoly(Rat(num));
      }
      case Tok::Ident:
        next();
        if (t.text == "x") return BiPoly::x();
        if (t.text == "y") return BiPoly::y();
        fail("unknown identifier '" + t.text + "'", t);
      case Tok::LParen: {
        next();
        ++depth_;
        BiPoly inner = expr();
        --depth_;
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected token '" + t.text + "'", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) {
  Parser p(lex(text));
  BiPoly out = p.expr();
  if (p.at(Tok::Slash)) p.fail("division is not allowed in a polynomial", p.peek());
  if (!p.at(Tok::End)) p.fail("unexpected token '" + p.peek().text + "'", p.peek());
  return out;
}

InputODE parse_ode(std::string_view text) {
  Parser p(lex(text));
  BiPoly M, N;
  if (p.at(Tok::Ident) && p.peek().text == "RATIO" && p.peek(1).kind == Tok::LParen) {
    p.next();
    p.next();
    M = p.expr();
    p.expect(Tok::Comma, "','");
    N = p.expr();
    p.expect(Tok::RParen, "')'");
  } else if (p.at(Tok::Ident) && p.peek(1).kind == Tok::Equals) {
    bool have_m = false, have_n = false;
    while (p.at(Tok::Ident) && p.peek(1).kind == Tok::Equals) {
      const Token name = p.next();
      p.next();
      if (name.text == "M" && !have_m) {
        M = p.expr();
        have_m = true;
      } else if (name.text == "N" && !have_n) {
        N = p.expr();
        have_n = true;
      } else {
        p.fail("expected a single binding of M and of N", name);
      }
      if (p.at(Tok::Semi)) p.next();
    }
    if (!have_m || !have_n) p.fail("both M and N must be given", p.peek());
  } else {
    M = p.expr();
    if (!p.at(Tok::Slash)) p.fail("expected '/' separating numerator and denominator", p.peek());
    p.next();
    N = p.expr();
  }
  if (p.at(Tok::Slash)) p.fail("nested division is not allowed", p.peek());
  if (!p.at(Tok::End)) p.fail("unexpected token '" + p.peek().text + "'", p.peek());
  if (N.is_zero()) throw ParseError("denominator is zero", 1, 1);
  return make_input_ode(M, N);
}

ReducedODE parse_reduced(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '=' in the equation", 1, 1);
  auto column = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
  std::string_view lhs = text.substr(0, eq);
  while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
  if (lhs.size() < 2 || lhs.substr(lhs.size() - 2) != "y'")
    throw ParseError("left-hand side must end with y'", 1, column(lhs.size()));
  lhs.remove_suffix(2);
  while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
  ReducedODE r;
  r.t = BiPoly(1);
  if (!lhs.empty()) {
    if (lhs.back() != '*') throw ParseError("expected '*' before y'", 1, column(lhs.size()));
    lhs.remove_suffix(1);
    r.t = parse_poly(lhs);
    if (r.t.is_zero() || r.t.depends_on(Var::Y)) throw ParseError("coefficient of y' must be a nonzero polynomial in x", 1, 1);
  }
  BiPoly rhs;
  try {
    rhs = parse_poly(text.substr(eq + 1));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), e.line(),
                     e.line() == 1 ? e.column() + static_cast<int>(eq) + 1 : e.column());
  }
  for (const auto& c : rhs.y_coeffs()) r.coeffs.push_back(BiPoly::from_upoly(c, Var::X));
  if (r.coeffs.size() < 3) throw ParseError("right-hand side must have degree at least 2 in y", 1, column(eq + 1));
  return r;
}

}  // namespace abelred

#ifndef HICALC_PARSER_HPP
#define HICALC_PARSER_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hicalc/polynomial.hpp"

namespace hicalc {

/*
 * Polynomial grammar
 *
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := factor ('*' factor)*
 *   factor  := primary ['^' integer]
 *   primary := integer ['/' integer] | variable | '(' expr ')'
 *
 * Variables match [a-zA-Z_][a-zA-Z0-9_]*.  '^' binds tightest, '*' must be
 * explicit, '/' occurs only inside rational literals.  Whitespace is
 * insignificant.  Errors carry line and column.
 */

namespace detail {

enum class TokKind { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int col;
};

inline std::string token_name(TokKind k) {
  switch (k) {
    case TokKind::Integer: return "integer";
    case TokKind::Ident: return "variable";
    case TokKind::Plus: return "'+'";
    case TokKind::Minus: return "'-'";
    case TokKind::Star: return "'*'";
    case TokKind::Caret: return "'^'";
    case TokKind::Slash: return "'/'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::End: return "end of input";
  }
  return "?";
}

[[noreturn]] inline void syntax_error(const Token& at, const std::string& what) {
  std::ostringstream os;
  os << "syntax error at line " << at.line << ", column " << at.col << ": " << what;
  throw input_error(os.str());
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](TokKind k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int l = line, c = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(TokKind::Integer, text.substr(i, j - i), l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(TokKind::Ident, text.substr(i, j - i), l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    TokKind k;
    switch (ch) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '^': k = TokKind::Caret; break;
      case '/': k = TokKind::Slash; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      default: {
        Token bad{TokKind::End, std::string(1, ch), l, c};
        syntax_error(bad, std::string("unexpected character '") + ch + "'");
      }
    }
    push(k, std::string(1, ch), l, c);
    ++col;
    ++i;
  }
  out.push_back(Token{TokKind::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> vars)
      : toks_(std::move(toks)), vars_(std::move(vars)) {}

  Polynomial run() {
    Polynomial p = expr();
    if (peek().kind != TokKind::End)
      syntax_error(peek(), "unexpected " + token_name(peek().kind));
    return p;
  }

 private:
  static constexpr int kMaxExponent = 64;

  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool accept(TokKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(TokKind k, const char* ctx) {
    if (peek().kind != k)
      syntax_error(peek(), std::string("expected ") + token_name(k) + " " + ctx +
                               ", found " + token_name(peek().kind));
    return advance();
  }

  Polynomial expr() {
    bool neg = false;
    if (peek().kind == TokKind::Minus) {
      neg = true;
      advance();
    } else {
      accept(TokKind::Plus);
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool minus = advance().kind == TokKind::Minus;
      Polynomial q = term();
      if (minus)
        p -= q;
      else
        p += q;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept(TokKind::Star)) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = primary();
    if (accept(TokKind::Caret)) {
      const Token& e = expect(TokKind::Integer, "after '^'");
      long long v = 0;
      for (char ch : e.text) {
        v = v * 10 + (ch - '0');
        if (v > kMaxExponent) syntax_error(e, "exponent larger than supported bound 64");
      }
      p = p.pow(static_cast<int>(v));
    }
    return p;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Integer: {
        advance();
        Int num(t.text);
        if (accept(TokKind::Slash)) {
          const Token& d = expect(TokKind::Integer, "after '/'");
          Int den(d.text);
          if (den == 0) syntax_error(d, "zero denominator");
          return Polynomial::constant(vars_, Rational(num, den));
        }
        return Polynomial::constant(vars_, Rational(num));
      }
      case TokKind::Ident: {
        advance();
        for (std::size_t i = 0; i < vars_.size(); ++i)
          if (vars_[i] == t.text)
            return Polynomial::variable(vars_, static_cast<int>(i));
        std::ostringstream os;
        os << "unknown variable '" << t.text << "' at line " << t.line << ", column "
           << t.col;
        throw input_error(os.str());
      }
      case TokKind::LParen: {
        advance();
        Polynomial p = expr();
        expect(TokKind::RParen, "to close '('");
        return p;
      }
      default:
        syntax_error(t, "expected integer, variable or '(', found " + token_name(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Variables are taken in order of first appearance in the text.
inline Polynomial parse_polynomial(const std::string& text) {
  auto toks = detail::lex(text);
  std::vector<std::string> vars;
  for (const auto& t : toks)
    if (t.kind == detail::TokKind::Ident &&
        std::find(vars.begin(), vars.end(), t.text) == vars.end())
      vars.push_back(t.text);
  return detail::Parser(std::move(toks), std::move(vars)).run();
}

// Declared-variable form: idents outside the list are rejected, and the
// result lives in exactly this ring even if some variables go unused.
inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& declared) {
  return detail::Parser(detail::lex(text), declared).run();
}

// Canonical text: terms in descending degree-lexicographic order with
// explicit '*'.  parse(to_string(p), p.variables()) == p.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
    const long long da = exponent_sum(a->first), db = exponent_sum(b->first);
    if (da != db) return da > db;
    return a->first > b->first;  // higher exponent on earlier variables first
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ts) {
    const auto& [e, c] = *t;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.variables()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << rational_to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << rational_to_string(mag) << "*" << mono;
  }
  return os.str();
}

}  // namespace hicalc

#endif

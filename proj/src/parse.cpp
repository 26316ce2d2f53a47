#include "polymap/parse.hpp"

#include <cctype>
#include <map>

namespace polymap {

namespace {

// ===========================================================================
// Lexer
// ===========================================================================

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok type = Tok::End;
  std::string text;  // identifier spelling or digit string
  char punct = 0;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      t.type = Tok::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_'))
        ++j;
      t.type = Tok::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::string("+-*/^()=,;").find(c) != std::string::npos) {
      t.type = Tok::Punct;
      t.punct = c;
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ===========================================================================
// Parser
// ===========================================================================

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  // Full file: header, optional modulus, assignments.
  ParsedPolys parse_file() {
    parse_header();
    ParsedPolys out;
    out.var_names = vars_;
    out.modulus = modulus_;
    while (peek().type != Tok::End) {
      auto [name, poly] = parse_assignment();
      for (const auto& existing : out.component_names)
        if (existing == name)
          throw ParseError("duplicate component '" + name + "'", prev_line_,
                           prev_col_);
      out.component_names.push_back(name);
      out.polys.push_back(std::move(poly));
      if (peek().type == Tok::Punct && peek().punct == ';')
        ++i_;  // statement separator; optional after the final assignment
      else
        break;
    }
    expect_end();
    if (out.polys.empty())
      throw ParseError("expected at least one assignment", peek().line,
                       peek().col);
    finalize_ring(out.polys);
    return out;
  }

  // Bare expression over externally supplied variables.
  MultiPoly parse_bare_expr(const std::vector<std::string>& var_names) {
    vars_ = var_names;
    for (std::size_t v = 0; v < vars_.size(); ++v) var_index_[vars_[v]] = v;
    ring_ = CoeffRing::rationals();
    MultiPoly p = parse_expr();
    expect_end();
    std::vector<MultiPoly> ps{p};
    finalize_ring(ps);
    return ps.front();
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t j = i_ + ahead;
    if (j >= toks_.size()) j = toks_.size() - 1;
    return toks_[j];
  }

  Token take() {
    Token t = peek();
    if (t.type != Tok::End) ++i_;
    prev_line_ = t.line;
    prev_col_ = t.col;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }

  void expect_punct(char c, const std::string& what) {
    const Token& t = peek();
    if (t.type != Tok::Punct || t.punct != c)
      fail("expected '" + std::string(1, c) + "' " + what, t);
    take();
  }

  void expect_end() {
    const Token& t = peek();
    if (t.type != Tok::End) {
      if (t.type == Tok::Punct && t.punct == '/')
        fail("'/' is only allowed inside a rational literal a/b", t);
      fail("unexpected trailing input", t);
    }
  }

  std::string expect_ident(const std::string& what) {
    const Token& t = peek();
    if (t.type != Tok::Ident) fail("expected " + what, t);
    return take().text;
  }

  mpz_class expect_int(const std::string& what) {
    const Token& t = peek();
    if (t.type == Tok::Punct && t.punct == '-')
      fail("negative " + what + " not allowed", t);
    if (t.type != Tok::Int) fail("expected " + what, t);
    return mpz_class(take().text, 10);
  }

  void parse_header() {
    const Token& t = peek();
    if (t.type != Tok::Ident || t.text != "vars")
      fail("input must start with a 'vars' header", t);
    take();
    while (true) {
      const Token& v = peek();
      std::string name = expect_ident("variable name");
      if (name == "vars" || name == "mod")
        fail("'" + name + "' is a reserved word", v);
      if (var_index_.count(name)) fail("duplicate variable '" + name + "'", v);
      var_index_[name] = vars_.size();
      vars_.push_back(name);
      if (peek().type == Tok::Punct && peek().punct == ',')
        take();
      else
        break;
    }
    expect_punct(';', "after the variable list");
    if (peek().type == Tok::Ident && peek().text == "mod") {
      take();
      const Token& pt = peek();
      mpz_class p = expect_int("modulus prime");
      if (!p.fits_ulong_p())
        fail("modulus prime does not fit in 64 bits", pt);
      unsigned long k = 1;
      if (peek().type == Tok::Punct && peek().punct == '^') {
        take();
        const Token& kt = peek();
        mpz_class ke = expect_int("modulus exponent");
        if (!ke.fits_ulong_p() || ke == 0 || ke > 64)
          fail("modulus exponent out of range", kt);
        k = ke.get_ui();
      }
      try {
        modulus_ = PrimePower::make(p.get_ui(), static_cast<unsigned>(k));
      } catch (const PreconditionError& e) {
        fail(e.what(), pt);
      }
      expect_punct(';', "after the modulus clause");
    }
    ring_ = modulus_ ? CoeffRing::residues(*modulus_)
                     : CoeffRing::rationals();
  }

  std::pair<std::string, MultiPoly> parse_assignment() {
    const Token& t = peek();
    std::string name = expect_ident("component name");
    if (name == "vars" || name == "mod")
      fail("'" + name + "' is a reserved word", t);
    if (var_index_.count(name))
      fail("component name '" + name + "' collides with a variable", t);
    expect_punct('=', "after component name '" + name + "'");
    return {name, parse_expr()};
  }

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term();
    while (peek().type == Tok::Punct &&
           (peek().punct == '+' || peek().punct == '-')) {
      char op = take().punct;
      MultiPoly rhs = parse_term();
      acc = (op == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_unary();
    while (peek().type == Tok::Punct && peek().punct == '*') {
      take();
      acc = acc * parse_unary();
    }
    if (peek().type == Tok::Punct && peek().punct == '/')
      fail("'/' is only allowed inside a rational literal a/b", peek());
    return acc;
  }

  MultiPoly parse_unary() {
    if (peek().type == Tok::Punct && peek().punct == '-') {
      take();
      return -parse_unary();
    }
    return parse_power();
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (peek().type == Tok::Punct && peek().punct == '^') {
      take();
      const Token& et = peek();
      if (et.type == Tok::Punct && et.punct == '-')
        fail("negative exponent not allowed", et);
      if (et.type != Tok::Int)
        fail("exponent must be a nonnegative integer literal", et);
      mpz_class e(take().text, 10);
      if (!e.fits_uint_p()) fail("exponent too large", et);
      return base.pow(e.get_ui());
    }
    return base;
  }

  MultiPoly parse_atom() {
    const Token& t = peek();
    if (t.type == Tok::Int) {
      mpz_class num(take().text, 10);
      if (peek().type == Tok::Punct && peek().punct == '/' &&
          peek(1).type == Tok::Int) {
        take();  // '/'
        const Token& dt = peek();
        mpz_class den(take().text, 10);
        if (den == 0) fail("rational literal with zero denominator", dt);
        return literal(Scalar::rational(num, den), dt);
      }
      return literal(Scalar::integer(num), t);
    }
    if (t.type == Tok::Ident) {
      auto it = var_index_.find(t.text);
      if (it == var_index_.end())
        fail("unknown variable '" + t.text + "'", t);
      take();
      return MultiPoly::variable(static_cast<unsigned>(vars_.size()),
                                 static_cast<unsigned>(it->second), ring_);
    }
    if (t.type == Tok::Punct && t.punct == '(') {
      take();
      MultiPoly inner = parse_expr();
      expect_punct(')', "to close parenthesis");
      return inner;
    }
    fail("expected a number, variable, or parenthesized expression", t);
  }

  MultiPoly literal(const Scalar& value, const Token& at) {
    Scalar v = value;
    if (modulus_) {
      try {
        v = v.reduce_mod(*modulus_);
      } catch (const PreconditionError& e) {
        fail(e.what(), at);
      }
    } else {
      v = v.to_rational();
    }
    return MultiPoly::constant(static_cast<unsigned>(vars_.size()), v);
  }

  // Over Q: downgrade to Z when every coefficient is integral.
  void finalize_ring(std::vector<MultiPoly>& polys) const {
    if (modulus_) return;
    for (const auto& p : polys)
      for (const auto& [e, c] : p.terms())
        if (c.as_rational().get_den() != 1) return;  // stay rational
    for (auto& p : polys) p = p.to_ring(CoeffRing::integers());
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int prev_line_ = 1, prev_col_ = 1;

  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> var_index_;
  std::optional<PrimePower> modulus_;
  CoeffRing ring_ = CoeffRing::rationals();
};

}  // namespace

ParsedPolys parse_polys(const std::string& text) {
  return Parser(text).parse_file();
}

ParsedMap parse_map(const std::string& text) {
  ParsedPolys raw = Parser(text).parse_file();
  if (raw.polys.size() != raw.var_names.size())
    throw ParseError("non-square system: " +
                         std::to_string(raw.var_names.size()) +
                         " variable(s) but " +
                         std::to_string(raw.polys.size()) + " component(s)",
                     1, 1);
  return ParsedMap{PolyMap(std::move(raw.polys)), std::move(raw.var_names),
                   std::move(raw.component_names), raw.modulus};
}

MultiPoly parse_polynomial(const std::string& text,
                           const std::vector<std::string>& var_names) {
  return Parser(text).parse_bare_expr(var_names);
}

std::string canonical_map_string(const ParsedMap& m) {
  std::string out = "vars ";
  for (std::size_t i = 0; i < m.var_names.size(); ++i) {
    if (i) out += ", ";
    out += m.var_names[i];
  }
  out += ";";
  if (m.modulus) out += " mod " + m.modulus->str() + ";";
  for (unsigned i = 0; i < m.map.dim(); ++i) {
    out += " " + m.component_names[i] + " = " +
           canonical_string(m.map.component(i), m.var_names) + ";";
  }
  return out;
}

}  // namespace polymap

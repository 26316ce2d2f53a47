#pragma once

// Textual input format for polynomial maps.
//
//   file       := header assignment+
//   header     := "vars" ident ("," ident)* [";" "mod" int ["^" int]]
//   assignment := ident "=" expr ";"        (final ";" may be omitted)
//   expr       := the usual +, -, *, ^ with parentheses, integer literals of
//                 arbitrary size, and rational literals "a/b"
//
// Examples:
//   "vars x; f1 = 2*x"
//   "vars x, y; f1 = x + y^2; f2 = y"
//   "vars x; mod 5^2; f1 = x^2 + 1;"
//
// Coefficient domain inference: a "mod p^k" clause makes every coefficient a
// residue mod p^k (rational literals allowed when the denominator is a unit);
// otherwise coefficients are rational, downgraded to integers when every
// coefficient is integral.

#include <optional>
#include <string>
#include <vector>

#include "polymap/polymap.hpp"

namespace polymap {

// Syntax or semantic error in input text, with 1-based position.
class ParseError : public Error {
public:
  ParseError(std::string msg, int line, int col)
      : Error("line " + std::to_string(line) + ", col " +
              std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

struct ParsedMap {
  PolyMap map;
  std::vector<std::string> var_names;
  std::vector<std::string> component_names;
  std::optional<PrimePower> modulus;  // engaged iff map is over Z/p^k
};

// Like ParsedMap but without the squareness requirement: used by operations
// that take standalone polynomials (resultant, roots, ...).
struct ParsedPolys {
  std::vector<MultiPoly> polys;
  std::vector<std::string> var_names;
  std::vector<std::string> component_names;
  std::optional<PrimePower> modulus;
};

// Parse a full map file; the system must be square (one component per
// variable, in declaration order).
ParsedMap parse_map(const std::string& text);

// Parse the same format without requiring squareness (>= 1 assignment).
ParsedPolys parse_polys(const std::string& text);

// Parse a bare expression over the given variables (integer or rational
// coefficients, inferred as for parse_map).
MultiPoly parse_polynomial(const std::string& text,
                           const std::vector<std::string>& var_names);

// Reconstruct a full source string ("vars ...; [mod ...;] name = ...; ...")
// in canonical form; parse_map round-trips it.
std::string canonical_map_string(const ParsedMap& m);

}  // namespace polymap

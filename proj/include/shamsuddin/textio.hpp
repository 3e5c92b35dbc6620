#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/endo.hpp"
#include "shamsuddin/multipoly.hpp"

namespace shamsuddin {

enum class TextErrorKind {
  kSyntax,    // input outside the grammar
  kSemantic,  // well-formed, but wrong arity / unknown variable / non-triangular / missing entry
};

/// Every text-level failure carries the byte offset it refers to.
class TextError : public std::runtime_error {
 public:
  TextError(TextErrorKind kind, std::size_t position, const std::string& message);

  TextErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  TextErrorKind kind_;
  std::size_t position_;
  std::string message_;
};

/// poly   := '-'? term (('+' | '-') term)*
/// term   := factor ('*' factor)*
/// factor := base ('^' nat)?
/// base   := rational | var | '(' poly ')'
/// rational := '-'? digits ('/' digits)?
/// var    := 'x' | 'y' digits        (y1 .. y<arity>)
MultiPoly parse_poly(std::string_view text, std::size_t arity);

/// Canonical form: terms in TermOrder, coefficients as reduced fractions, unit
/// coefficients omitted except a leading -1 ("-1*y1 - 2*x - 2").
std::string format_poly(const MultiPoly& p);
std::string format_unipoly(const UniPoly& p);

using ParsedDerivation = std::variant<Derivation, TriangularDerivation>;

/// Entries "y<i> : a = <poly in x> , b = <poly>" separated by ';' or newlines.
/// Every y1..yn must appear exactly once. Shamsuddin (normalized) when every b
/// lies in K[x], triangular otherwise.
ParsedDerivation parse_derivation(std::string_view text);
std::string format_derivation(const Derivation& d);
std::string format_derivation(const TriangularDerivation& d);

/// Entries "x -> <poly>" and "y<i> -> <poly>" separated by ';' or newlines.
PolyEndo parse_endo(std::string_view text, std::size_t arity);
std::string format_endo(const PolyEndo& rho);

}  // namespace shamsuddin

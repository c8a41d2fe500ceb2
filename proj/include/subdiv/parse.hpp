#pragma once

// Text grammar shared by the CLI and the trace/script format:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rat | var | var '^' uint
//   var    := 'x[' uint ',' uint ']' | 't[' uint ']' | 'b' | 'a'
//   rat    := uint | uint '/' uint
//
// Whitespace is insignificant. 'b' is beta and 'a' is alpha.

#include <stdexcept>
#include <string>
#include <string_view>

#include "subdiv/poly.hpp"

namespace subdiv {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an x-polynomial; t-variables are rejected.
XPoly parse_poly(std::string_view text, int n);
/// Parses a t-polynomial in t[1..n]; x-variables are rejected.
TPoly parse_tpoly(std::string_view text, int n);
/// Parses a bare product of x-variables (no coefficient, no parameters).
XMonomial parse_monomial(std::string_view text, int n);

/// Canonical rendering; inverse of parse_poly.
inline std::string format_poly(const XPoly& p) { return p.str(); }

}  // namespace subdiv

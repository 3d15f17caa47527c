#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bl/expr.hpp"

namespace bl {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

/// Grammar:
///   expr   := term ('v' term)*
///   term   := factor ('^' factor)*
///   factor := '0' | 'S' | 'I' | 'HFp' | 'BP' | 'Q'
///           | ('F'|'T'|'K'|'E') '(' nat ')' | '(' expr ')'
/// '^' (smash) binds tighter than 'v' (wedge); whitespace is ignored;
/// the unicode wedge and smash signs are accepted as aliases.
/// Indices above 65536 are rejected.
ClassExpr parse_expr(std::string_view text);

} // namespace bl

#ifndef QSD_PARSE_HPP
#define QSD_PARSE_HPP

#include <stdexcept>
#include <string>

#include "qsd/poly.hpp"

namespace qsd {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar (standard precedence, ^ binds tightest, exponents are
// nonnegative integer literals):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := nat | 'q' | '(' expr ')' | '-' factor
IntPoly parse_poly(const std::string& text);

/// Canonical form printer; parse_poly(print_poly(p)) == p.
std::string print_poly(const IntPoly& p);

}  // namespace qsd

#endif

#ifndef RIGID_PARSE_HPP
#define RIGID_PARSE_HPP

#include <stdexcept>
#include <string>

#include "rigid/laurent.hpp"

namespace rigid {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

/// Parse the polynomial grammar: variables u1..u9 (aliases x,y,z for d<=3),
/// integer literals, + - * ^ and parentheses, negative exponents as u1^-2.
/// Implicit multiplication is rejected. If expectedDim > 0 the result is
/// embedded in R_{expectedDim}; a variable index beyond it is an error.
LaurentPoly parsePoly(const std::string& text, int expectedDim = 0);

}  // namespace rigid

#endif

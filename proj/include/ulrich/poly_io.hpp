#ifndef ULRICH_POLY_IO_HPP
#define ULRICH_POLY_IO_HPP

#include <string>

#include "ulrich/ring.hpp"

namespace ulrich {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos)
    {
    }
};

/// Parses the session polynomial grammar: +, -, *, ^, integer coefficients,
/// parentheses, declared variable names.
Poly parse_poly(const AmbientRing& R, const std::string& text);

std::string poly_to_string(const AmbientRing& R, const Poly& p);
std::string vec_to_string(const AmbientRing& R, const Vec& v);

}  // namespace ulrich

#endif

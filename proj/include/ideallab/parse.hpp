#pragma once

#include <string>

#include "ideallab/ideal.hpp"

namespace ideallab {

// Ring spec mini-language: Z | Z/12 | Z/4xZ/9 | ZxZ | Zloc:5 | Zinv:2 | kxy
RingHandle parse_ring(const std::string& spec);

// Element literals: integers, pairs (a,b), rationals a/b, polynomials in
// x and y built from integers, +, -, * and ^.
Element parse_element(const RingHandle& ring, const std::string& spec);

// Ideal literals: (12) | (0) | (4)x(9) | x^2,x*y | p^3 | (1)
Ideal parse_ideal(const RingHandle& ring, const std::string& spec);

Poly parse_poly(const std::string& spec);

}  // namespace ideallab

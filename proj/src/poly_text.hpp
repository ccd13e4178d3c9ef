#ifndef LSREAL_POLY_TEXT_HPP
#define LSREAL_POLY_TEXT_HPP

#include <string>

#include "poly.hpp"
#include "ring.hpp"

namespace lsreal {

// Human-readable sparse form, e.g. "-y1 + y2 + z1 - z2" or "3/4*y1^2*z3 + 1".
// Terms print in descending degrevlex order; the parser is an exact inverse.

std::string poly_to_text(const PolyQ& p, const Ring& ring);
PolyQ poly_from_text(const std::string& text, const Ring& ring);

std::string poly_to_text_fp(const PolyFp& p, const Ring& ring, const PrimeField& field);
PolyFp poly_from_text_fp(const std::string& text, const Ring& ring, const PrimeField& field);

} // namespace lsreal

#endif

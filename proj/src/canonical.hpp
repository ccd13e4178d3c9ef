#ifndef LSREAL_CANONICAL_HPP
#define LSREAL_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linear_space.hpp"

namespace lsreal {

// Total-order key identifying the isomorphism class: [n, #lines, canonical
// line masks ascending]. Equal codes <=> isomorphic spaces.
struct CanonicalResult {
    std::vector<std::uint32_t> code;
    std::vector<int> to_canonical;                 // point p -> canonical label, 1-based
    std::vector<std::vector<int>> automorphisms;   // generating set of Aut, possibly redundant
};

CanonicalResult canonical_form(const LinearSpace& s);

// The canonically relabelled representative of the isomorphism class.
LinearSpace canonical_representative(const LinearSpace& s);

std::string certificate_string(const std::vector<std::uint32_t>& code);

// Witness maps points of a to points of b (index = a-point - 1, value =
// b-point) and is verified to carry lines onto lines.
std::optional<std::vector<int>> isomorphism_witness(const LinearSpace& a, const LinearSpace& b);

} // namespace lsreal

#endif

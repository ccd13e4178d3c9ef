#ifndef LSREAL_MATRIX_IDEAL_HPP
#define LSREAL_MATRIX_IDEAL_HPP

#include <array>
#include <vector>

#include "enumerate.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace lsreal {

// 3x3 determinant of polynomial columns, by cofactor expansion.
PolyQ det3(const std::array<std::array<PolyQ, 3>, 3>& columns, const MonomialOrder& order);

// Coordinate matrix of a framed superfiguration: frame columns
// (0,1,1),(0,0,1),(0,1,0),(1,1,1),(1,0,0), then (1,y_j,z_j) for the free
// block, then (0,1,w_j) for the points on the line through {1,2,3}.
std::vector<std::array<PolyQ, 3>> build_matrix(const Framing& framing);

struct IdealQ {
    Ring ring;
    std::vector<PolyQ> generators;
};

struct DetIdeal {
    IdealQ ideal;
    int determinants_total = 0;   // one per collinear triple
    int determinants_trivial = 0; // identically zero, dropped
    std::vector<std::array<int, 3>> kept_triples;
};

// One determinant per 3-subset of every full line; identically-zero
// generators are dropped and counted.
DetIdeal build_ideal(const Framing& framing);

} // namespace lsreal

#endif

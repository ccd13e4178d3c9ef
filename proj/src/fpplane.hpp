#ifndef LSREAL_FPPLANE_HPP
#define LSREAL_FPPLANE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "field.hpp"

namespace lsreal {

// The projective plane P^2(F_q) with a fixed point indexing. Coordinates are
// normalized so the first nonzero entry is 1; indexing is
//   0           -> (0,0,1)
//   1..q        -> (0,1,w)
//   q+1+(y*q+z) -> (1,y,z)
class ProjPlane {
public:
    using Coords = std::array<std::uint64_t, 3>;

    explicit ProjPlane(std::uint64_t q_prime);

    std::uint64_t q() const { return field_.p; }
    const PrimeField& field() const { return field_; }
    int size() const { return static_cast<int>(q() * q() + q() + 1); }

    Coords coords(int index) const;
    int index(const Coords& raw) const; // any nonzero representative

    // standard frame (0:0:1), (0:1:0), (1:1:1), (1:0:0)
    std::array<int, 4> standard_frame() const;

    // dual vector of the line through two distinct points
    Coords line_through(int a, int b) const;
    bool on_line(const Coords& line, int point) const;
    // the q+1 points of a line, ascending by index
    std::vector<int> points_on_line(const Coords& line) const;
    // intersection point of two non-proportional lines
    int meet(const Coords& l1, const Coords& l2) const;
    static bool proportional(const Coords& a, const Coords& b, const PrimeField& f);

private:
    PrimeField field_;
};

} // namespace lsreal

#endif

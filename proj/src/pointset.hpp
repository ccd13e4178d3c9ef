#ifndef LSREAL_POINTSET_HPP
#define LSREAL_POINTSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace lsreal {

// Subsets of {1..n} as bitmasks; bit i holds point i+1. Points are 1-based
// externally, matching the usual [n] convention.
using PointSet = std::uint32_t;

constexpr int kMaxPoints = 24;

inline int set_size(PointSet s) { return std::popcount(s); }

inline PointSet full_set(int n) { return (n >= 32) ? ~PointSet{0} : ((PointSet{1} << n) - 1); }

inline bool contains(PointSet s, int point) { return (s >> (point - 1)) & 1u; }

inline PointSet with_point(PointSet s, int point) { return s | (PointSet{1} << (point - 1)); }

inline PointSet without_point(PointSet s, int point) { return s & ~(PointSet{1} << (point - 1)); }

inline int lowest_point(PointSet s) { return std::countr_zero(s) + 1; }

inline std::vector<int> set_to_points(PointSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline PointSet points_to_set(const std::vector<int>& points) {
    PointSet s = 0;
    for (int p : points) s = with_point(s, p);
    return s;
}

// Visits points in ascending order.
template <class Fn>
inline void for_each_point(PointSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s) + 1);
        s &= s - 1;
    }
}

} // namespace lsreal

#endif

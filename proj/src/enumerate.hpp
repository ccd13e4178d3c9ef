#ifndef LSREAL_ENUMERATE_HPP
#define LSREAL_ENUMERATE_HPP

#include <array>
#include <optional>
#include <vector>

#include "linear_space.hpp"

namespace lsreal {

// Every point on >= 3 full lines (the lines-side bound is structural).
bool is_superfiguration(const LinearSpace& s);

struct GlynnStep {
    int removed_point = 0;             // original label
    LinearSpace reduced;               // on n-1 points, relabelled
    int fiber_codim = 0;               // N in {0,1,2}
    std::vector<int> old_labels;       // new point -> original label
};

// Removes the point with the fewest full lines (ties: smallest index) when
// some point lies on <= 2 full lines; nullopt iff s is a superfiguration.
// Requires n > 1.
std::optional<GlynnStep> glynn_reduce(const LinearSpace& s);

// Same reduction at a caller-chosen point on <= 2 full lines.
GlynnStep glynn_reduce_at(const LinearSpace& s, int point);

// Iterated reduction until a superfiguration or a single point remains.
struct GlynnTrace {
    std::vector<std::pair<int, int>> steps; // (removed original label, N)
    LinearSpace result;
};
GlynnTrace glynn_reduce_fully(const LinearSpace& s);

// 4 ordered points, no 3 of them on a common line.
bool is_combinatorial_frame(const LinearSpace& s, const std::array<int, 4>& frame);

// Lexicographically first combinatorial frame, if any.
std::optional<std::array<int, 4>> first_combinatorial_frame(const LinearSpace& s);

struct VFrame {
    std::array<int, 5> points{};
};

// Constructive choice: smallest p1, lexicographically first pair of full
// lines through it, smallest remaining points. Requires a superfiguration.
VFrame find_v_frame(const LinearSpace& s);

void check_v_frame(const LinearSpace& s, const VFrame& vf);

// All V-shaped frames in deterministic order.
std::vector<VFrame> all_v_frames(const LinearSpace& s);

// A linear space reordered so that (1..5) is a V-shaped frame and the points
// of the full line through {1,2,3} other than 1,2,3 come last.
struct Framing {
    LinearSpace space;
    int n_prime = 0;
    int n_doubleprime = 0;
    std::vector<int> ordering; // original point p -> new label
};

Framing frame_ordering(const LinearSpace& s, const VFrame& vf);

// Identity framing when the labeling already satisfies the conventions.
std::optional<Framing> identity_framing(const LinearSpace& s);

// Identity framing when valid, else frame_ordering(find_v_frame(s)).
Framing preferred_framing(const LinearSpace& s);

// One canonical representative per isomorphism class, sorted by certificate.
std::vector<LinearSpace> enumerate_linear_spaces(int n, bool superfigurations_only,
                                                 int workers = 0);

} // namespace lsreal

#endif

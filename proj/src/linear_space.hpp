#ifndef LSREAL_LINEAR_SPACE_HPP
#define LSREAL_LINEAR_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pointset.hpp"

namespace lsreal {

// An arbitrary collection of subsets of {1..n}; input to closure and
// validation. Members of size <= 2 are allowed but carry no information.
struct CollinearityFamily {
    int n = 0;
    std::vector<PointSet> members;
};

// A linear space given by its point count and full lines (lines with >= 3
// points). Two-point lines are implicit. Invariants: every line is inside
// {1..n}, has >= 3 points, and two distinct lines meet in at most one point.
class LinearSpace {
public:
    LinearSpace() = default;
    // Throws Error(invalid_argument) when the line set violates an axiom.
    LinearSpace(int n, std::vector<PointSet> lines);

    int n() const { return n_; }
    const std::vector<PointSet>& lines() const { return lines_; }
    int line_count() const { return static_cast<int>(lines_.size()); }

    // Number of full lines through a point.
    int point_degree(int point) const;
    // Ascending list of lines containing the point.
    std::vector<PointSet> lines_through(int point) const;
    // The unique full line containing the pair, or 0 when the pair is only
    // implicitly collinear.
    PointSet line_through_pair(int a, int b) const;

    CollinearityFamily as_family() const { return CollinearityFamily{n_, lines_}; }

    bool operator==(const LinearSpace& other) const = default;

private:
    int n_ = 1;
    std::vector<PointSet> lines_; // sorted ascending as masks
};

struct AxiomViolation {
    int axiom;                // 1, 2 or 3 in the linear-space axiom numbering
    std::vector<int> witness; // offending points
    std::string message;
};

// Checks whether the size->=3 members of the family, together with all pairs
// and the downward closure, form a linear space. Total: never throws on a
// well-formed family.
std::optional<AxiomViolation> validate_family(const CollinearityFamily& family);

// Minimal linear space whose collinear sets contain every member of the
// family. Computed as a fixpoint that merges members sharing >= 2 points.
LinearSpace closure(const CollinearityFamily& family);

// Partial order: every collinear subset of a is collinear in b. Requires
// a.n == b.n.
bool leq(const LinearSpace& a, const LinearSpace& b);

bool is_collinear(const LinearSpace& s, PointSet subset);

struct QuotientMap {
    int source_n = 0;
    int target_n = 0;
    std::vector<int> assignment; // assignment[i-1] in {1..target_n}, surjective
};

void check_quotient_map(const QuotientMap& q);

// Pushes every full line through the assignment, then closes.
LinearSpace quotient(const LinearSpace& s, const QuotientMap& q);

// Restriction to `keep`, relabelled 1..|keep| preserving order. Intersections
// of size < 3 become implicit. old_labels, when given, receives the original
// label of each new point.
LinearSpace induced_subspace(const LinearSpace& s, PointSet keep,
                             std::vector<int>* old_labels = nullptr);

// Relabels points: point p becomes perm[p-1] (perm is a bijection on {1..n}).
LinearSpace relabel(const LinearSpace& s, const std::vector<int>& perm);

} // namespace lsreal

#endif

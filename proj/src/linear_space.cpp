#include "linear_space.hpp"

#include <algorithm>

#include "error.hpp"

namespace lsreal {

namespace {

void check_point_range(int n, PointSet member) {
    if (n < 1 || n > kMaxPoints) fail(ErrorCode::invalid_argument, "point count out of range");
    if (member & ~full_set(n)) fail(ErrorCode::invalid_argument, "member contains a point outside {1..n}");
}

// Maximal members of size >= 3, deduplicated, ascending.
std::vector<PointSet> maximal_members(const std::vector<PointSet>& members) {
    std::vector<PointSet> big;
    for (PointSet m : members)
        if (set_size(m) >= 3) big.push_back(m);
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    std::vector<PointSet> out;
    for (PointSet m : big) {
        bool maximal = true;
        for (PointSet other : big)
            if (other != m && (m & other) == m) { maximal = false; break; }
        if (maximal) out.push_back(m);
    }
    return out;
}

} // namespace

LinearSpace::LinearSpace(int n, std::vector<PointSet> lines) : n_(n), lines_(std::move(lines)) {
    if (n < 1 || n > kMaxPoints) fail(ErrorCode::invalid_argument, "point count out of range");
    std::sort(lines_.begin(), lines_.end());
    lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
    for (PointSet line : lines_) {
        check_point_range(n, line);
        if (set_size(line) < 3) fail(ErrorCode::invalid_argument, "full line with fewer than 3 points");
    }
    for (size_t i = 0; i < lines_.size(); ++i)
        for (size_t j = i + 1; j < lines_.size(); ++j)
            if (set_size(lines_[i] & lines_[j]) >= 2)
                fail(ErrorCode::invalid_argument, "two full lines share two points");
}

int LinearSpace::point_degree(int point) const {
    int deg = 0;
    for (PointSet line : lines_)
        if (contains(line, point)) ++deg;
    return deg;
}

std::vector<PointSet> LinearSpace::lines_through(int point) const {
    std::vector<PointSet> out;
    for (PointSet line : lines_)
        if (contains(line, point)) out.push_back(line);
    return out;
}

PointSet LinearSpace::line_through_pair(int a, int b) const {
    for (PointSet line : lines_)
        if (contains(line, a) && contains(line, b)) return line;
    return 0;
}

std::optional<AxiomViolation> validate_family(const CollinearityFamily& family) {
    if (family.n < 1 || family.n > kMaxPoints)
        fail(ErrorCode::invalid_argument, "point count out of range");
    for (PointSet m : family.members) {
        if (m & ~full_set(family.n)) {
            AxiomViolation v;
            v.axiom = 1;
            v.witness = set_to_points(m & ~full_set(family.n));
            v.message = "member is not a subset of the point set";
            return v;
        }
    }
    // With pairs implicit and the downward closure taken, only the
    // two-points-on-one-line axiom can fail, witnessed by a pair shared by
    // two maximal members.
    std::vector<PointSet> lines = maximal_members(family.members);
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            PointSet common = lines[i] & lines[j];
            if (set_size(common) >= 2) {
                AxiomViolation v;
                v.axiom = 2;
                std::vector<int> pts = set_to_points(common);
                v.witness = {pts[0], pts[1]};
                v.message = "two points on more than one line";
                return v;
            }
        }
    }
    return std::nullopt;
}

LinearSpace closure(const CollinearityFamily& family) {
    if (family.n < 1 || family.n > kMaxPoints)
        fail(ErrorCode::invalid_argument, "point count out of range");
    for (PointSet m : family.members) check_point_range(family.n, m);

    // Work with members of size >= 3 only; merge any two sharing >= 2 points
    // until stable, then keep maximal ones.
    std::vector<PointSet> work;
    for (PointSet m : family.members)
        if (set_size(m) >= 3) work.push_back(m);
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < work.size() && !changed; ++i) {
            for (size_t j = i + 1; j < work.size() && !changed; ++j) {
                if (set_size(work[i] & work[j]) >= 2) {
                    PointSet merged = work[i] | work[j];
                    work.erase(work.begin() + j);
                    work.erase(work.begin() + i);
                    work.push_back(merged);
                    changed = true;
                }
            }
        }
    }
    return LinearSpace(family.n, maximal_members(work));
}

bool leq(const LinearSpace& a, const LinearSpace& b) {
    if (a.n() != b.n()) fail(ErrorCode::invalid_argument, "leq: point counts differ");
    // Enough to check full lines of a; smaller collinear sets are always
    // collinear in b.
    for (PointSet line : a.lines()) {
        bool inside = false;
        for (PointSet other : b.lines())
            if ((line & other) == line) { inside = true; break; }
        if (!inside) return false;
    }
    return true;
}

bool is_collinear(const LinearSpace& s, PointSet subset) {
    if (subset & ~full_set(s.n())) fail(ErrorCode::invalid_argument, "point outside {1..n}");
    if (set_size(subset) <= 2) return true;
    for (PointSet line : s.lines())
        if ((subset & line) == subset) return true;
    return false;
}

void check_quotient_map(const QuotientMap& q) {
    if (q.source_n < 1 || q.source_n > kMaxPoints || q.target_n < 1 || q.target_n > kMaxPoints)
        fail(ErrorCode::invalid_argument, "quotient map: point count out of range");
    if (static_cast<int>(q.assignment.size()) != q.source_n)
        fail(ErrorCode::invalid_argument, "quotient map: assignment size mismatch");
    PointSet hit = 0;
    for (int image : q.assignment) {
        if (image < 1 || image > q.target_n)
            fail(ErrorCode::invalid_argument, "quotient map: image out of range");
        hit = with_point(hit, image);
    }
    if (hit != full_set(q.target_n)) fail(ErrorCode::invalid_argument, "quotient map: not surjective");
}

LinearSpace quotient(const LinearSpace& s, const QuotientMap& q) {
    check_quotient_map(q);
    if (q.source_n != s.n()) fail(ErrorCode::invalid_argument, "quotient map: source size mismatch");
    CollinearityFamily pushed{q.target_n, {}};
    for (PointSet line : s.lines()) {
        PointSet image = 0;
        for_each_point(line, [&](int p) { image = with_point(image, q.assignment[p - 1]); });
        pushed.members.push_back(image);
    }
    return closure(pushed);
}

LinearSpace induced_subspace(const LinearSpace& s, PointSet keep, std::vector<int>* old_labels) {
    if (keep == 0) fail(ErrorCode::invalid_argument, "induced subspace: empty point set");
    if (keep & ~full_set(s.n())) fail(ErrorCode::invalid_argument, "induced subspace: point outside {1..n}");

    std::vector<int> kept = set_to_points(keep);
    std::vector<int> new_label(s.n() + 1, 0);
    for (size_t i = 0; i < kept.size(); ++i) new_label[kept[i]] = static_cast<int>(i) + 1;
    if (old_labels) *old_labels = kept;

    std::vector<PointSet> lines;
    for (PointSet line : s.lines()) {
        PointSet cut = line & keep;
        if (set_size(cut) < 3) continue;
        PointSet relabelled = 0;
        for_each_point(cut, [&](int p) { relabelled = with_point(relabelled, new_label[p]); });
        lines.push_back(relabelled);
    }
    return LinearSpace(static_cast<int>(kept.size()), std::move(lines));
}

LinearSpace relabel(const LinearSpace& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.n()) fail(ErrorCode::invalid_argument, "relabel: permutation size mismatch");
    PointSet seen = 0;
    for (int image : perm) {
        if (image < 1 || image > s.n() || contains(seen, image))
            fail(ErrorCode::invalid_argument, "relabel: not a permutation");
        seen = with_point(seen, image);
    }
    std::vector<PointSet> lines;
    lines.reserve(s.lines().size());
    for (PointSet line : s.lines()) {
        PointSet image = 0;
        for_each_point(line, [&](int p) { image = with_point(image, perm[p - 1]); });
        lines.push_back(image);
    }
    return LinearSpace(s.n(), std::move(lines));
}

} // namespace lsreal

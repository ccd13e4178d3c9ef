#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "canonical.hpp"
#include "error.hpp"

namespace lsreal {

bool is_superfiguration(const LinearSpace& s) {
    for (int p = 1; p <= s.n(); ++p)
        if (s.point_degree(p) < 3) return false;
    return true;
}

namespace {

// All lines of the space including implicit 2-point lines, as masks.
std::vector<PointSet> lines_with_pairs(const LinearSpace& s) {
    std::vector<PointSet> out = s.lines();
    for (int a = 1; a <= s.n(); ++a)
        for (int b = a + 1; b <= s.n(); ++b) {
            PointSet pair = with_point(with_point(0, a), b);
            bool covered = false;
            for (PointSet line : s.lines())
                if ((line & pair) == pair) { covered = true; break; }
            if (!covered) out.push_back(pair);
        }
    return out;
}

GlynnStep reduce_at_unchecked(const LinearSpace& s, int point) {
    GlynnStep step;
    step.removed_point = point;
    step.reduced = induced_subspace(s, without_point(full_set(s.n()), point), &step.old_labels);

    // N counts the reduced-space lines whose original points together with
    // the removed point stay collinear; this is the number of independent
    // linear conditions on the removed point's image.
    int count = 0;
    for (PointSet line : lines_with_pairs(step.reduced)) {
        PointSet original = 0;
        for_each_point(line, [&](int p) { original = with_point(original, step.old_labels[p - 1]); });
        if (is_collinear(s, with_point(original, point))) ++count;
    }
    step.fiber_codim = count;
    return step;
}

} // namespace

std::optional<GlynnStep> glynn_reduce(const LinearSpace& s) {
    if (s.n() <= 1) fail(ErrorCode::invalid_argument, "glynn_reduce: need more than one point");
    int best_point = 0, best_degree = 3;
    for (int p = 1; p <= s.n(); ++p) {
        int deg = s.point_degree(p);
        if (deg < best_degree) {
            best_degree = deg;
            best_point = p;
        }
    }
    if (best_point == 0) return std::nullopt; // superfiguration
    return reduce_at_unchecked(s, best_point);
}

GlynnStep glynn_reduce_at(const LinearSpace& s, int point) {
    if (s.n() <= 1) fail(ErrorCode::invalid_argument, "glynn_reduce: need more than one point");
    if (point < 1 || point > s.n()) fail(ErrorCode::invalid_argument, "glynn_reduce: point out of range");
    if (s.point_degree(point) > 2)
        fail(ErrorCode::invalid_argument, "glynn_reduce: point lies on more than two full lines");
    return reduce_at_unchecked(s, point);
}

GlynnTrace glynn_reduce_fully(const LinearSpace& s) {
    GlynnTrace trace;
    trace.result = s;
    std::vector<int> labels(s.n());
    for (int i = 0; i < s.n(); ++i) labels[i] = i + 1;
    while (trace.result.n() > 1) {
        std::optional<GlynnStep> step = glynn_reduce(trace.result);
        if (!step) break;
        trace.steps.emplace_back(labels[step->removed_point - 1], step->fiber_codim);
        std::vector<int> next_labels;
        for (int p : step->old_labels) next_labels.push_back(labels[p - 1]);
        labels = std::move(next_labels);
        trace.result = step->reduced;
    }
    return trace;
}

bool is_combinatorial_frame(const LinearSpace& s, const std::array<int, 4>& frame) {
    PointSet mask = 0;
    for (int p : frame) {
        if (p < 1 || p > s.n() || contains(mask, p)) return false;
        mask = with_point(mask, p);
    }
    for (PointSet line : s.lines())
        if (set_size(line & mask) >= 3) return false;
    return true;
}

std::optional<std::array<int, 4>> first_combinatorial_frame(const LinearSpace& s) {
    if (s.n() < 4) return std::nullopt;
    for (int a = 1; a <= s.n(); ++a)
        for (int b = a + 1; b <= s.n(); ++b)
            for (int c = b + 1; c <= s.n(); ++c)
                for (int d = c + 1; d <= s.n(); ++d) {
                    std::array<int, 4> frame{a, b, c, d};
                    if (is_combinatorial_frame(s, frame)) return frame;
                }
    return std::nullopt;
}

void check_v_frame(const LinearSpace& s, const VFrame& vf) {
    PointSet mask = 0;
    for (int p : vf.points) {
        if (p < 1 || p > s.n() || contains(mask, p))
            fail(ErrorCode::invalid_argument, "v-frame: points not distinct or out of range");
        mask = with_point(mask, p);
    }
    auto [p1, p2, p3, p4, p5] = vf.points;
    PointSet left = points_to_set({p1, p2, p3});
    PointSet right = points_to_set({p1, p4, p5});
    if (!is_collinear(s, left)) fail(ErrorCode::invalid_argument, "v-frame: {p1,p2,p3} not collinear");
    if (!is_collinear(s, right)) fail(ErrorCode::invalid_argument, "v-frame: {p1,p4,p5} not collinear");
    if (!is_combinatorial_frame(s, {p2, p3, p4, p5}))
        fail(ErrorCode::invalid_argument, "v-frame: (p2,p3,p4,p5) is not a combinatorial frame");
}

VFrame find_v_frame(const LinearSpace& s) {
    if (!is_superfiguration(s)) fail(ErrorCode::invalid_argument, "find_v_frame: not a superfiguration");
    int p1 = 1;
    std::vector<PointSet> through = s.lines_through(p1);
    PointSet l1 = through[0], l2 = through[1];
    std::vector<int> l1_rest = set_to_points(without_point(l1, p1));
    std::vector<int> l2_rest = set_to_points(without_point(l2, p1));
    VFrame vf{{p1, l1_rest[0], l1_rest[1], l2_rest[0], l2_rest[1]}};
    check_v_frame(s, vf);
    return vf;
}

std::vector<VFrame> all_v_frames(const LinearSpace& s) {
    std::vector<VFrame> out;
    for (int p1 = 1; p1 <= s.n(); ++p1) {
        std::vector<PointSet> through = s.lines_through(p1);
        for (size_t i = 0; i < through.size(); ++i) {
            for (size_t j = 0; j < through.size(); ++j) {
                if (i == j) continue;
                std::vector<int> l1_rest = set_to_points(without_point(through[i], p1));
                std::vector<int> l2_rest = set_to_points(without_point(through[j], p1));
                for (int a : l1_rest)
                    for (int b : l1_rest) {
                        if (a == b) continue;
                        for (int c : l2_rest)
                            for (int d : l2_rest) {
                                if (c == d) continue;
                                VFrame vf{{p1, a, b, c, d}};
                                if (is_combinatorial_frame(s, {a, b, c, d})) out.push_back(vf);
                            }
                    }
            }
        }
    }
    return out;
}

Framing frame_ordering(const LinearSpace& s, const VFrame& vf) {
    check_v_frame(s, vf);
    auto [p1, p2, p3, p4, p5] = vf.points;
    PointSet left = points_to_set({p1, p2, p3});
    PointSet line123 = 0;
    for (PointSet line : s.lines())
        if ((line & left) == left) { line123 = line; break; }
    // left is collinear and has 3 points, so line123 is set

    PointSet frame_mask = points_to_set({p1, p2, p3, p4, p5});
    PointSet tail = line123 & ~frame_mask;
    std::vector<int> order = {p1, p2, p3, p4, p5};
    for (int p = 1; p <= s.n(); ++p)
        if (!contains(frame_mask, p) && !contains(tail, p)) order.push_back(p);
    int n_prime = static_cast<int>(order.size()) - 5;
    for_each_point(tail, [&](int p) { order.push_back(p); });

    Framing framing;
    framing.n_prime = n_prime;
    framing.n_doubleprime = set_size(tail);
    framing.ordering.resize(s.n());
    for (size_t pos = 0; pos < order.size(); ++pos) framing.ordering[order[pos] - 1] = static_cast<int>(pos) + 1;
    framing.space = relabel(s, framing.ordering);
    return framing;
}

std::optional<Framing> identity_framing(const LinearSpace& s) {
    if (s.n() < 5) return std::nullopt;
    VFrame vf{{1, 2, 3, 4, 5}};
    try {
        check_v_frame(s, vf);
    } catch (const Error&) {
        return std::nullopt;
    }
    PointSet left = points_to_set({1, 2, 3});
    PointSet line123 = 0;
    for (PointSet line : s.lines())
        if ((line & left) == left) { line123 = line; break; }
    int n_doubleprime = set_size(line123) - 3;
    // the extra points of the line through {1,2,3} must occupy the last labels
    PointSet expected_tail = 0;
    for (int p = s.n() - n_doubleprime + 1; p <= s.n(); ++p) expected_tail = with_point(expected_tail, p);
    if ((line123 & ~left) != expected_tail) return std::nullopt;

    Framing framing;
    framing.space = s;
    framing.n_doubleprime = n_doubleprime;
    framing.n_prime = s.n() - 5 - n_doubleprime;
    framing.ordering.resize(s.n());
    for (int p = 1; p <= s.n(); ++p) framing.ordering[p - 1] = p;
    return framing;
}

Framing preferred_framing(const LinearSpace& s) {
    if (std::optional<Framing> id = identity_framing(s)) return *id;
    return frame_ordering(s, find_v_frame(s));
}

// ---------------------------------------------------------------------------
// Isomorph-free exhaustive generation.
//
// Levelwise canonical-augmentation: the classes with k lines are obtained by
// adding one compatible line to each representative with k-1 lines, keyed by
// certificate. Candidate lines are reduced to one per Aut-orbit first; the
// certificate map removes the remaining collisions.
// ---------------------------------------------------------------------------

namespace {

std::vector<PointSet> candidate_lines(int n) {
    std::vector<PointSet> out;
    for (PointSet m = 0; m <= full_set(n); ++m)
        if (set_size(m) >= 3) out.push_back(m);
    return out;
}

PointSet apply_perm(PointSet mask, const std::vector<int>& perm) {
    PointSet image = 0;
    for_each_point(mask, [&](int p) { image = with_point(image, perm[p - 1]); });
    return image;
}

// One representative (smallest mask) per orbit of `candidates` under the
// group generated by `gens`.
std::vector<PointSet> orbit_representatives(const std::vector<PointSet>& candidates,
                                            const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) return candidates;
    std::unordered_map<PointSet, int> index;
    index.reserve(candidates.size() * 2);
    for (size_t i = 0; i < candidates.size(); ++i) index[candidates[i]] = static_cast<int>(i);

    std::vector<int> parent(candidates.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const std::vector<int>& g : gens) {
        for (size_t i = 0; i < candidates.size(); ++i) {
            PointSet image = apply_perm(candidates[i], g);
            auto it = index.find(image);
            if (it != index.end()) {
                int a = find(static_cast<int>(i)), b = find(it->second);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<PointSet> reps;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(candidates[i]);
    return reps;
}

} // namespace

std::vector<LinearSpace> enumerate_linear_spaces(int n, bool superfigurations_only, int workers) {
    if (n < 1 || n > kMaxPoints) fail(ErrorCode::invalid_argument, "enumerate: point count out of range");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    const std::vector<PointSet> all_candidates = candidate_lines(n);

    using Code = std::vector<std::uint32_t>;
    std::map<Code, LinearSpace> everything;
    std::vector<std::pair<LinearSpace, std::vector<std::vector<int>>>> frontier;

    {
        LinearSpace empty(n, {});
        CanonicalResult c = canonical_form(empty);
        everything.emplace(c.code, empty);
        frontier.emplace_back(empty, std::move(c.automorphisms));
    }

    while (!frontier.empty()) {
        std::map<Code, LinearSpace> next;
        std::mutex merge_mutex;
        std::atomic<size_t> cursor{0};

        auto expand = [&]() {
            std::map<Code, LinearSpace> local;
            for (;;) {
                size_t idx = cursor.fetch_add(1);
                if (idx >= frontier.size()) break;
                const LinearSpace& space = frontier[idx].first;
                const std::vector<std::vector<int>>& auts = frontier[idx].second;

                std::vector<PointSet> compatible;
                for (PointSet cand : all_candidates) {
                    bool ok = true;
                    for (PointSet line : space.lines()) {
                        if (cand == line || set_size(cand & line) >= 2) { ok = false; break; }
                    }
                    if (ok) compatible.push_back(cand);
                }
                for (PointSet cand : orbit_representatives(compatible, auts)) {
                    std::vector<PointSet> lines = space.lines();
                    lines.push_back(cand);
                    LinearSpace child(n, std::move(lines));
                    CanonicalResult c = canonical_form(child);
                    if (!local.count(c.code)) local.emplace(std::move(c.code), relabel(child, c.to_canonical));
                }
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            next.merge(local);
        };

        if (workers == 1 || frontier.size() == 1) {
            expand();
        } else {
            std::vector<std::thread> threads;
            for (int t = 0; t < workers; ++t) threads.emplace_back(expand);
            for (std::thread& t : threads) t.join();
        }

        frontier.clear();
        for (auto& [code, space] : next) {
            if (!everything.count(code)) {
                CanonicalResult c = canonical_form(space);
                frontier.emplace_back(space, std::move(c.automorphisms));
                everything.emplace(code, std::move(space));
            }
        }
    }

    std::vector<LinearSpace> out;
    for (auto& [code, space] : everything) {
        if (superfigurations_only && !is_superfiguration(space)) continue;
        out.push_back(std::move(space));
    }
    return out;
}

} // namespace lsreal

#include "counting.hpp"

#include <algorithm>
#include <chrono>

#include "error.hpp"

namespace lsreal {

std::string count_mode_name(CountMode mode) {
    switch (mode) {
        case CountMode::chart: return "chart";
        case CountMode::framed_weak: return "framed-weak";
        case CountMode::framed_strong: return "framed-strong";
        case CountMode::strong_total: return "strong-total";
    }
    return "";
}

CountMode count_mode_from_name(const std::string& name) {
    if (name == "chart") return CountMode::chart;
    if (name == "framed-weak") return CountMode::framed_weak;
    if (name == "framed-strong") return CountMode::framed_strong;
    if (name == "strong-total") return CountMode::strong_total;
    fail(ErrorCode::invalid_argument, "unknown count mode: " + name);
}

namespace {

enum class Domain { pinned, all, affine_chart, w_chart };

struct Search {
    const LinearSpace& space;
    const ProjPlane& plane;
    bool strong = false;
    std::vector<Domain> domain;   // 1-based by point
    std::vector<int> images;      // 1-based by point; -1 unplaced
    std::vector<int> order;       // placement order for non-pinned points
    std::uint64_t stop_after = 0; // 0 = count everything
    const SolutionSink* sink = nullptr;

    std::uint64_t count = 0;
    bool stopped = false;

    Search(const LinearSpace& s, const ProjPlane& p) : space(s), plane(p) {
        domain.assign(s.n() + 1, Domain::all);
        images.assign(s.n() + 1, -1);
    }

    bool in_domain(int point, int z) const {
        const int q = static_cast<int>(plane.q());
        switch (domain[point]) {
            case Domain::pinned: return images[point] == z;
            case Domain::all: return true;
            case Domain::affine_chart: return z >= q + 1;
            case Domain::w_chart: return z >= 1 && z <= q;
        }
        return false;
    }

    // placement order: most constrained first (number of lines with two
    // placed points), ties by index; value independent, so computed once
    void make_order() {
        PointSet placed = 0;
        for (int p = 1; p <= space.n(); ++p)
            if (domain[p] == Domain::pinned) placed = with_point(placed, p);
        PointSet todo = full_set(space.n()) & ~placed;
        while (todo) {
            int best = -1, best_known = -1;
            for_each_point(todo, [&](int p) {
                int known = 0;
                for (PointSet line : space.lines())
                    if (contains(line, p) && set_size(line & placed) >= 2) ++known;
                if (known > best_known) {
                    best_known = known;
                    best = p;
                }
            });
            order.push_back(best);
            placed = with_point(placed, best);
            todo = without_point(todo, best);
        }
    }

    void emit() {
        ++count;
        if (sink && *sink) {
            std::vector<int> solution(images.begin() + 1, images.end());
            (*sink)(solution);
        }
        if (stop_after && count >= stop_after) stopped = true;
    }

    void visit(size_t depth) {
        if (stopped) return;
        if (depth == order.size()) {
            emit();
            return;
        }
        const int v = order[depth];

        // lines through v already determined by two distinct placed images
        std::vector<ProjPlane::Coords> cons;
        for (PointSet line : space.lines()) {
            if (!contains(line, v)) continue;
            int first = -1, second = -1;
            for_each_point(line, [&](int p) {
                if (p == v || images[p] < 0 || second >= 0) return;
                if (first < 0)
                    first = images[p];
                else if (images[p] != first)
                    second = images[p];
            });
            if (second >= 0) {
                ProjPlane::Coords l = plane.line_through(first, second);
                bool dup = false;
                for (const auto& other : cons)
                    if (ProjPlane::proportional(l, other, plane.field())) { dup = true; break; }
                if (!dup) cons.push_back(l);
            }
        }

        // strong mode: v must avoid the line of every placed pair it is not
        // combinatorially collinear with
        std::vector<ProjPlane::Coords> forbidden;
        if (strong) {
            for (int a = 1; a <= space.n(); ++a) {
                if (images[a] < 0) continue;
                for (int b = a + 1; b <= space.n(); ++b) {
                    if (images[b] < 0) continue;
                    PointSet through = space.line_through_pair(a, b);
                    if (through && contains(through, v)) continue;
                    forbidden.push_back(plane.line_through(images[a], images[b]));
                }
            }
        }

        auto try_candidate = [&](int z) {
            if (!in_domain(v, z)) return;
            for (const auto& l : cons)
                if (!plane.on_line(l, z)) return;
            if (strong) {
                for (int p = 1; p <= space.n(); ++p)
                    if (images[p] == z) return;
                for (const auto& l : forbidden)
                    if (plane.on_line(l, z)) return;
            }
            images[v] = z;
            visit(depth + 1);
            images[v] = -1;
        };

        if (cons.size() >= 2) {
            try_candidate(plane.meet(cons[0], cons[1]));
        } else if (cons.size() == 1) {
            for (int z : plane.points_on_line(cons[0])) {
                try_candidate(z);
                if (stopped) return;
            }
        } else {
            const int q = static_cast<int>(plane.q());
            int lo = 0, hi = plane.size();
            if (domain[v] == Domain::affine_chart) lo = q + 1;
            if (domain[v] == Domain::w_chart) { lo = 1; hi = q + 1; }
            for (int z = lo; z < hi; ++z) {
                try_candidate(z);
                if (stopped) return;
            }
        }
    }
};

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void pin_chart_frame(Search& search, const ProjPlane& plane) {
    const std::array<ProjPlane::Coords, 5> frame_cols = {
        ProjPlane::Coords{0, 1, 1}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}, {1, 0, 0}};
    for (int p = 1; p <= 5; ++p) {
        search.domain[p] = Domain::pinned;
        search.images[p] = plane.index(frame_cols[p - 1]);
    }
}

} // namespace

RealizationCount count_chart_points(const Framing& framing, std::uint64_t q, const SolutionSink& sink) {
    auto start = std::chrono::steady_clock::now();
    ProjPlane plane(q);
    Search search(framing.space, plane);
    pin_chart_frame(search, plane);
    for (int j = 0; j < framing.n_prime; ++j) search.domain[6 + j] = Domain::affine_chart;
    for (int j = 0; j < framing.n_doubleprime; ++j)
        search.domain[6 + framing.n_prime + j] = Domain::w_chart;
    search.sink = &sink;
    search.make_order();
    search.visit(0);
    return {q, CountMode::chart, mpz_class(static_cast<unsigned long>(search.count)),
            elapsed_since(start)};
}

RealizationCount count_framed(const LinearSpace& s, const std::array<int, 4>& frame, std::uint64_t q,
                              bool strong, const SolutionSink& sink, std::uint64_t stop_after) {
    if (!is_combinatorial_frame(s, frame))
        fail(ErrorCode::invalid_argument, "count_framed: not a combinatorial frame");
    auto start = std::chrono::steady_clock::now();
    ProjPlane plane(q);
    Search search(s, plane);
    std::array<int, 4> standard = plane.standard_frame();
    for (int i = 0; i < 4; ++i) {
        search.domain[frame[i]] = Domain::pinned;
        search.images[frame[i]] = standard[i];
    }
    search.strong = strong;
    search.sink = &sink;
    search.stop_after = stop_after;
    search.make_order();
    search.visit(0);
    return {q, strong ? CountMode::framed_strong : CountMode::framed_weak,
            mpz_class(static_cast<unsigned long>(search.count)), elapsed_since(start)};
}

mpz_class pgl3_order(std::uint64_t q) {
    mpz_class qz(static_cast<unsigned long>(q));
    mpz_class q3 = qz * qz * qz;
    return q3 * (q3 - 1) * (qz * qz - 1);
}

RealizationCount strong_total(const LinearSpace& s, std::uint64_t q) {
    std::optional<std::array<int, 4>> frame = first_combinatorial_frame(s);
    if (!frame) fail(ErrorCode::invalid_argument, "strong_total: the space admits no combinatorial frame");
    auto start = std::chrono::steady_clock::now();
    RealizationCount framed = count_framed(s, *frame, q, true);
    return {q, CountMode::strong_total, framed.count * pgl3_order(q), elapsed_since(start)};
}

std::map<std::uint64_t, bool> characteristic_scan(const LinearSpace& s,
                                                  const std::vector<std::uint64_t>& primes) {
    std::optional<std::array<int, 4>> frame = first_combinatorial_frame(s);
    if (!frame) fail(ErrorCode::invalid_argument, "characteristic_scan: no combinatorial frame");
    std::map<std::uint64_t, bool> out;
    for (std::uint64_t p : primes)
        out[p] = count_framed(s, *frame, p, true, nullptr, 1).count > 0;
    return out;
}

RealizationCount naive_count_oracle(const LinearSpace& s, std::uint64_t q, CountMode mode,
                                    std::optional<std::array<int, 4>> frame, const Framing* framing,
                                    double cap) {
    auto start = std::chrono::steady_clock::now();
    ProjPlane plane(q);
    const bool strong = (mode == CountMode::framed_strong || mode == CountMode::strong_total);

    std::vector<Domain> domain(s.n() + 1, Domain::all);
    std::vector<int> images(s.n() + 1, -1);
    if (mode == CountMode::chart) {
        if (!framing) fail(ErrorCode::invalid_argument, "naive chart count needs a framing");
        const std::array<ProjPlane::Coords, 5> frame_cols = {
            ProjPlane::Coords{0, 1, 1}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}, {1, 0, 0}};
        for (int p = 1; p <= 5; ++p) {
            domain[p] = Domain::pinned;
            images[p] = plane.index(frame_cols[p - 1]);
        }
        for (int j = 0; j < framing->n_prime; ++j) domain[6 + j] = Domain::affine_chart;
        for (int j = 0; j < framing->n_doubleprime; ++j)
            domain[6 + framing->n_prime + j] = Domain::w_chart;
    } else {
        if (!frame) fail(ErrorCode::invalid_argument, "naive framed count needs a frame");
        if (!is_combinatorial_frame(s, *frame))
            fail(ErrorCode::invalid_argument, "naive count: not a combinatorial frame");
        std::array<int, 4> standard = plane.standard_frame();
        for (int i = 0; i < 4; ++i) {
            domain[(*frame)[i]] = Domain::pinned;
            images[(*frame)[i]] = standard[i];
        }
    }

    double combinations = 1;
    std::vector<int> free_points;
    for (int p = 1; p <= s.n(); ++p) {
        if (domain[p] == Domain::pinned) continue;
        free_points.push_back(p);
        combinations *= domain[p] == Domain::all         ? plane.size()
                        : domain[p] == Domain::affine_chart ? static_cast<double>(q) * q
                                                            : static_cast<double>(q);
        if (combinations > cap) fail(ErrorCode::budget, "naive oracle: assignment space exceeds the cap");
    }

    auto leaf_ok = [&]() {
        for (PointSet line : s.lines()) {
            // two or fewer distinct images are always collinear
            int first = -1, second = -1;
            bool bad = false;
            for_each_point(line, [&](int p) {
                if (bad || second >= 0) return;
                if (first < 0)
                    first = images[p];
                else if (images[p] != first)
                    second = images[p];
            });
            if (second < 0) continue;
            ProjPlane::Coords l = plane.line_through(first, second);
            for_each_point(line, [&](int p) {
                if (!plane.on_line(l, images[p])) bad = true;
            });
            if (bad) return false;
        }
        if (strong) {
            for (int a = 1; a <= s.n(); ++a)
                for (int b = a + 1; b <= s.n(); ++b)
                    if (images[a] == images[b]) return false;
            for (int a = 1; a <= s.n(); ++a)
                for (int b = a + 1; b <= s.n(); ++b) {
                    ProjPlane::Coords l = plane.line_through(images[a], images[b]);
                    for (int c = b + 1; c <= s.n(); ++c) {
                        bool on = plane.on_line(l, images[c]);
                        bool combinatorial = is_collinear(s, points_to_set({a, b, c}));
                        if (on != combinatorial) return false;
                    }
                }
        }
        return true;
    };

    std::uint64_t total = 0;
    std::function<void(size_t)> rec = [&](size_t depth) {
        if (depth == free_points.size()) {
            if (leaf_ok()) ++total;
            return;
        }
        int v = free_points[depth];
        const int qi = static_cast<int>(q);
        int lo = 0, hi = plane.size();
        if (domain[v] == Domain::affine_chart) lo = qi + 1;
        if (domain[v] == Domain::w_chart) { lo = 1; hi = qi + 1; }
        for (int z = lo; z < hi; ++z) {
            images[v] = z;
            rec(depth + 1);
        }
        images[v] = -1;
    };
    rec(0);

    mpz_class count(static_cast<unsigned long>(total));
    if (mode == CountMode::strong_total) count *= pgl3_order(q);
    return {q, mode, count, elapsed_since(start)};
}

} // namespace lsreal

#ifndef LSREAL_TEST_FIXTURES_HPP
#define LSREAL_TEST_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "linear_space.hpp"

namespace lsreal::testing {

using Lines = std::vector<std::vector<int>>;

inline LinearSpace make_space(int n, const Lines& lines) {
    std::vector<PointSet> masks;
    for (const auto& line : lines) masks.push_back(points_to_set(line));
    return LinearSpace(n, std::move(masks));
}

inline CollinearityFamily make_family(int n, const Lines& members) {
    CollinearityFamily f{n, {}};
    for (const auto& m : members) f.members.push_back(points_to_set(m));
    return f;
}

inline LinearSpace fano() {
    return make_space(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {3, 4, 7}, {3, 5, 6}, {2, 5, 7}, {2, 4, 6}});
}

inline LinearSpace mobius_kantor() {
    return make_space(8, {{1, 2, 3}, {1, 4, 5}, {5, 6, 7}, {1, 7, 8}, {3, 5, 8}, {2, 6, 8}, {3, 4, 6}, {2, 4, 7}});
}

inline LinearSpace desargues() {
    return make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {8, 9, 10}, {2, 4, 8},
                           {3, 5, 8}, {2, 6, 9}, {3, 7, 9}, {4, 6, 10}, {5, 7, 10}});
}

// All labeled linear spaces on [n] (full-line families, pairwise meeting in
// at most one point), for small n. Brute force; used as closure/leq oracle.
inline std::vector<LinearSpace> all_labeled_spaces(int n) {
    std::vector<PointSet> candidates;
    for (PointSet m = 0; m <= full_set(n); ++m)
        if (set_size(m) >= 3) candidates.push_back(m);
    std::vector<LinearSpace> out;
    std::vector<PointSet> chosen;
    auto rec = [&](auto&& self, size_t start) -> void {
        out.push_back(LinearSpace(n, chosen));
        for (size_t i = start; i < candidates.size(); ++i) {
            bool ok = true;
            for (PointSet line : chosen)
                if (set_size(line & candidates[i]) >= 2) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(candidates[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace lsreal::testing

#endif

#include <doctest.h>

#include <set>

#include "counting.hpp"
#include "fixtures.hpp"
#include "scheme.hpp"

using namespace lsreal;
using namespace lsreal::testing;

namespace {

LinearSpace starfish() {
    return make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 8}, {1, 7, 9}, {2, 4, 10}, {2, 5, 9},
                           {2, 6, 7}, {3, 4, 6}, {4, 8, 9}, {6, 9, 10}, {3, 5, 7, 8, 10}});
}

LinearSpace anti_pappian() {
    return make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 6, 10}, {4, 9, 10}, {3, 6, 8},
                           {7, 8, 9}, {2, 4, 8}, {2, 5, 7}, {5, 6, 9}, {3, 7, 10}});
}

} // namespace

TEST_CASE("projective plane bookkeeping") {
    ProjPlane plane(3);
    CHECK(plane.size() == 13);
    // index/coords round trip
    for (int i = 0; i < plane.size(); ++i) CHECK(plane.index(plane.coords(i)) == i);
    // scaling does not change the point
    CHECK(plane.index({0, 2, 1}) == plane.index({0, 1, 2})); // (0,2,1) ~ (0,1,2)
    // every line has q+1 points
    auto l = plane.line_through(plane.index({1, 0, 0}), plane.index({0, 1, 0}));
    CHECK(plane.points_on_line(l).size() == 4);
    for (int z : plane.points_on_line(l)) CHECK(plane.on_line(l, z));
}

TEST_CASE("chart point counts match the census schemes") {
    Framing fano_fr = *identity_framing(fano());
    CHECK(count_chart_points(fano_fr, 2).count == 1);
    CHECK(count_chart_points(fano_fr, 3).count == 0);
    CHECK(count_chart_points(fano_fr, 5).count == 0);

    Framing mk_fr = *identity_framing(mobius_kantor());
    CHECK(count_chart_points(mk_fr, 3).count == 1);
    CHECK(count_chart_points(mk_fr, 5).count == 0);
    CHECK(count_chart_points(mk_fr, 7).count == 2);
    CHECK(count_chart_points(mk_fr, 11).count == 0);
    CHECK(count_chart_points(mk_fr, 13).count == 2);

    Framing star_fr = *identity_framing(starfish());
    CHECK(count_chart_points(star_fr, 11).count == 2);
    CHECK(count_chart_points(star_fr, 7).count == 0);
    CHECK(count_chart_points(star_fr, 5).count == 1);
}

TEST_CASE("framed strong counts of the Fano plane") {
    auto frame = first_combinatorial_frame(fano());
    REQUIRE(frame.has_value());
    CHECK(count_framed(fano(), *frame, 2, true).count == 1);
    CHECK(count_framed(fano(), *frame, 3, true).count == 0);
    CHECK(count_framed(fano(), *frame, 5, true).count == 0);
}

TEST_CASE("pgl3 order and strong totals") {
    CHECK(pgl3_order(2) == 168);
    CHECK(pgl3_order(3) == 5616);
    RealizationCount total = strong_total(fano(), 2);
    CHECK(total.count == 168);
    CHECK(strong_total(fano(), 3).count == 0);
}

TEST_CASE("strong total is frame independent") {
    for (std::uint64_t q : {2ull, 3ull}) {
        mpz_class reference = strong_total(fano(), q).count;
        int frames_checked = 0;
        for (int a = 1; a <= 7 && frames_checked < 8; ++a)
            for (int b = 1; b <= 7 && frames_checked < 8; ++b)
                for (int c = 1; c <= 7 && frames_checked < 8; ++c)
                    for (int d = 1; d <= 7 && frames_checked < 8; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        std::array<int, 4> frame{a, b, c, d};
                        if (!is_combinatorial_frame(fano(), frame)) continue;
                        CHECK(count_framed(fano(), frame, q, true).count * pgl3_order(q) == reference);
                        ++frames_checked;
                    }
        CHECK(frames_checked == 8);
    }
}

TEST_CASE("characteristic scans") {
    auto fano_scan = characteristic_scan(fano(), {2, 3, 5, 7, 11, 13});
    for (auto [p, realizable] : fano_scan) CHECK(realizable == (p == 2));

    auto mk_scan = characteristic_scan(mobius_kantor(), {2, 3, 5, 7, 13});
    CHECK(mk_scan[2] == false);
    CHECK(mk_scan[3] == true);
    CHECK(mk_scan[5] == false);
    CHECK(mk_scan[7] == true);
    CHECK(mk_scan[13] == true);

    auto star_scan = characteristic_scan(starfish(), {5, 7, 11, 13, 19});
    CHECK(star_scan[5] == true);
    CHECK(star_scan[7] == false);
    CHECK(star_scan[11] == true);
    CHECK(star_scan[13] == false);
    CHECK(star_scan[19] == true);
}

TEST_CASE("anti-pappian superfiguration has no strong realizations at small primes") {
    auto frame = first_combinatorial_frame(anti_pappian());
    REQUIRE(frame.has_value());
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        CHECK(count_framed(anti_pappian(), *frame, p, true).count == 0);
    }
}

TEST_CASE("unconstrained point contributes a full plane") {
    LinearSpace s(5, {});
    std::array<int, 4> frame{1, 2, 3, 4};
    CHECK(count_framed(s, frame, 2, false).count == 7);
    CHECK(naive_count_oracle(s, 2, CountMode::framed_weak, frame).count == 7);
}

TEST_CASE("optimized counters agree with the naive oracle on small spaces") {
    for (int n = 4; n <= 5; ++n) {
        for (const LinearSpace& s : all_labeled_spaces(n)) {
            auto frame = first_combinatorial_frame(s);
            if (!frame) continue;
            for (std::uint64_t q : {2ull, 3ull}) {
                for (bool strong : {false, true}) {
                    RealizationCount fast = count_framed(s, *frame, q, strong);
                    RealizationCount slow = naive_count_oracle(
                        s, q, strong ? CountMode::framed_strong : CountMode::framed_weak, *frame);
                    CHECK(fast.count == slow.count);
                }
            }
        }
    }
}

TEST_CASE("chart counter agrees with the naive oracle on framed catalog spaces") {
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        Framing fano_fr = *identity_framing(fano());
        CHECK(count_chart_points(fano_fr, q).count ==
              naive_count_oracle(fano(), q, CountMode::chart, std::nullopt, &fano_fr).count);
        Framing mk_fr = *identity_framing(mobius_kantor());
        CHECK(count_chart_points(mk_fr, q).count ==
              naive_count_oracle(mobius_kantor(), q, CountMode::chart, std::nullopt, &mk_fr).count);
    }
}

TEST_CASE("naive oracle rejects oversized assignments") {
    LinearSpace s(10, {});
    std::array<int, 4> frame{1, 2, 3, 4};
    CHECK_THROWS_AS(naive_count_oracle(s, 31, CountMode::framed_weak, frame), Error);
}

TEST_CASE("strong realizations project through glynn reduction") {
    // two full lines through point 5; removing point 5 leaves no full lines
    LinearSpace s = make_space(5, {{1, 2, 5}, {3, 4, 5}});
    GlynnStep step = glynn_reduce_at(s, 5);
    CHECK(step.fiber_codim == 2);
    std::uint64_t q = 5;
    std::array<int, 4> frame{1, 2, 3, 4};

    std::vector<std::vector<int>> solutions;
    SolutionSink sink = [&](const std::vector<int>& images) { solutions.push_back(images); };
    RealizationCount full = count_framed(s, frame, q, true, sink);
    CHECK(full.count == solutions.size());
    CHECK(full.count > 0);

    // projections are strong realizations of the reduced space, and each
    // fiber has at most one extension (N = 2 means a point, P^0)
    std::set<std::vector<int>> projections;
    for (const auto& sol : solutions) {
        std::vector<int> proj(sol.begin(), sol.end() - 1);
        CHECK(projections.insert(proj).second); // fiber size <= 1
    }
    RealizationCount reduced = count_framed(step.reduced, frame, q, true);
    CHECK(projections.size() <= static_cast<unsigned long>(reduced.count.get_ui()));
}

#include <doctest.h>

#include <set>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "fixtures.hpp"

using namespace lsreal;
using namespace lsreal::testing;

TEST_CASE("linear space counts up to 8 points") {
    const int expected[] = {0, 1, 1, 2, 3, 5, 10, 24, 69};
    for (int n = 1; n <= 8; ++n) {
        std::vector<LinearSpace> spaces = enumerate_linear_spaces(n, false);
        CHECK(static_cast<int>(spaces.size()) == expected[n]);
        std::set<std::vector<std::uint32_t>> codes;
        for (const LinearSpace& s : spaces) codes.insert(canonical_form(s).code);
        CHECK(codes.size() == spaces.size());
    }
}

TEST_CASE("three-point spaces are the triangle and the full line") {
    std::vector<LinearSpace> spaces = enumerate_linear_spaces(3, false);
    REQUIRE(spaces.size() == 2);
    CHECK(((spaces[0] == LinearSpace(3, {}) && spaces[1] == make_space(3, {{1, 2, 3}})) ||
           (spaces[1] == LinearSpace(3, {}) && spaces[0] == make_space(3, {{1, 2, 3}}))));
}

TEST_CASE("superfiguration filter: counts for n <= 8") {
    CHECK(enumerate_linear_spaces(6, true).empty());
    std::vector<LinearSpace> seven = enumerate_linear_spaces(7, true);
    REQUIRE(seven.size() == 1);
    CHECK(isomorphism_witness(seven[0], fano()).has_value());
    std::vector<LinearSpace> eight = enumerate_linear_spaces(8, true);
    REQUIRE(eight.size() == 1);
    CHECK(isomorphism_witness(eight[0], mobius_kantor()).has_value());
}

TEST_CASE("is_superfiguration") {
    CHECK(is_superfiguration(fano()));
    CHECK(!is_superfiguration(make_space(4, {{1, 2, 3, 4}})));
    // Desargues minus the line {8,9,10}: points 8,9,10 drop to 2 full lines
    LinearSpace s1 = make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 8}, {3, 5, 8},
                                     {2, 6, 9}, {3, 7, 9}, {4, 6, 10}, {5, 7, 10}});
    CHECK(!is_superfiguration(s1));
}

TEST_CASE("glynn reduction on the two-line five-point space") {
    LinearSpace s = make_space(5, {{1, 2, 5}, {3, 4, 5}});

    GlynnStep at5 = glynn_reduce_at(s, 5);
    CHECK(at5.fiber_codim == 2);
    CHECK(at5.reduced == LinearSpace(4, {}));

    GlynnStep at1 = glynn_reduce_at(s, 1);
    CHECK(at1.fiber_codim == 1);
    CHECK(at1.reduced == make_space(4, {{2, 3, 4}}));

    // automatic choice removes the lowest-degree, lowest-index point
    auto step = glynn_reduce(s);
    REQUIRE(step.has_value());
    CHECK(step->removed_point == 1);
    CHECK(step->fiber_codim == 1);

    CHECK_THROWS_AS(glynn_reduce_at(s, 6), Error);
}

TEST_CASE("glynn reduction of an unconstrained point has codimension 0") {
    LinearSpace s = LinearSpace(4, {});
    auto step = glynn_reduce(s);
    REQUIRE(step.has_value());
    CHECK(step->fiber_codim == 0);
    CHECK(step->removed_point == 1);
}

TEST_CASE("superfigurations do not reduce") {
    CHECK(!glynn_reduce(fano()).has_value());
    CHECK_THROWS_AS(glynn_reduce(LinearSpace(1, {})), Error);
}

TEST_CASE("full reduction reaches a superfiguration or a point") {
    LinearSpace s = make_space(5, {{1, 2, 5}, {3, 4, 5}});
    GlynnTrace trace = glynn_reduce_fully(s);
    CHECK(trace.result.n() == 1);
    CHECK(trace.steps.size() == 4);

    GlynnTrace fixed = glynn_reduce_fully(fano());
    CHECK(fixed.steps.empty());
    CHECK(fixed.result == fano());
}

TEST_CASE("reduction then re-adding an unconstrained point sits below the original") {
    for (const LinearSpace& s : {make_space(5, {{1, 2, 5}, {3, 4, 5}}), make_space(6, {{1, 2, 3, 4}})}) {
        auto step = glynn_reduce(s);
        REQUIRE(step.has_value());
        // rebuild on the original point set with the removed point isolated
        std::vector<PointSet> lines;
        for (PointSet line : step->reduced.lines()) {
            PointSet original = 0;
            for_each_point(line, [&](int p) { original = with_point(original, step->old_labels[p - 1]); });
            lines.push_back(original);
        }
        CHECK(leq(LinearSpace(s.n(), lines), s));
    }
}

TEST_CASE("find_v_frame picks the first constructive frame") {
    VFrame f = find_v_frame(fano());
    CHECK(f.points == std::array<int, 5>{1, 2, 3, 4, 5});
    VFrame m = find_v_frame(mobius_kantor());
    CHECK(m.points == std::array<int, 5>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(find_v_frame(make_space(4, {{1, 2, 3, 4}})), Error);
}

TEST_CASE("frame_ordering on the Fano plane keeps the identity") {
    Framing fr = frame_ordering(fano(), find_v_frame(fano()));
    CHECK(fr.n_prime == 2);
    CHECK(fr.n_doubleprime == 0);
    CHECK(fr.space == fano());
}

TEST_CASE("frame_ordering sends long-line points to the tail") {
    // 8 points with a 4-point line through {1,2,3}: point 6 on it must move last
    LinearSpace s = make_space(8, {{1, 2, 3, 6}, {1, 4, 5}, {2, 4, 7}, {3, 5, 7}, {6, 7, 8}, {2, 5, 8}});
    Framing fr = frame_ordering(s, VFrame{{1, 2, 3, 4, 5}});
    CHECK(fr.n_doubleprime == 1);
    CHECK(fr.n_prime == 8 - 5 - 1);
    CHECK(fr.ordering[5] == 8); // old point 6 becomes the last label
    CHECK(identity_framing(fr.space).has_value());
}

TEST_CASE("identity framing recognized only when the ordering fits") {
    CHECK(identity_framing(fano()).has_value());
    CHECK(identity_framing(mobius_kantor()).has_value());
    CHECK(identity_framing(desargues()).has_value());
    // frame points reordered: {1,2,3} no longer collinear
    LinearSpace moved = relabel(fano(), {1, 4, 3, 2, 5, 6, 7});
    CHECK(!identity_framing(moved).has_value());
    Framing pref = preferred_framing(moved);
    CHECK(pref.n_prime == 2);
    CHECK(pref.n_doubleprime == 0);
}

TEST_CASE("v-frames exist for every superfiguration with 9 points") {
    for (const LinearSpace& s : enumerate_linear_spaces(9, true)) {
        std::vector<VFrame> frames = all_v_frames(s);
        CHECK(!frames.empty());
        for (const VFrame& vf : frames) check_v_frame(s, vf);
        Framing fr = frame_ordering(s, find_v_frame(s));
        CHECK(fr.n_prime + fr.n_doubleprime + 5 == 9);
        CHECK(identity_framing(fr.space).has_value());
    }
}

#include <doctest.h>

#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "canonical.hpp"
#include "catalog.hpp"
#include "census.hpp"
#include "counting.hpp"
#include "fixtures.hpp"
#include "scheme.hpp"

using namespace lsreal;
using namespace lsreal::testing;

namespace {

// solutions of a polynomial system over F_p by full enumeration
std::uint64_t brute_force_solutions(const std::vector<PolyQ>& gens, int nvars, std::uint64_t p) {
    PrimeField field(p);
    std::vector<PolyFp> reduced;
    {
        IdealQ ideal;
        ideal.ring.vars.assign(nvars, "v");
        ideal.generators = gens;
        reduced = reduce_ideal_mod_p(ideal, field);
    }
    std::vector<std::uint64_t> point(nvars, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const PolyFp& g : reduced)
            if (poly_evaluate(g, point, field) != 0) { ok = false; break; }
        if (ok) ++count;
        int pos = 0;
        while (pos < nvars && ++point[pos] == p) point[pos++] = 0;
        if (pos == nvars) break;
    }
    return count;
}

} // namespace

TEST_CASE("elimination preserves F_p solution counts") {
    for (const LinearSpace& s : {mobius_kantor(), fano()}) {
        Framing framing = *identity_framing(s);
        DetIdeal det = build_ideal(framing);
        EliminationResult elim = eliminate_linear_variables(det.ideal);
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
            std::uint64_t before = brute_force_solutions(det.ideal.generators, det.ideal.ring.nvars(), p);
            std::uint64_t after =
                brute_force_solutions(elim.ideal.generators, elim.ideal.ring.nvars(), p);
            CHECK(before == after);
        }
    }
}

TEST_CASE("chart counts equal brute-force ideal solutions") {
    Framing framing = *identity_framing(mobius_kantor());
    DetIdeal det = build_ideal(framing);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        std::uint64_t direct = brute_force_solutions(det.ideal.generators, det.ideal.ring.nvars(), p);
        CHECK(count_chart_points(framing, p).count == direct);
    }
}

TEST_CASE("strong counts never exceed weak counts") {
    for (int n = 4; n <= 6; ++n)
        for (const LinearSpace& s : all_labeled_spaces(n)) {
            auto frame = first_combinatorial_frame(s);
            if (!frame) continue;
            for (std::uint64_t q : {2ull, 3ull}) {
                CHECK(count_framed(s, *frame, q, true).count <= count_framed(s, *frame, q, false).count);
            }
        }
}

TEST_CASE("strong realizations project through the reduction with small fibers") {
    const std::uint64_t q = 3;
    for (int n = 5; n <= 6; ++n) {
        for (const LinearSpace& s : all_labeled_spaces(n)) {
            if (is_superfiguration(s)) continue;
            auto step = glynn_reduce(s);
            REQUIRE(step.has_value());

            // pick a frame that survives the deletion
            std::optional<std::array<int, 4>> frame;
            for (int a = 1; a <= s.n() && !frame; ++a)
                for (int b = a + 1; b <= s.n() && !frame; ++b)
                    for (int c = b + 1; c <= s.n() && !frame; ++c)
                        for (int d = c + 1; d <= s.n() && !frame; ++d) {
                            std::array<int, 4> candidate{a, b, c, d};
                            bool uses_removed = a == step->removed_point || b == step->removed_point ||
                                                c == step->removed_point || d == step->removed_point;
                            if (!uses_removed && is_combinatorial_frame(s, candidate)) frame = candidate;
                        }
            if (!frame) continue;

            std::vector<std::vector<int>> solutions;
            SolutionSink sink = [&](const std::vector<int>& images) { solutions.push_back(images); };
            count_framed(s, *frame, q, true, sink);

            // reduced-space solutions, keyed by image tuple
            std::array<int, 4> reduced_frame{};
            for (int i = 0; i < 4; ++i) {
                for (size_t k = 0; k < step->old_labels.size(); ++k)
                    if (step->old_labels[k] == (*frame)[i]) reduced_frame[i] = static_cast<int>(k) + 1;
            }
            std::set<std::vector<int>> reduced_solutions;
            SolutionSink collect = [&](const std::vector<int>& images) { reduced_solutions.insert(images); };
            count_framed(step->reduced, reduced_frame, q, true, collect);

            std::map<std::vector<int>, int> fiber;
            for (const auto& solution : solutions) {
                std::vector<int> projected;
                for (int old_label : step->old_labels) projected.push_back(solution[old_label - 1]);
                CHECK(reduced_solutions.count(projected));
                ++fiber[projected];
            }
            // a fiber sits inside a projective subspace of dimension 2 - N
            const std::uint64_t bound[] = {q * q + q + 1, q + 1, 1};
            for (auto& [proj, size] : fiber) CHECK(static_cast<std::uint64_t>(size) <= bound[step->fiber_codim]);
        }
    }
}

TEST_CASE("enumeration is identical for any worker count") {
    for (int n : {6, 7}) {
        std::vector<LinearSpace> one = enumerate_linear_spaces(n, false, 1);
        std::vector<LinearSpace> two = enumerate_linear_spaces(n, false, 2);
        std::vector<LinearSpace> four = enumerate_linear_spaces(n, false, 4);
        CHECK(one == two);
        CHECK(one == four);
    }
}

TEST_CASE("certificates agree across 1000 random relabelings") {
    std::mt19937 rng(1009);
    int trials = 0;
    while (trials < 1000) {
        int n = 4 + static_cast<int>(rng() % 5); // up to 8 points
        CollinearityFamily family{n, {}};
        int members = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < members; ++i) family.members.push_back(rng() & full_set(n));
        LinearSpace s = closure(family);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(s).code == canonical_form(relabel(s, perm)).code);
        ++trials;
    }
}

TEST_CASE("a starfish frame along the five-point line has trailing points") {
    LinearSpace star = make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 8}, {1, 7, 9}, {2, 4, 10},
                                       {2, 5, 9}, {2, 6, 7}, {3, 4, 6}, {4, 8, 9}, {6, 9, 10},
                                       {3, 5, 7, 8, 10}});
    // v-frame with the collinear triple inside the five-point line
    VFrame vf{{3, 5, 7, 1, 2}};
    Framing framing = frame_ordering(star, vf);
    CHECK(framing.n_doubleprime == 2);
    CHECK(framing.n_prime == 3);
    DetIdeal det = build_ideal(framing);
    // all C(5,3) triples of the five-point line are now identically zero,
    // plus the one from the other frame line
    CHECK(det.determinants_total == 20);
    CHECK(det.determinants_trivial == 11);
    // the framed scheme still has the same chart count at a split prime
    SchemeAnalysis analysis = analyze_framing(framing);
    CHECK(analysis.krull_dim >= 0);
}

TEST_CASE("every ten-point superfiguration frames with nothing trailing") {
    // a frame with n' = n - 5 exists for each, and the constructive frame is valid
    std::vector<LinearSpace> superfigs = enumerate_linear_spaces(10, true);
    REQUIRE(superfigs.size() == 151);
    // ten of them are configurations (every point on exactly three lines,
    // every line with exactly three points), leaving 141 others
    int configurations = 0;
    for (const LinearSpace& s : superfigs) {
        bool exact = true;
        for (int p = 1; p <= s.n() && exact; ++p) exact = s.point_degree(p) == 3;
        for (PointSet line : s.lines())
            if (set_size(line) != 3) exact = false;
        if (exact) ++configurations;
    }
    CHECK(configurations == 10);
    for (const LinearSpace& s : superfigs) {
        VFrame vf = find_v_frame(s);
        check_v_frame(s, vf);
        bool has_plain_frame = false;
        for (const VFrame& candidate : all_v_frames(s)) {
            Framing framing = frame_ordering(s, candidate);
            if (framing.n_doubleprime == 0) { has_plain_frame = true; break; }
        }
        CHECK(has_plain_frame);
    }
}

TEST_CASE("ten-point catalog superfigurations appear in the enumeration") {
    std::set<std::vector<std::uint32_t>> codes;
    for (const LinearSpace& s : enumerate_linear_spaces(10, true))
        codes.insert(canonical_form(s).code);
    const std::string dir = default_catalog_dir();
    for (const std::string& name : catalog_names(dir)) {
        CatalogEntry entry = catalog_get(dir, name);
        if (entry.space.n() != 10 || !is_superfiguration(entry.space)) continue;
        CHECK(codes.count(canonical_form(entry.space).code));
    }
}

TEST_CASE("census rows cache and rerun identically") {
    namespace fs = std::filesystem;
    fs::path cache = fs::temp_directory_path() / "lsreal-census-cache-test";
    fs::remove_all(cache);

    CensusOptions options;
    options.n = 8;
    options.cache_dir = cache.string();
    std::vector<CensusRow> first = run_census(options);
    REQUIRE(first.size() == 1); // the unique 8-point superfiguration
    CHECK(!fs::is_empty(cache));
    std::vector<CensusRow> second = run_census(options);
    REQUIRE(second.size() == first.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].to_json() == second[i].to_json());
        CHECK(CensusRow::from_json(first[i].to_json()).to_json() == first[i].to_json());
    }
    CHECK(first[0].krull_dim == 0);
    CHECK(first[0].quotient_dim == 2);
    fs::remove_all(cache);
}

TEST_CASE("determinant totals follow the line sizes") {
    for (const LinearSpace& s : {fano(), desargues(),
                                 make_space(10, {{1, 2, 3}, {1, 4, 5}, {1, 6, 8}, {1, 7, 9}, {2, 4, 10},
                                                 {2, 5, 9}, {2, 6, 7}, {3, 4, 6}, {4, 8, 9}, {6, 9, 10},
                                                 {3, 5, 7, 8, 10}})}) {
        Framing framing = preferred_framing(s);
        DetIdeal det = build_ideal(framing);
        int expected = 0;
        for (PointSet line : s.lines()) {
            int k = set_size(line);
            expected += k * (k - 1) * (k - 2) / 6;
        }
        CHECK(det.determinants_total == expected);
    }
}

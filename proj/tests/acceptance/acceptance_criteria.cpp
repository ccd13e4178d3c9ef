// Acceptance suite: one test case per criterion, each printing a pass line.
// Assertions use REQUIRE so a failed criterion stops at its first defect.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>
#include <cstdio>
#include <set>

#include "catalog.hpp"
#include "census.hpp"
#include "counting.hpp"
#include "fixtures.hpp"
#include "jsonio.hpp"
#include "poly_text.hpp"
#include "scheme.hpp"
#include "univariate.hpp"

using namespace lsreal;
using namespace lsreal::testing;

namespace {

const RationalField Q;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void pass_line(int criterion, const std::string& what, double seconds) {
    std::printf("criterion %d: pass  (%s, %.1fs)\n", criterion, what.c_str(), seconds);
    std::fflush(stdout);
}

LinearSpace catalog_space(const std::string& name) {
    return catalog_get(default_catalog_dir(), name).space;
}

UnivarQ univar(std::initializer_list<long> ascending) {
    UnivarQ f;
    for (long c : ascending) f.push_back(mpq_class(c));
    return f;
}

bool matches_listed(const UnivarQ& factor, const UnivarQ& listed) {
    if (uq_degree(factor) != uq_degree(listed)) return false;
    return affine_equivalent(factor, listed) || same_field_fingerprint(factor, listed);
}

} // namespace

TEST_CASE("criterion 1: enumeration counts reproduce the table") {
    Timer timer;
    const int expected_spaces[] = {0, 1, 1, 2, 3, 5, 10, 24, 69, 384, 5250};
    const int expected_superfigs[] = {0, 0, 0, 0, 0, 0, 0, 1, 1, 10, 151};
    for (int n = 1; n <= 10; ++n) {
        std::vector<LinearSpace> all = enumerate_linear_spaces(n, false);
        REQUIRE(static_cast<int>(all.size()) == expected_spaces[n]);
        int superfigs = 0;
        for (const LinearSpace& s : all)
            if (is_superfiguration(s)) ++superfigs;
        REQUIRE(superfigs == expected_superfigs[n]);
    }
    REQUIRE(timer.seconds() < 900.0);
    pass_line(1, "1,1,2,3,5,10,24,69,384,5250 spaces; 1,1,10,151 superfigurations", timer.seconds());
}

TEST_CASE("criterion 2: the fano pipeline") {
    Timer timer;
    LinearSpace fano_space = catalog_space("fano");
    Framing framing = *identity_framing(fano_space);
    DetIdeal det = build_ideal(framing);
    REQUIRE(det.ideal.generators.size() == 5);
    std::vector<PolyQ> expected = {
        poly_from_text("-y1 + y2 + z1 - z2", det.ideal.ring), poly_from_text("y1 - 1", det.ideal.ring),
        poly_from_text("y2", det.ideal.ring), poly_from_text("-z2 + 1", det.ideal.ring),
        poly_from_text("z1", det.ideal.ring)};
    for (const PolyQ& want : expected) {
        bool found = false;
        for (const PolyQ& g : det.ideal.generators)
            if (poly_equal(g, want) || poly_equal(poly_neg(g, Q), want)) { found = true; break; }
        REQUIRE(found);
    }

    StepBudget budget;
    MonomialOrder order = MonomialOrder::make_degrevlex(det.ideal.ring.nvars());
    GroebnerBasis<RationalField> gb = buchberger(det.ideal.generators, Q, order, budget);
    REQUIRE(gb.is_unit());

    REQUIRE(count_chart_points(framing, 2).count == 1);

    auto scan = characteristic_scan(fano_space, {2, 3, 5, 7, 11, 13});
    for (auto [p, realizable] : scan) REQUIRE(realizable == (p == 2));
    pass_line(2, "5 generators, unit ideal over Q, one F_2 point, characteristic 2 only",
              timer.seconds());
}

TEST_CASE("criterion 3: mobius-kantor eliminant and chart counts") {
    Timer timer;
    LinearSpace mk = catalog_space("mobius-kantor");
    Framing framing = *identity_framing(mk);
    SchemeAnalysis analysis = analyze_framing(framing);
    REQUIRE(analysis.krull_dim == 0);
    REQUIRE(analysis.quotient_dim == 2);

    UnivarQ relation = univar({1, -1, 1}); // z^2 - z + 1
    UnivarZ relation_z = uz_from_q(relation);
    const std::uint64_t primes[] = {3, 5, 7, 11, 13};
    const int expected_roots[] = {1, 0, 2, 0, 2};
    for (int i = 0; i < 5; ++i) {
        // root count by direct modular search
        int direct = static_cast<int>(roots_mod_p(relation_z, primes[i]).size());
        REQUIRE(direct == expected_roots[i]);
        REQUIRE(count_chart_points(framing, primes[i]).count == direct);
    }
    pass_line(3, "quotient dimension 2; chart counts 1,0,2,0,2 at p = 3,5,7,11,13", timer.seconds());
}

TEST_CASE("criterion 4: dimensions of the classical schemes") {
    Timer timer;
    {
        Timer each;
        BestFramingAnalysis pappus = analyze_space(catalog_space("pappus"));
        REQUIRE(pappus.analysis.krull_dim == 2);
        REQUIRE(each.seconds() < 60.0);
    }
    {
        Timer each;
        BestFramingAnalysis desargues = analyze_space(catalog_space("desargues"));
        REQUIRE(desargues.analysis.krull_dim == 3);
        REQUIRE(each.seconds() < 60.0);
    }
    {
        Timer each;
        BestFramingAnalysis special = analyze_space(catalog_space("special-desargues"));
        REQUIRE(special.analysis.krull_dim >= 2);
        REQUIRE(each.seconds() < 60.0);
    }
    pass_line(4, "pappus 2, desargues 3, special desargues >= 2", timer.seconds());
}

TEST_CASE("criterion 5: eliminants of the rigid ten-point superfigurations") {
    Timer timer;

    auto has_factor = [](const SchemeAnalysis& analysis, const UnivarQ& listed) {
        for (const auto& [var, mp] : analysis.minimal_polys)
            for (const UnivarQ& factor : factor_squarefree_rational(uq_squarefree_part(mp)))
                if (matches_listed(factor, listed)) return true;
        return false;
    };

    {
        BestFramingAnalysis best = analyze_space(catalog_space("cubic-field"));
        const SchemeAnalysis& a = best.analysis;
        REQUIRE(a.krull_dim == 0);
        REQUIRE(a.quotient_dim == 3);
        UnivarQ cubic = univar({1, 1, -1, 1}); // x^3 - x^2 + x + 1
        REQUIRE(has_factor(a, cubic));
        UnivarZ cubic_z = uz_from_q(cubic);
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
            int direct = static_cast<int>(roots_mod_p(cubic_z, p).size());
            REQUIRE(count_chart_points(a.framing, p).count == direct);
        }
    }
    {
        BestFramingAnalysis best = analyze_space(catalog_space("cyclotomic-ten"));
        const SchemeAnalysis& a = best.analysis;
        REQUIRE(a.krull_dim == 0);
        UnivarQ quartic = univar({1, -1, 1, -1, 1}); // x^4 - x^3 + x^2 - x + 1
        REQUIRE(has_factor(a, quartic));
        UnivarZ quartic_z = uz_from_q(quartic);
        for (std::uint64_t p : {3ull, 7ull, 11ull, 13ull, 31ull}) {
            int direct = static_cast<int>(roots_mod_p(quartic_z, p).size());
            REQUIRE(count_chart_points(a.framing, p).count == direct);
        }
    }
    {
        BestFramingAnalysis best = analyze_space(catalog_space("starfish"));
        const SchemeAnalysis& a = best.analysis;
        REQUIRE(a.krull_dim == 0);
        REQUIRE(a.quotient_dim == 2);
        UnivarQ quadratic = univar({-1, 1, 1}); // x^2 + x - 1
        REQUIRE(has_factor(a, quadratic));
        auto scan = characteristic_scan(catalog_space("starfish"),
                                        {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
        for (auto [p, realizable] : scan) {
            bool expected = (p == 5) || (p % 5 == 1) || (p % 5 == 4);
            REQUIRE(realizable == expected);
        }
    }
    pass_line(5, "cubic, quartic, and sqrt(5) eliminants with matching point counts", timer.seconds());
}

TEST_CASE("criterion 6: the anti-pappian superfiguration is unrealizable") {
    Timer timer;
    LinearSpace anti = catalog_space("anti-pappian");
    auto frame = first_combinatorial_frame(anti);
    REQUIRE(frame.has_value());
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        REQUIRE(count_framed(anti, *frame, p, true).count == 0);
    REQUIRE(timer.seconds() < 60.0);
    pass_line(6, "framed-strong count 0 for every prime up to 31", timer.seconds());
}

TEST_CASE("criterion 7: census of zero-dimensional minimal polynomials") {
    Timer timer;
    CensusOptions options;
    options.n = 10;
    std::vector<CensusRow> rows = run_census(options);
    REQUIRE(rows.size() == 151);

    const std::vector<UnivarQ> listed = {
        univar({-2, 0, 1}),        // x^2 - 2
        univar({-5, 0, 1}),        // x^2 - 5
        univar({1, 0, 1}),         // x^2 + 1
        univar({3, 0, 1}),         // x^2 + 3
        univar({7, 0, 1}),         // x^2 + 7
        univar({-1, -1, 0, 1}),    // x^3 - x - 1
        univar({1, 1, -1, 1}),     // x^3 - x^2 + x + 1
        univar({-1, 6, -5, 1}),    // x^3 - 5x^2 + 6x - 1
        univar({1, -1, 1, -1, 1}), // x^4 - x^3 + x^2 - x + 1
    };

    Ring xring;
    xring.vars = {"x"};
    std::vector<bool> covered(listed.size(), false);
    int zero_dimensional = 0;
    for (const CensusRow& row : rows) {
        if (row.krull_dim != 0) continue;
        ++zero_dimensional;
        for (const std::string& text : row.eliminant_factors) {
            PolyQ p = poly_from_text(text, xring);
            UnivarQ factor;
            for (const auto& t : p.terms) {
                size_t deg = t.m.e[0];
                if (factor.size() <= deg) factor.resize(deg + 1, mpq_class(0));
                factor[deg] = t.c;
            }
            if (uq_degree(factor) <= 1) continue;
            bool contained = false;
            for (size_t i = 0; i < listed.size(); ++i) {
                if (matches_listed(factor, listed[i])) {
                    covered[i] = true;
                    contained = true;
                    break;
                }
            }
            INFO("census factor outside the expected list: ", text);
            REQUIRE(contained);
        }
    }
    REQUIRE(zero_dimensional > 0);
    // every listed polynomial of degree >= 3 occurs
    for (size_t i = 0; i < listed.size(); ++i) {
        if (uq_degree(listed[i]) < 3) continue;
        INFO("missing listed eliminant index ", i);
        REQUIRE(covered[i]);
    }
    REQUIRE(timer.seconds() < 7200.0);
    pass_line(7, "all census eliminant fields in the expected list; every cubic and the quartic occur",
              timer.seconds());
}

TEST_CASE("criterion 8: oracle suites") {
    Timer timer;

    // realization counters against the exhaustive oracle, all spaces with n <= 6
    for (int n = 4; n <= 6; ++n) {
        for (const LinearSpace& s : all_labeled_spaces(n)) {
            auto frame = first_combinatorial_frame(s);
            if (!frame) continue;
            for (std::uint64_t q : {2ull, 3ull}) {
                for (bool strong : {false, true}) {
                    RealizationCount fast = count_framed(s, *frame, q, strong);
                    RealizationCount slow = naive_count_oracle(
                        s, q, strong ? CountMode::framed_strong : CountMode::framed_weak, *frame);
                    REQUIRE(fast.count == slow.count);
                }
            }
        }
    }

    // closure against the brute-force minimum over every labeled linear space
    for (int n = 3; n <= 5; ++n) {
        std::vector<PointSet> members;
        for (PointSet m = 0; m <= full_set(n); ++m)
            if (set_size(m) >= 3) members.push_back(m);
        std::vector<LinearSpace> spaces = all_labeled_spaces(n);
        const std::uint32_t limit = 1u << members.size();
        for (std::uint32_t bits = 0; bits < limit; ++bits) {
            CollinearityFamily family{n, {}};
            for (size_t i = 0; i < members.size(); ++i)
                if ((bits >> i) & 1) family.members.push_back(members[i]);
            LinearSpace closed = closure(family);
            bool closed_is_above = true;
            for (PointSet m : family.members)
                if (!is_collinear(closed, m)) closed_is_above = false;
            REQUIRE(closed_is_above);
            for (const LinearSpace& t : spaces) {
                bool above = true;
                for (PointSet m : family.members)
                    if (!is_collinear(t, m)) { above = false; break; }
                if (above) REQUIRE(leq(closed, t));
            }
        }
    }

    // buchberger postconditions on 500 randomized small ideals
    {
        MonomialOrder degrevlex = MonomialOrder::make_degrevlex(3);
        MonomialOrder lex = MonomialOrder::make_lex(3);
        std::mt19937 rng(20260809);
        auto random_poly = [&](int max_terms) {
            PolyQ p;
            int terms = 1 + static_cast<int>(rng() % max_terms);
            for (int t = 0; t < terms; ++t) {
                Monomial m = Monomial::one();
                for (int i = 0; i < 3; ++i) {
                    int e = static_cast<int>(rng() % 3);
                    if (e) m = m.times(Monomial::var(i, e));
                }
                long c = static_cast<long>(rng() % 7) - 3;
                if (!c) c = 1;
                p.terms.push_back({m, mpq_class(c)});
            }
            poly_normalize(p, Q, degrevlex);
            return p;
        };
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<PolyQ> gens = {random_poly(3), random_poly(3)};
            StepBudget budget{50'000'000};
            GroebnerBasis<RationalField> gb, gb_lex;
            try {
                gb = buchberger(gens, Q, degrevlex, budget);
                gb_lex = buchberger(gens, Q, lex, budget);
            } catch (const Error& e) {
                REQUIRE(e.code() == ErrorCode::budget);
                continue;
            }
            for (const PolyQ& g : gens)
                REQUIRE(normal_form(g, gb.elements, Q, degrevlex, budget).is_zero());
            for (size_t i = 0; i < gb.elements.size(); ++i)
                for (size_t j = i + 1; j < gb.elements.size(); ++j) {
                    PolyQ s = s_polynomial(gb.elements[i], gb.elements[j], Q, degrevlex);
                    REQUIRE(normal_form(s, gb.elements, Q, degrevlex, budget).is_zero());
                }
            PolyQ probe = random_poly(4);
            bool in_degrevlex = normal_form(probe, gb.elements, Q, degrevlex, budget).is_zero();
            PolyQ probe_lex = probe;
            poly_normalize(probe_lex, Q, lex);
            bool in_lex = normal_form(probe_lex, gb_lex.elements, Q, lex, budget).is_zero();
            REQUIRE(in_degrevlex == in_lex);
        }
    }

    REQUIRE(timer.seconds() < 600.0);
    pass_line(8, "counting, closure, and basis oracles all agree", timer.seconds());
}

TEST_CASE("criterion 9: PGL3 consistency across every frame") {
    Timer timer;
    for (const std::string& name : {std::string("fano"), std::string("mobius-kantor")}) {
        LinearSpace s = catalog_space(name);
        for (std::uint64_t q : {2ull, 3ull, 7ull}) {
            mpz_class reference = strong_total(s, q).count;
            int frames = 0;
            for (int a = 1; a <= s.n(); ++a)
                for (int b = 1; b <= s.n(); ++b)
                    for (int c = 1; c <= s.n(); ++c)
                        for (int d = 1; d <= s.n(); ++d) {
                            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                            std::array<int, 4> frame{a, b, c, d};
                            if (!is_combinatorial_frame(s, frame)) continue;
                            mpz_class total = count_framed(s, frame, q, true).count * pgl3_order(q);
                            REQUIRE(total == reference);
                            ++frames;
                        }
            REQUIRE(frames > 0);
        }
    }
    pass_line(9, "strong-total = framed-strong x |PGL3|, frame independent at q = 2,3,7",
              timer.seconds());
}

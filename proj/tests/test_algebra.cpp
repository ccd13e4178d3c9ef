#include <doctest.h>

#include <numeric>
#include <random>

#include "poly.hpp"
#include "poly_text.hpp"
#include "ring.hpp"

using namespace lsreal;

namespace {

const RationalField Q;

PolyQ parse(const std::string& text, const Ring& ring) { return poly_from_text(text, ring); }

Ring yz_ring() { return framed_ring(2, 0); } // y1 y2 z1 z2

Monomial random_monomial(std::mt19937& rng, int nvars, int max_exp) {
    Monomial m = Monomial::one();
    for (int i = 0; i < nvars; ++i) {
        int e = static_cast<int>(rng() % (max_exp + 1));
        if (e) m = m.times(Monomial::var(i, e));
    }
    return m;
}

PolyQ random_poly(std::mt19937& rng, int nvars, const MonomialOrder& order) {
    PolyQ p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 4);
        mpq_class c(num, den);
        c.canonicalize();
        p.terms.push_back({random_monomial(rng, nvars, 3), c});
    }
    poly_normalize(p, Q, order);
    return p;
}

} // namespace

TEST_CASE("basic product identity") {
    Ring ring = yz_ring();
    MonomialOrder order = MonomialOrder::make_degrevlex(ring.nvars());
    PolyQ lhs = poly_mul(parse("y1 - 1", ring), parse("y1 + 1", ring), Q, order);
    CHECK(poly_equal(lhs, parse("y1^2 - 1", ring)));
}

TEST_CASE("evaluation at a rational point") {
    Ring ring = yz_ring();
    PolyQ f = parse("-y1 + y2 + z1 - z2", ring);
    std::vector<mpq_class> point = {1, 0, 0, 1}; // y1, y2, z1, z2
    CHECK(poly_evaluate(f, point, Q) == -2);
}

TEST_CASE("distributivity on random polynomials") {
    std::mt19937 rng(2024);
    MonomialOrder order = MonomialOrder::make_degrevlex(4);
    for (int trial = 0; trial < 200; ++trial) {
        PolyQ f = random_poly(rng, 4, order);
        PolyQ g = random_poly(rng, 4, order);
        PolyQ h = random_poly(rng, 4, order);
        PolyQ lhs = poly_mul(poly_add(f, g, Q, order), h, Q, order);
        PolyQ rhs = poly_add(poly_mul(f, h, Q, order), poly_mul(g, h, Q, order), Q, order);
        CHECK(poly_equal(lhs, rhs));
    }
}

TEST_CASE("monomial orders: totality, multiplicativity, 1 minimal") {
    std::mt19937 rng(7);
    for (MonomialOrder order : {MonomialOrder::make_degrevlex(4), MonomialOrder::make_lex(4),
                                MonomialOrder::make_elim(4, 2)}) {
        for (int trial = 0; trial < 500; ++trial) {
            Monomial a = random_monomial(rng, 4, 4);
            Monomial b = random_monomial(rng, 4, 4);
            Monomial c = random_monomial(rng, 4, 4);
            int ab = order.compare(a, b);
            CHECK(ab == -order.compare(b, a));
            if (ab == 0) CHECK(a == b);
            if (ab < 0) CHECK(order.compare(a.times(c), b.times(c)) < 0);
            if (!a.is_constant()) CHECK(order.compare(Monomial::one(), a) < 0);
            // transitivity spot check
            if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
        }
    }
}

TEST_CASE("elimination order prefers the leading block") {
    MonomialOrder order = MonomialOrder::make_elim(3, 1);
    // any positive power of the eliminated variable dominates the others
    CHECK(order.greater(Monomial::var(0), Monomial::var(1, 5)));
    CHECK(order.greater(Monomial::var(0), Monomial::var(2, 9)));
    CHECK(order.less(Monomial::var(1), Monomial::var(1, 2)));
}

TEST_CASE("rational scalars against a hand-rolled fraction oracle") {
    std::mt19937 rng(11);
    auto reduce = [](long num, long den) {
        long g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) g = 1;
        num /= g;
        den /= g;
        return std::pair<long, long>(num, den);
    };
    for (int trial = 0; trial < 10000; ++trial) {
        long an = static_cast<long>(rng() % 2001) - 1000, ad = 1 + static_cast<long>(rng() % 50);
        long bn = static_cast<long>(rng() % 2001) - 1000, bd = 1 + static_cast<long>(rng() % 50);
        mpq_class a(an, ad), b(bn, bd);
        a.canonicalize();
        b.canonicalize();
        auto [sn, sd] = reduce(an * bd + bn * ad, ad * bd);
        CHECK(a + b == mpq_class(sn, sd));
        auto [pn, pd] = reduce(an * bn, ad * bd);
        CHECK(a * b == mpq_class(pn, pd));
    }
    mpq_class x(-7, 3);
    CHECK(mpq_class(x.get_str()) == x);
}

TEST_CASE("polynomial text round trip") {
    Ring ring = yz_ring();
    MonomialOrder order = MonomialOrder::make_degrevlex(ring.nvars());
    for (const char* text : {"-y1 + y2 + z1 - z2", "y1 - 1", "3/4*y1^2*z2 + 1", "0", "-1",
                             "y1*y2*z1*z2 - 5/7"}) {
        PolyQ p = parse(text, ring);
        CHECK(poly_to_text(p, ring) == text);
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        PolyQ p = random_poly(rng, 4, order);
        PolyQ q = parse(poly_to_text(p, ring), ring);
        CHECK(poly_equal(p, q));
    }
    CHECK_THROWS_AS(parse("y3 + 1", ring), Error);   // unknown variable
    CHECK_THROWS_AS(parse("y1 + + 1", ring), Error); // malformed
}

TEST_CASE("substitution replaces a variable") {
    Ring ring = yz_ring();
    MonomialOrder order = MonomialOrder::make_degrevlex(ring.nvars());
    PolyQ f = parse("y1^2 + y2", ring);
    PolyQ r = parse("z1 - 1", ring);
    PolyQ g = poly_substitute(f, 0, r, Q, order);
    CHECK(poly_equal(g, parse("z1^2 - 2*z1 + y2 + 1", ring)));
}

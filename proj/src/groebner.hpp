#ifndef LSREAL_GROEBNER_HPP
#define LSREAL_GROEBNER_HPP

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "poly.hpp"

namespace lsreal {

constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

struct StepBudget {
    std::uint64_t remaining = kDefaultStepBudget;
    void charge(std::uint64_t steps = 1) {
        if (steps > remaining) fail(ErrorCode::budget, "reduction step budget exceeded");
        remaining -= steps;
    }
};

// Remainder of f on division by basis: no term of the result is divisible by
// any basis leading monomial, and f - result lies in the ideal of the basis.
template <class F>
Poly<F> normal_form(Poly<F> f, const std::vector<Poly<F>>& basis, const F& field,
                    const MonomialOrder& order, StepBudget& budget) {
    Poly<F> remainder;
    while (!f.is_zero()) {
        const auto& lt = f.leading();
        bool reduced = false;
        for (const Poly<F>& b : basis) {
            if (b.is_zero()) continue;
            if (b.leading().m.divides(lt.m)) {
                budget.charge();
                Monomial q = lt.m.quotient(b.leading().m);
                typename F::Elem c = field.div(lt.c, b.leading().c);
                f = poly_sub_mul_term(f, q, c, b, field, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.terms.push_back(lt);
            f.terms.erase(f.terms.begin());
        }
    }
    return remainder;
}

template <class F>
Poly<F> s_polynomial(const Poly<F>& a, const Poly<F>& b, const F& field, const MonomialOrder& order) {
    Monomial l = a.leading().m.lcm(b.leading().m);
    Poly<F> left = poly_zero<F>();
    left = poly_sub_mul_term(left, l.quotient(a.leading().m), field.div(field.one(), a.leading().c), a,
                             field, order);
    Poly<F> right = poly_zero<F>();
    right = poly_sub_mul_term(right, l.quotient(b.leading().m), field.div(field.one(), b.leading().c), b,
                              field, order);
    return poly_sub(right, left, field, order);
}

template <class F>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly<F>> elements; // reduced, monic, sorted by ascending leading monomial
    bool is_unit() const {
        return elements.size() == 1 && elements[0].terms.size() == 1 && elements[0].leading().m.is_constant();
    }
};

// Buchberger with the coprimality and chain criteria, then interreduction.
// The reduced basis is unique for the order, so the output is deterministic.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Poly<F>> gens, const F& field, const MonomialOrder& order,
                            StepBudget& budget) {
    std::vector<Poly<F>> g;
    for (Poly<F>& p : gens) {
        poly_normalize(p, field, order);
        if (!p.is_zero()) g.push_back(poly_monic(p, field));
    }

    struct Pair {
        std::uint32_t lcm_deg;
        Monomial lcm;
        int i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    std::set<std::pair<int, int>> in_queue;
    auto push_pair = [&](int i, int j) {
        Pair p{0, g[i].leading().m.lcm(g[j].leading().m), i, j};
        p.lcm_deg = p.lcm.deg;
        pending.push_back(p);
        in_queue.insert({i, j});
    };
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(g.size()); ++j) push_pair(i, j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pair = *it;
        pending.erase(it);
        in_queue.erase({pair.i, pair.j});

        const Monomial& li = g[pair.i].leading().m;
        const Monomial& lj = g[pair.j].leading().m;
        if (li.coprime(lj)) continue;
        bool chained = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!g[k].leading().m.divides(pair.lcm)) continue;
            auto key_ik = std::minmax(pair.i, k);
            auto key_jk = std::minmax(pair.j, k);
            if (!in_queue.count({key_ik.first, key_ik.second}) &&
                !in_queue.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        Poly<F> s = s_polynomial(g[pair.i], g[pair.j], field, order);
        Poly<F> r = normal_form(std::move(s), g, field, order, budget);
        if (r.is_zero()) continue;
        g.push_back(poly_monic(r, field));
        int newest = static_cast<int>(g.size()) - 1;
        for (int i = 0; i < newest; ++i) push_pair(i, newest);
    }

    // interreduce: every element fully reduced against the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < g.size(); ++i) {
            Poly<F> self = g[i];
            std::vector<Poly<F>> others;
            others.reserve(g.size() - 1);
            for (size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            Poly<F> r = normal_form(self, others, field, order, budget);
            if (r.is_zero()) {
                g.erase(g.begin() + i);
                changed = true;
                break;
            }
            r = poly_monic(r, field);
            if (!poly_equal(r, g[i])) {
                g[i] = r;
                changed = true;
            }
        }
    }

    std::sort(g.begin(), g.end(),
              [&](const Poly<F>& a, const Poly<F>& b) { return order.less(a.leading().m, b.leading().m); });
    return GroebnerBasis<F>{order, std::move(g)};
}

// Krull dimension of the quotient by the leading-term ideal: the largest
// variable subset meeting the support of no leading monomial. -1 for the
// unit ideal.
template <class F>
int krull_dimension(const GroebnerBasis<F>& gb, int nvars) {
    if (gb.is_unit()) return -1;
    std::vector<std::uint32_t> supports;
    for (const Poly<F>& p : gb.elements) {
        std::uint32_t s = 0;
        for (int i = 0; i < nvars; ++i)
            if (p.leading().m.e[i]) s |= 1u << i;
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
        bool independent = true;
        for (std::uint32_t s : supports)
            if ((s & ~u) == 0) { independent = false; break; }
        if (independent) best = std::max(best, std::popcount(u));
    }
    return best;
}

// Monomial basis of the quotient (staircase). Requires dimension <= 0.
template <class F>
std::vector<Monomial> quotient_basis(const GroebnerBasis<F>& gb, int nvars, size_t cap = 100000) {
    std::vector<Monomial> basis;
    if (gb.is_unit()) return basis;
    auto reducible = [&](const Monomial& m) {
        for (const Poly<F>& p : gb.elements)
            if (p.leading().m.divides(m)) return true;
        return false;
    };
    std::map<std::array<std::uint16_t, kMaxVars>, Monomial> seen;
    std::deque<Monomial> queue;
    Monomial one = Monomial::one();
    if (!reducible(one)) {
        seen.emplace(one.e, one);
        queue.push_back(one);
    }
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (int i = 0; i < nvars; ++i) {
            Monomial next = m.times(Monomial::var(i));
            if (reducible(next) || seen.count(next.e)) continue;
            seen.emplace(next.e, next);
            queue.push_back(next);
            if (seen.size() > cap) fail(ErrorCode::budget, "quotient basis is not finite within cap");
        }
    }
    for (auto& [key, m] : seen) basis.push_back(m);
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return basis;
}

// Monic minimal polynomial of the multiplication-by-u operator on the
// quotient algebra, returned as ascending coefficients (constant first,
// leading 1 last). Requires dimension 0.
template <class F>
std::vector<typename F::Elem> minimal_polynomial(const Poly<F>& u, const GroebnerBasis<F>& gb,
                                                 const std::vector<Monomial>& basis, const F& field,
                                                 StepBudget& budget) {
    using Elem = typename F::Elem;
    std::map<std::array<std::uint16_t, kMaxVars>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = static_cast<int>(i);
    const size_t dim = basis.size();

    auto to_vector = [&](const Poly<F>& p) {
        std::vector<Elem> v(dim, field.zero());
        for (const auto& t : p.terms) {
            auto it = index.find(t.m.e);
            if (it == index.end()) fail(ErrorCode::internal, "normal form outside the quotient basis");
            v[it->second] = t.c;
        }
        return v;
    };

    // rows of the echelon matrix: (reduced vector, pivot, expression in powers)
    struct Row {
        std::vector<Elem> v;
        int pivot;
        std::vector<Elem> expr;
    };
    std::vector<Row> rows;

    Poly<F> power = poly_const(field, field.one()); // u^k reduced, k = 0,1,...
    for (size_t k = 0;; ++k) {
        if (k > dim) fail(ErrorCode::internal, "minimal polynomial exceeds quotient dimension");
        std::vector<Elem> v = to_vector(power);
        std::vector<Elem> expr(k + 1, field.zero());
        expr[k] = field.one();
        // reduce against existing rows
        for (const Row& row : rows) {
            if (field.is_zero(v[row.pivot])) continue;
            Elem factor = v[row.pivot];
            for (size_t i = 0; i < dim; ++i) v[i] = field.sub(v[i], field.mul(factor, row.v[i]));
            for (size_t i = 0; i < row.expr.size(); ++i)
                expr[i] = field.sub(expr[i], field.mul(factor, row.expr[i]));
        }
        int pivot = -1;
        for (size_t i = 0; i < dim; ++i)
            if (!field.is_zero(v[i])) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) {
            // first linear dependence among 1, u, ..., u^k; expr is monic of degree k
            return expr;
        }
        Elem inv = field.div(field.one(), v[pivot]);
        for (size_t i = 0; i < dim; ++i) v[i] = field.mul(v[i], inv);
        for (auto& e : expr) e = field.mul(e, inv);
        rows.push_back({std::move(v), pivot, std::move(expr)});
        power = normal_form(poly_mul(power, u, field, gb.order), gb.elements, field, gb.order, budget);
    }
}

} // namespace lsreal

#endif

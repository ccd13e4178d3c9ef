#ifndef LSREAL_POLY_HPP
#define LSREAL_POLY_HPP

#include <algorithm>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace lsreal {

// Sparse polynomial: nonzero terms sorted strictly descending in the ambient
// monomial order. Every operation takes the field and order explicitly.
template <class F>
struct Poly {
    struct Term {
        Monomial m;
        typename F::Elem c;
    };
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& leading() const { return terms.front(); }
};

template <class F>
Poly<F> poly_zero() { return {}; }

template <class F>
Poly<F> poly_const(const F& field, const typename F::Elem& c) {
    Poly<F> p;
    if (!field.is_zero(c)) p.terms.push_back({Monomial::one(), c});
    return p;
}

template <class F>
Poly<F> poly_term(const F& field, const Monomial& m, const typename F::Elem& c) {
    Poly<F> p;
    if (!field.is_zero(c)) p.terms.push_back({m, c});
    return p;
}

// Sorts, combines equal monomials, drops zeros.
template <class F>
void poly_normalize(Poly<F>& p, const F& field, const MonomialOrder& order) {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.m, b.m); });
    std::vector<typename Poly<F>::Term> out;
    out.reserve(p.terms.size());
    for (auto& t : p.terms) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = field.add(out.back().c, t.c);
        else
            out.push_back(t);
        if (!out.empty() && field.is_zero(out.back().c)) out.pop_back();
    }
    p.terms = std::move(out);
}

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b, const F& field, const MonomialOrder& order) {
    Poly<F> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = order.compare(a.terms[i].m, b.terms[j].m);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            typename F::Elem sum = field.add(a.terms[i].c, b.terms[j].c);
            if (!field.is_zero(sum)) r.terms.push_back({a.terms[i].m, sum});
            ++i;
            ++j;
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
    return r;
}

template <class F>
Poly<F> poly_neg(const Poly<F>& a, const F& field) {
    Poly<F> r = a;
    for (auto& t : r.terms) t.c = field.neg(t.c);
    return r;
}

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b, const F& field, const MonomialOrder& order) {
    return poly_add(a, poly_neg(b, field), field, order);
}

// a - (m, c) * b, the inner step of division
template <class F>
Poly<F> poly_sub_mul_term(const Poly<F>& a, const Monomial& m, const typename F::Elem& c,
                          const Poly<F>& b, const F& field, const MonomialOrder& order) {
    Poly<F> scaled;
    scaled.terms.reserve(b.terms.size());
    for (const auto& t : b.terms) scaled.terms.push_back({t.m.times(m), field.neg(field.mul(t.c, c))});
    return poly_add(a, scaled, field, order);
}

template <class F>
Poly<F> poly_scale(const Poly<F>& a, const typename F::Elem& c, const F& field) {
    Poly<F> r;
    if (field.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m, field.mul(t.c, c)});
    return r;
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b, const F& field, const MonomialOrder& order) {
    Poly<F> r;
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) r.terms.push_back({s.m.times(t.m), field.mul(s.c, t.c)});
    poly_normalize(r, field, order);
    return r;
}

template <class F>
Poly<F> poly_pow(const Poly<F>& a, int e, const F& field, const MonomialOrder& order) {
    Poly<F> r = poly_const(field, field.one());
    for (int i = 0; i < e; ++i) r = poly_mul(r, a, field, order);
    return r;
}

template <class F>
bool poly_equal(const Poly<F>& a, const Poly<F>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (!(a.terms[i].m == b.terms[i].m) || a.terms[i].c != b.terms[i].c) return false;
    return true;
}

template <class F>
typename F::Elem poly_evaluate(const Poly<F>& a, const std::vector<typename F::Elem>& point,
                               const F& field) {
    typename F::Elem acc = field.zero();
    for (const auto& t : a.terms) {
        typename F::Elem v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < t.m.e[i]; ++k) v = field.mul(v, point[i]);
        acc = field.add(acc, v);
    }
    return acc;
}

// Substitutes `replacement` for variable `var`.
template <class F>
Poly<F> poly_substitute(const Poly<F>& a, int var, const Poly<F>& replacement, const F& field,
                        const MonomialOrder& order) {
    Poly<F> result;
    std::vector<Poly<F>> powers = {poly_const(field, field.one())};
    for (const auto& t : a.terms) {
        int e = t.m.e[var];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(poly_mul(powers.back(), replacement, field, order));
        Monomial rest = t.m;
        rest.deg -= rest.e[var];
        rest.e[var] = 0;
        Poly<F> piece = poly_scale(powers[e], t.c, field);
        Poly<F> shifted;
        shifted.terms.reserve(piece.terms.size());
        for (const auto& u : piece.terms) shifted.terms.push_back({u.m.times(rest), u.c});
        poly_normalize(shifted, field, order);
        result = poly_add(result, shifted, field, order);
    }
    return result;
}

template <class F>
Poly<F> poly_monic(const Poly<F>& a, const F& field) {
    if (a.is_zero()) return a;
    Poly<F> r = a;
    typename F::Elem inv = field.div(field.one(), a.terms.front().c);
    for (auto& t : r.terms) t.c = field.mul(t.c, inv);
    return r;
}

// Largest variable index actually used, plus one.
template <class F>
int poly_var_span(const Poly<F>& a) {
    int span = 0;
    for (const auto& t : a.terms)
        for (int i = 0; i < kMaxVars; ++i)
            if (t.m.e[i]) span = std::max(span, i + 1);
    return span;
}

template <class F>
bool poly_uses_var(const Poly<F>& a, int var) {
    for (const auto& t : a.terms)
        if (t.m.e[var]) return true;
    return false;
}

// Removes an unused variable slot, shifting higher slots down.
template <class F>
Poly<F> poly_drop_var(const Poly<F>& a, int var) {
    Poly<F> r = a;
    for (auto& t : r.terms) {
        for (int i = var; i + 1 < kMaxVars; ++i) t.m.e[i] = t.m.e[i + 1];
        t.m.e[kMaxVars - 1] = 0;
    }
    return r;
}

using PolyQ = Poly<RationalField>;
using PolyFp = Poly<PrimeField>;

} // namespace lsreal

#endif

#include "scheme.hpp"

#include <algorithm>

namespace lsreal {

namespace {

const RationalField kQ;

// index of a variable suitable for linear elimination in g, or -1
int linear_variable(const PolyQ& g, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        bool has_linear_term = false;
        bool appears_elsewhere = false;
        for (const auto& t : g.terms) {
            if (t.m.e[v] == 0) continue;
            if (t.m.e[v] == 1 && t.m.deg == 1)
                has_linear_term = true;
            else
                appears_elsewhere = true;
        }
        if (has_linear_term && !appears_elsewhere) return v;
    }
    return -1;
}

// Rewrites a polynomial over from_ring into to_ring, sending eliminated
// variables to their logged expressions (which live in to_ring).
PolyQ rewrite_through(const PolyQ& value, const Ring& from_ring, const Ring& to_ring,
                      const std::vector<Substitution>& fresh_log) {
    MonomialOrder order = MonomialOrder::make_degrevlex(to_ring.nvars());
    PolyQ result;
    for (const auto& t : value.terms) {
        PolyQ piece = poly_const(kQ, t.c);
        for (int v = 0; v < from_ring.nvars(); ++v) {
            int e = t.m.e[v];
            if (!e) continue;
            const std::string& name = from_ring.vars[v];
            int j = to_ring.var_index(name);
            PolyQ factor;
            if (j >= 0) {
                factor = poly_term(kQ, Monomial::var(j, e), kQ.one());
            } else {
                const PolyQ* expr = nullptr;
                for (const Substitution& s : fresh_log)
                    if (s.var == name) { expr = &s.replacement; break; }
                if (!expr) fail(ErrorCode::internal, "eliminated variable missing from the log");
                factor = poly_pow(*expr, e, kQ, order);
            }
            piece = poly_mul(piece, factor, kQ, order);
        }
        result = poly_add(result, piece, kQ, order);
    }
    return result;
}

} // namespace

EliminationResult eliminate_linear_variables(const IdealQ& ideal) {
    EliminationResult result;
    result.ideal = ideal;
    MonomialOrder order = MonomialOrder::make_degrevlex(result.ideal.ring.nvars());

    auto tidy = [&]() {
        std::vector<PolyQ> kept;
        for (PolyQ& g : result.ideal.generators) {
            poly_normalize(g, kQ, order);
            if (g.is_zero()) continue;
            bool dup = false;
            for (const PolyQ& h : kept)
                if (poly_equal(g, h)) { dup = true; break; }
            if (!dup) kept.push_back(std::move(g));
        }
        result.ideal.generators = std::move(kept);
    };
    tidy();

    for (;;) {
        int gen_index = -1, var = -1;
        for (size_t i = 0; i < result.ideal.generators.size() && gen_index < 0; ++i) {
            int v = linear_variable(result.ideal.generators[i], result.ideal.ring.nvars());
            if (v >= 0) {
                gen_index = static_cast<int>(i);
                var = v;
            }
        }
        if (gen_index < 0) break;

        PolyQ g = result.ideal.generators[gen_index];
        mpq_class c;
        PolyQ rest;
        for (const auto& t : g.terms) {
            if (t.m.e[var])
                c = t.c;
            else
                rest.terms.push_back(t);
        }
        PolyQ replacement = poly_scale(rest, mpq_class(-1) / c, kQ);
        poly_normalize(replacement, kQ, order);

        std::string name = result.ideal.ring.vars[var];
        for (PolyQ& h : result.ideal.generators) h = poly_substitute(h, var, replacement, kQ, order);
        for (Substitution& s : result.log)
            s.replacement = poly_substitute(s.replacement, var, replacement, kQ, order);
        result.log.push_back({name, replacement});

        // drop the now-unused variable slot
        for (PolyQ& h : result.ideal.generators) h = poly_drop_var(h, var);
        for (Substitution& s : result.log) s.replacement = poly_drop_var(s.replacement, var);
        result.ideal.ring.vars.erase(result.ideal.ring.vars.begin() + var);
        order = MonomialOrder::make_degrevlex(result.ideal.ring.nvars());
        tidy();
    }
    return result;
}

UnivarQ quotient_minimal_polynomial(const PolyQ& u, const GroebnerBasis<RationalField>& gb,
                                    const std::vector<Monomial>& basis, StepBudget& budget) {
    return minimal_polynomial(u, gb, basis, kQ, budget);
}

SchemeAnalysis analyze_framing(const Framing& framing, std::uint64_t step_budget) {
    SchemeAnalysis a;
    a.framing = framing;
    DetIdeal det = build_ideal(framing);
    a.original_ring = det.ideal.ring;
    a.determinants_total = det.determinants_total;
    a.determinants_trivial = det.determinants_trivial;

    StepBudget budget{step_budget};

    // alternate substitution simplification with basis computation: the basis
    // can expose linear generators the raw determinants hide
    IdealQ current = det.ideal;
    std::vector<Substitution> log;
    GroebnerBasis<RationalField> gb;
    for (int round = 0;; ++round) {
        if (round > kMaxVars + 2) fail(ErrorCode::internal, "elimination failed to converge");
        EliminationResult elim = eliminate_linear_variables(current);
        if (!elim.log.empty()) {
            for (Substitution& s : log)
                s.replacement = rewrite_through(s.replacement, current.ring, elim.ideal.ring, elim.log);
            log.insert(log.end(), elim.log.begin(), elim.log.end());
        }
        current = std::move(elim.ideal);

        MonomialOrder order = MonomialOrder::make_degrevlex(current.ring.nvars());
        gb = buchberger(current.generators, kQ, order, budget);
        current.generators = gb.elements;
        if (gb.is_unit()) break;
        bool more_linear = false;
        for (const PolyQ& g : gb.elements)
            if (linear_variable(g, current.ring.nvars()) >= 0) { more_linear = true; break; }
        if (!more_linear) break;
    }

    a.final_ring = current.ring;
    a.substitutions = log;
    a.gb = gb;
    a.krull_dim = krull_dimension(gb, a.final_ring.nvars());

    if (a.krull_dim == 0) {
        std::vector<Monomial> basis = quotient_basis(gb, a.final_ring.nvars());
        a.quotient_dim = static_cast<int>(basis.size());
        for (const std::string& name : a.original_ring.vars) {
            PolyQ u;
            int idx = a.final_ring.var_index(name);
            if (idx >= 0) {
                u = poly_term(kQ, Monomial::var(idx), kQ.one());
            } else {
                bool found = false;
                for (const Substitution& s : log)
                    if (s.var == name) {
                        u = s.replacement;
                        found = true;
                        break;
                    }
                if (!found) fail(ErrorCode::internal, "eliminated variable missing from the log");
            }
            u = normal_form(u, gb.elements, kQ, gb.order, budget);
            a.minimal_polys.emplace_back(name, quotient_minimal_polynomial(u, gb, basis, budget));
        }
    }
    return a;
}

BestFramingAnalysis analyze_space(const LinearSpace& s, std::uint64_t step_budget) {
    BestFramingAnalysis best;
    bool have = false;
    auto metric = [](const SchemeAnalysis& a) {
        return std::pair<int, int>(a.krull_dim, a.krull_dim == 0 ? a.quotient_dim : INT32_MAX);
    };
    auto consider = [&](const Framing& fr) {
        SchemeAnalysis a = analyze_framing(fr, step_budget);
        ++best.framings_tried;
        if (!have || metric(a) < metric(best.analysis)) {
            best.analysis = std::move(a);
            have = true;
        }
    };
    if (std::optional<Framing> id = identity_framing(s)) consider(*id);
    for (const VFrame& vf : all_v_frames(s)) consider(frame_ordering(s, vf));
    if (!have) fail(ErrorCode::invalid_argument, "space admits no V-shaped frame");
    return best;
}

std::vector<PolyFp> reduce_ideal_mod_p(const IdealQ& ideal, const PrimeField& field) {
    std::vector<PolyFp> out;
    MonomialOrder order = MonomialOrder::make_degrevlex(ideal.ring.nvars());
    mpz_class p(static_cast<unsigned long>(field.p));
    for (const PolyQ& g : ideal.generators) {
        PolyFp h;
        for (const auto& t : g.terms) {
            mpz_class den = t.c.get_den() % p;
            if (den == 0) fail(ErrorCode::invalid_argument, "denominator vanishes modulo p");
            mpz_class num = t.c.get_num() % p;
            if (num < 0) num += p;
            std::uint64_t c = field.div(num.get_ui(), den.get_ui());
            if (c) h.terms.push_back({t.m, c});
        }
        poly_normalize(h, field, order);
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return out;
}

} // namespace lsreal

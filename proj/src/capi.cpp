#include "lsreal.h"
#include <atomic>
#include <memory>
#include <mutex>
#include <thread>

#include <cstring>
#include <string>

#include "canonical.hpp"
#include "catalog.hpp"
#include "census.hpp"
#include "counting.hpp"
#include "jsonio.hpp"
#include "poly_text.hpp"
#include "serialize.hpp"

using namespace lsreal;
using nlohmann::json;

struct lsreal_space {
    LinearSpace space;
};

struct lsreal_enum {
    std::vector<LinearSpace> spaces;
    size_t next = 0;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lsreal_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return LSREAL_ERROR_INVALID;
        case ErrorCode::parse: return LSREAL_ERROR_PARSE;
        case ErrorCode::budget: return LSREAL_ERROR_BUDGET;
        case ErrorCode::mismatch: return LSREAL_ERROR_MISMATCH;
        case ErrorCode::unknown_name: return LSREAL_ERROR_UNKNOWN;
        case ErrorCode::internal: return LSREAL_ERROR_INTERNAL;
    }
    return LSREAL_ERROR_INTERNAL;
}

template <class Fn>
lsreal_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return LSREAL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LSREAL_ERROR_INTERNAL;
    }
}

std::string catalog_dir_or_default(const char* dir) {
    return (dir && *dir) ? std::string(dir) : default_catalog_dir();
}

} // namespace

extern "C" {

const char* lsreal_version(void) { return "0.1.0"; }

const char* lsreal_last_error(void) { return g_last_error.c_str(); }

void lsreal_string_free(char* s) { std::free(s); }

lsreal_status lsreal_space_parse(const char* space_json, lsreal_space** out) {
    return guarded([&] {
        if (!space_json || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = new lsreal_space{space_from_json(parse_json(space_json))};
    });
}

lsreal_status lsreal_space_close(const char* family_json, lsreal_space** out) {
    return guarded([&] {
        if (!family_json || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = new lsreal_space{closure(family_from_json(parse_json(family_json)))};
    });
}

lsreal_status lsreal_space_json(const lsreal_space* s, char** out) {
    return guarded([&] {
        if (!s || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = dup_string(space_to_json(s->space).dump());
    });
}

void lsreal_space_free(lsreal_space* s) { delete s; }

lsreal_status lsreal_validate(const char* family_json, char** report_json) {
    return guarded([&] {
        if (!family_json || !report_json) fail(ErrorCode::invalid_argument, "null argument");
        CollinearityFamily family = family_from_json(parse_json(family_json));
        std::optional<AxiomViolation> violation = validate_family(family);
        json j;
        if (!violation) {
            j["valid"] = true;
        } else {
            j["valid"] = false;
            j["axiom"] = violation->axiom;
            j["witness"] = violation->witness;
            j["message"] = violation->message;
        }
        *report_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_leq(const lsreal_space* a, const lsreal_space* b, int* out) {
    return guarded([&] {
        if (!a || !b || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = leq(a->space, b->space) ? 1 : 0;
    });
}

lsreal_status lsreal_is_collinear(const lsreal_space* s, const int* points, int count, int* out) {
    return guarded([&] {
        if (!s || !points || !out || count < 0) fail(ErrorCode::invalid_argument, "null argument");
        PointSet subset = 0;
        for (int i = 0; i < count; ++i) {
            if (points[i] < 1 || points[i] > s->space.n())
                fail(ErrorCode::invalid_argument, "point index out of range");
            subset = with_point(subset, points[i]);
        }
        *out = is_collinear(s->space, subset) ? 1 : 0;
    });
}

lsreal_status lsreal_quotient(const lsreal_space* s, const int* assignment, int source_n,
                              int target_n, lsreal_space** out) {
    return guarded([&] {
        if (!s || !assignment || !out) fail(ErrorCode::invalid_argument, "null argument");
        QuotientMap q{source_n, target_n, std::vector<int>(assignment, assignment + source_n)};
        *out = new lsreal_space{quotient(s->space, q)};
    });
}

lsreal_status lsreal_induced(const lsreal_space* s, const int* keep, int count, lsreal_space** out) {
    return guarded([&] {
        if (!s || !keep || !out) fail(ErrorCode::invalid_argument, "null argument");
        PointSet mask = 0;
        for (int i = 0; i < count; ++i) {
            if (keep[i] < 1 || keep[i] > s->space.n())
                fail(ErrorCode::invalid_argument, "point index out of range");
            mask = with_point(mask, keep[i]);
        }
        *out = new lsreal_space{induced_subspace(s->space, mask)};
    });
}

lsreal_status lsreal_canonical(const lsreal_space* s, char** result_json) {
    return guarded([&] {
        if (!s || !result_json) fail(ErrorCode::invalid_argument, "null argument");
        CanonicalResult c = canonical_form(s->space);
        json j;
        j["certificate"] = certificate_string(c.code);
        j["relabeling"] = c.to_canonical;
        j["automorphism_generators"] = c.automorphisms.size();
        *result_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_isomorphic(const lsreal_space* a, const lsreal_space* b, char** result_json) {
    return guarded([&] {
        if (!a || !b || !result_json) fail(ErrorCode::invalid_argument, "null argument");
        auto witness = isomorphism_witness(a->space, b->space);
        json j;
        j["isomorphic"] = witness.has_value();
        if (witness) j["witness"] = *witness;
        *result_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_superfiguration(const lsreal_space* s, int* out) {
    return guarded([&] {
        if (!s || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = is_superfiguration(s->space) ? 1 : 0;
    });
}

lsreal_status lsreal_glynn_reduce(const lsreal_space* s, int at_point, char** step_json) {
    return guarded([&] {
        if (!s || !step_json) fail(ErrorCode::invalid_argument, "null argument");
        json j;
        std::optional<GlynnStep> step;
        if (at_point > 0)
            step = glynn_reduce_at(s->space, at_point);
        else
            step = glynn_reduce(s->space);
        if (!step) {
            j["reducible"] = false;
        } else {
            j["reducible"] = true;
            j["removed_point"] = step->removed_point;
            j["fiber_codim"] = step->fiber_codim;
            j["reduced"] = space_to_json(step->reduced);
        }
        *step_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_reduce_fully(const lsreal_space* s, char** trace_json) {
    return guarded([&] {
        if (!s || !trace_json) fail(ErrorCode::invalid_argument, "null argument");
        GlynnTrace trace = glynn_reduce_fully(s->space);
        json steps = json::array();
        for (auto [point, codim] : trace.steps)
            steps.push_back({{"removed_point", point}, {"fiber_codim", codim}});
        json j;
        j["steps"] = std::move(steps);
        j["result"] = space_to_json(trace.result);
        *trace_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_enum_new(int n, int superfigurations_only, int workers, lsreal_enum** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::invalid_argument, "null argument");
        auto stream = std::make_unique<lsreal_enum>();
        stream->spaces = enumerate_linear_spaces(n, superfigurations_only != 0, workers);
        *out = stream.release();
    });
}

lsreal_status lsreal_enum_next(lsreal_enum* e, char** space_json) {
    return guarded([&] {
        if (!e || !space_json) fail(ErrorCode::invalid_argument, "null argument");
        if (e->next >= e->spaces.size()) {
            *space_json = nullptr;
            return;
        }
        *space_json = dup_string(space_to_json(e->spaces[e->next++]).dump());
    });
}

void lsreal_enum_free(lsreal_enum* e) { delete e; }

lsreal_status lsreal_frame(const lsreal_space* s, char** framing_json) {
    return guarded([&] {
        if (!s || !framing_json) fail(ErrorCode::invalid_argument, "null argument");
        *framing_json = dup_string(framing_to_json(preferred_framing(s->space)).dump());
    });
}

lsreal_status lsreal_ideal(const char* framing_json, char** ideal_json) {
    return guarded([&] {
        if (!framing_json || !ideal_json) fail(ErrorCode::invalid_argument, "null argument");
        Framing framing = framing_from_json(parse_json(framing_json));
        *ideal_json = dup_string(det_ideal_to_json(build_ideal(framing)).dump());
    });
}

lsreal_status lsreal_groebner(const char* ideal_json, const char* order_name,
                              uint64_t step_budget, char** basis_json) {
    return guarded([&] {
        if (!ideal_json || !basis_json) fail(ErrorCode::invalid_argument, "null argument");
        IdealQ ideal = ideal_from_json(parse_json(ideal_json));
        MonomialOrder order =
            MonomialOrder::from_name(order_name ? order_name : "degrevlex", ideal.ring.nvars());
        StepBudget budget{step_budget ? step_budget : kDefaultStepBudget};
        RationalField field;
        GroebnerBasis<RationalField> gb = buchberger(ideal.generators, field, order, budget);
        *basis_json = dup_string(gb_to_json(gb, ideal.ring).dump());
    });
}

lsreal_status lsreal_eliminate(const char* ideal_json, char** result_json) {
    return guarded([&] {
        if (!ideal_json || !result_json) fail(ErrorCode::invalid_argument, "null argument");
        IdealQ ideal = ideal_from_json(parse_json(ideal_json));
        EliminationResult result = eliminate_linear_variables(ideal);
        json j;
        j["ideal"] = ideal_to_json(result.ideal);
        json subs = json::array();
        for (const Substitution& s : result.log)
            subs.push_back(
                {{"var", s.var}, {"replacement", poly_to_text(s.replacement, result.ideal.ring)}});
        j["substitutions"] = std::move(subs);
        *result_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_dimension(const char* basis_json, int* out) {
    return guarded([&] {
        if (!basis_json || !out) fail(ErrorCode::invalid_argument, "null argument");
        auto [gb, ring] = gb_from_json(parse_json(basis_json));
        *out = krull_dimension(gb, ring.nvars());
    });
}

lsreal_status lsreal_summary(const char* basis_json, char** summary_json) {
    return guarded([&] {
        if (!basis_json || !summary_json) fail(ErrorCode::invalid_argument, "null argument");
        auto [gb, ring] = gb_from_json(parse_json(basis_json));
        int dim = krull_dimension(gb, ring.nvars());
        if (dim != 0) fail(ErrorCode::invalid_argument, "summary requires a zero-dimensional basis");
        StepBudget budget;
        RationalField field;
        std::vector<Monomial> basis = quotient_basis(gb, ring.nvars());
        json j;
        j["krull_dimension"] = 0;
        j["vector_space_dimension"] = basis.size();
        json polys = json::object();
        for (int v = 0; v < ring.nvars(); ++v) {
            PolyQ var = poly_term(field, Monomial::var(v), field.one());
            var = normal_form(var, gb.elements, field, gb.order, budget);
            polys[ring.vars[v]] = uq_to_text(quotient_minimal_polynomial(var, gb, basis, budget), "x");
        }
        j["minimal_polynomials"] = std::move(polys);
        *summary_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_analyze(const lsreal_space* s, int optimize_frame, uint64_t step_budget,
                             char** analysis_json) {
    return guarded([&] {
        if (!s || !analysis_json) fail(ErrorCode::invalid_argument, "null argument");
        std::uint64_t budget = step_budget ? step_budget : kDefaultStepBudget;
        json j;
        if (optimize_frame) {
            BestFramingAnalysis best = analyze_space(s->space, budget);
            j = analysis_to_json(best.analysis);
            j["framings_tried"] = best.framings_tried;
        } else {
            j = analysis_to_json(analyze_framing(preferred_framing(s->space), budget));
            j["framings_tried"] = 1;
        }
        *analysis_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_count(const lsreal_space* s, const char* framing_json, uint64_t q,
                           const char* mode_name, const int* frame4, int naive,
                           char** result_json) {
    return guarded([&] {
        if (!result_json || !mode_name) fail(ErrorCode::invalid_argument, "null argument");
        CountMode mode = count_mode_from_name(mode_name);
        RealizationCount rc;
        if (mode == CountMode::chart) {
            Framing framing;
            if (framing_json)
                framing = framing_from_json(parse_json(framing_json));
            else if (s)
                framing = preferred_framing(s->space);
            else
                fail(ErrorCode::invalid_argument, "chart counting needs a space or a framing");
            rc = naive ? naive_count_oracle(framing.space, q, mode, std::nullopt, &framing)
                       : count_chart_points(framing, q);
        } else {
            if (!s) fail(ErrorCode::invalid_argument, "framed counting needs a space");
            std::array<int, 4> frame;
            if (frame4) {
                frame = {frame4[0], frame4[1], frame4[2], frame4[3]};
            } else {
                auto first = first_combinatorial_frame(s->space);
                if (!first) fail(ErrorCode::invalid_argument, "the space admits no combinatorial frame");
                frame = *first;
            }
            if (mode == CountMode::strong_total) {
                if (naive) {
                    rc = naive_count_oracle(s->space, q, mode, frame);
                } else {
                    RealizationCount framed = count_framed(s->space, frame, q, true);
                    rc = {q, CountMode::strong_total, framed.count * pgl3_order(q), framed.elapsed_ms};
                }
            } else {
                bool strong = mode == CountMode::framed_strong;
                rc = naive ? naive_count_oracle(s->space, q, mode, frame)
                           : count_framed(s->space, frame, q, strong);
            }
        }
        *result_json = dup_string(count_to_json(rc).dump());
    });
}

lsreal_status lsreal_scan(const lsreal_space* s, const uint64_t* primes, int count,
                          char** result_json) {
    return guarded([&] {
        if (!s || !primes || !result_json) fail(ErrorCode::invalid_argument, "null argument");
        std::vector<std::uint64_t> list(primes, primes + count);
        auto scan = characteristic_scan(s->space, list);
        json j = json::object();
        for (auto [p, realizable] : scan) j[std::to_string(p)] = realizable;
        *result_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_catalog_list(const char* dir, char** names_json) {
    return guarded([&] {
        if (!names_json) fail(ErrorCode::invalid_argument, "null argument");
        json j = catalog_names(catalog_dir_or_default(dir));
        *names_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_catalog_entry(const char* dir, const char* name, char** entry_json) {
    return guarded([&] {
        if (!name || !entry_json) fail(ErrorCode::invalid_argument, "null argument");
        CatalogEntry entry = catalog_get(catalog_dir_or_default(dir), name);
        json j = entry.raw;
        j["resolved_space"] = space_to_json(entry.space);
        *entry_json = dup_string(j.dump());
    });
}

lsreal_status lsreal_catalog_verify(const char* dir, const char* name, char** report_json) {
    lsreal_status status = guarded([&] {
        if (!report_json) fail(ErrorCode::invalid_argument, "null argument");
        std::string directory = catalog_dir_or_default(dir);
        std::vector<std::string> names;
        if (name && *name)
            names.push_back(name);
        else
            names = catalog_names(directory);

        // entries are independent; verify them in parallel
        std::vector<VerifyReport> results(names.size());
        std::atomic<size_t> cursor{0};
        std::mutex fail_mutex;
        std::exception_ptr failure;
        auto work = [&]() {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= names.size()) return;
                try {
                    results[i] = catalog_verify(directory, names[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                              static_cast<unsigned>(names.size()));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> threads;
            for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
            for (std::thread& t : threads) t.join();
        }
        if (failure) std::rethrow_exception(failure);

        json reports = json::array();
        bool all_pass = true;
        for (const VerifyReport& report : results) {
            all_pass = all_pass && report.pass;
            reports.push_back(verify_report_json(report));
        }
        json j;
        j["pass"] = all_pass;
        j["reports"] = std::move(reports);
        *report_json = dup_string(j.dump());
        if (!all_pass) fail(ErrorCode::mismatch, "catalog verification found differences");
    });
    return status;
}

lsreal_status lsreal_census(int n, const char* cache_dir, int workers, uint64_t step_budget,
                            lsreal_line_fn on_row, void* user, char** summary_json) {
    return guarded([&] {
        CensusOptions options;
        options.n = n;
        options.cache_dir = cache_dir ? cache_dir : "";
        options.workers = workers;
        options.step_budget = step_budget ? step_budget : kDefaultStepBudget;
        CensusSink sink = nullptr;
        if (on_row)
            sink = [&](const CensusRow& row) { on_row(row.to_json().dump().c_str(), user); };
        std::vector<CensusRow> rows = run_census(options, sink);
        if (summary_json) *summary_json = dup_string(census_summary_json(rows).dump());
    });
}

} // extern "C"

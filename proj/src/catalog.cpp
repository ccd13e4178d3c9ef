#include "catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "counting.hpp"
#include "jsonio.hpp"
#include "poly_text.hpp"
#include "scheme.hpp"
#include "univariate.hpp"

namespace lsreal {

using nlohmann::json;

std::string default_catalog_dir() {
    if (const char* env = std::getenv("LSREAL_CATALOG_DIR")) return env;
#ifdef LSREAL_SOURCE_DATA_DIR
    return LSREAL_SOURCE_DATA_DIR;
#else
    return "data/catalog";
#endif
}

LinearSpace mod_eleven_space() {
    std::vector<PointSet> lines;
    for (int i = 0; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j) {
            int k = (33 - i - j) % 11;
            if (k <= j) continue; // keep i < j < k
            lines.push_back(points_to_set({i + 1, j + 1, k + 1}));
        }
    return LinearSpace(11, std::move(lines));
}

namespace {

json load_entry_json(const std::string& dir, const std::string& name) {
    std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
    std::ifstream in(path);
    if (!in) fail(ErrorCode::unknown_name, "unknown catalog entry: " + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

LinearSpace entry_space(const json& j) {
    if (j.contains("generator")) {
        std::string gen = j["generator"].get<std::string>();
        if (gen == "mod-eleven") return mod_eleven_space();
        fail(ErrorCode::parse, "unknown catalog generator: " + gen);
    }
    if (j.value("closure_applied", false)) return closure(family_from_json(j.at("space")));
    return space_from_json(j.at("space"));
}

UnivarQ univar_from_text(const std::string& text) {
    Ring ring;
    ring.vars = {"x"};
    PolyQ p = poly_from_text(text, ring);
    UnivarQ out;
    for (const auto& t : p.terms) {
        size_t deg = t.m.e[0];
        if (out.size() <= deg) out.resize(deg + 1, mpq_class(0));
        out[deg] = t.c;
    }
    uq_normalize(out);
    return out;
}

} // namespace

std::vector<std::string> catalog_names(const std::string& dir) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& file : std::filesystem::directory_iterator(dir, ec)) {
        if (file.path().extension() == ".json") names.push_back(file.path().stem().string());
    }
    if (ec) fail(ErrorCode::invalid_argument, "cannot read catalog directory: " + dir);
    std::sort(names.begin(), names.end());
    return names;
}

CatalogEntry catalog_get(const std::string& dir, const std::string& name) {
    json j = load_entry_json(dir, name);
    CatalogEntry entry;
    entry.name = j.value("name", name);
    entry.description = j.value("description", "");
    entry.source = j.value("source", "");
    entry.space = entry_space(j);
    entry.raw = std::move(j);
    return entry;
}

VerifyReport catalog_verify(const std::string& dir, const std::string& name) {
    CatalogEntry entry = catalog_get(dir, name);
    const json expected = entry.raw.value("expected", json::object());
    VerifyReport report;
    report.name = name;

    auto record = [&](const std::string& fact, const std::string& want, const std::string& got) {
        VerifyCheck check{fact, want, got, want == got};
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    };
    auto record_int = [&](const std::string& fact, long want, long got) {
        record(fact, std::to_string(want), std::to_string(got));
    };

    record("validates", "true", validate_family(entry.space.as_family()) ? "false" : "true");

    if (expected.contains("superfiguration"))
        record("superfiguration", expected["superfiguration"].dump(),
               is_superfiguration(entry.space) ? "true" : "false");
    if (expected.contains("line_count"))
        record_int("line_count", expected["line_count"].get<long>(), entry.space.line_count());

    if (expected.contains("n_prime")) {
        std::optional<Framing> id = identity_framing(entry.space);
        if (!id) {
            record("n_prime", expected["n_prime"].dump(), "no identity framing");
        } else {
            record_int("n_prime", expected["n_prime"].get<long>(), id->n_prime);
            record_int("n_doubleprime", expected.value("n_doubleprime", 0), id->n_doubleprime);
        }
    }

    const bool wants_scheme = expected.contains("krull_dimension") ||
                              expected.contains("determinants_total") ||
                              expected.contains("quotient_dimension") || expected.contains("eliminant") ||
                              expected.contains("chart_counts");
    if (!wants_scheme) {
        if (expected.contains("realizable")) {
            for (auto& [key, value] : expected["realizable"].items()) {
                std::uint64_t p = std::stoull(key);
                auto scan = characteristic_scan(entry.space, {p});
                record("realizable@" + key, value.dump(), scan[p] ? "true" : "false");
            }
        }
        return report;
    }

    Framing preferred = preferred_framing(entry.space);
    if (expected.contains("determinants_total")) {
        DetIdeal det = build_ideal(preferred);
        record_int("determinants_total", expected["determinants_total"].get<long>(), det.determinants_total);
        record_int("determinants_trivial", expected.value("determinants_trivial", 0),
                   det.determinants_trivial);
    }

    if (expected.contains("krull_dimension_identity")) {
        SchemeAnalysis ia = analyze_framing(preferred);
        record_int("krull_dimension_identity", expected["krull_dimension_identity"].get<long>(),
                   ia.krull_dim);
    }

    BestFramingAnalysis best = analyze_space(entry.space);
    const SchemeAnalysis& analysis = best.analysis;

    if (expected.contains("krull_dimension"))
        record_int("krull_dimension", expected["krull_dimension"].get<long>(), analysis.krull_dim);
    if (expected.contains("krull_dimension_at_least")) {
        long bound = expected["krull_dimension_at_least"].get<long>();
        record("krull_dimension_at_least " + std::to_string(bound), "true",
               analysis.krull_dim >= bound ? "true" : "false");
    }
    if (expected.contains("quotient_dimension"))
        record_int("quotient_dimension", expected["quotient_dimension"].get<long>(),
                   analysis.krull_dim == 0 ? analysis.quotient_dim : -1);

    UnivarQ eliminant;
    if (expected.contains("eliminant")) {
        eliminant = univar_from_text(expected["eliminant"].get<std::string>());
        std::string how = "no match";
        if (analysis.krull_dim == 0) {
            for (const auto& [var, mp] : analysis.minimal_polys) {
                for (const UnivarQ& factor : factor_squarefree_rational(uq_squarefree_part(mp))) {
                    if (uq_degree(factor) != uq_degree(eliminant)) continue;
                    if (affine_equivalent(factor, eliminant) || same_field_fingerprint(factor, eliminant)) {
                        how = "matched";
                        break;
                    }
                }
                if (how == "matched") break;
            }
        }
        record("eliminant " + expected["eliminant"].get<std::string>(), "matched", how);
    }

    if (expected.contains("chart_counts")) {
        for (auto& [key, value] : expected["chart_counts"].items()) {
            std::uint64_t p = std::stoull(key);
            RealizationCount rc = count_chart_points(analysis.framing, p);
            record("chart_count@" + key, value.dump(), rc.count.get_str());
            // cross-check against the eliminant's roots when the scheme is a
            // single reduced point of that degree
            if (!eliminant.empty() && analysis.krull_dim == 0 &&
                analysis.quotient_dim == uq_degree(eliminant)) {
                auto roots = count_roots_mod_p(uz_from_q(eliminant), p);
                record("eliminant_roots@" + key, value.dump(),
                       roots ? std::to_string(*roots) : "degenerate");
            }
        }
    }

    if (expected.contains("realizable")) {
        std::vector<std::uint64_t> primes;
        for (auto& [key, value] : expected["realizable"].items()) primes.push_back(std::stoull(key));
        auto scan = characteristic_scan(entry.space, primes);
        for (auto& [key, value] : expected["realizable"].items())
            record("realizable@" + key, value.dump(), scan[std::stoull(key)] ? "true" : "false");
    }

    if (expected.contains("framed_strong")) {
        auto frame = first_combinatorial_frame(entry.space);
        for (auto& [key, value] : expected["framed_strong"].items()) {
            std::uint64_t p = std::stoull(key);
            RealizationCount rc = count_framed(entry.space, *frame, p, true);
            record("framed_strong@" + key, value.dump(), rc.count.get_str());
        }
    }

    return report;
}

json verify_report_json(const VerifyReport& report) {
    json j;
    j["name"] = report.name;
    j["pass"] = report.pass;
    json checks = json::array();
    for (const VerifyCheck& c : report.checks)
        checks.push_back({{"fact", c.fact}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    j["checks"] = std::move(checks);
    return j;
}

} // namespace lsreal

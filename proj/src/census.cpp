#include "census.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "canonical.hpp"
#include "jsonio.hpp"
#include "univariate.hpp"

namespace lsreal {

using nlohmann::json;

json CensusRow::to_json() const {
    json j;
    j["certificate"] = certificate;
    j["space"] = space;
    j["krull_dimension"] = krull_dim;
    if (krull_dim == 0) j["vector_space_dimension"] = quotient_dim;
    j["framings_tried"] = framings_tried;
    j["eliminant_factors"] = eliminant_factors;
    return j;
}

CensusRow CensusRow::from_json(const json& j) {
    CensusRow row;
    row.certificate = j.at("certificate").get<std::string>();
    row.space = j.at("space");
    row.krull_dim = j.at("krull_dimension").get<int>();
    row.quotient_dim = j.value("vector_space_dimension", -1);
    row.framings_tried = j.value("framings_tried", 0);
    for (const json& f : j.at("eliminant_factors")) row.eliminant_factors.push_back(f.get<std::string>());
    return row;
}

namespace {

std::string cache_key(const std::string& certificate) {
    // FNV-1a, stable across runs
    std::uint64_t h = 1469598103934665603ull;
    for (char c : certificate) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<CensusRow> cache_load(const std::string& dir, const std::string& certificate) {
    if (dir.empty()) return std::nullopt;
    std::filesystem::path path = std::filesystem::path(dir) / (cache_key(certificate) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    json j = json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    CensusRow row = CensusRow::from_json(j);
    if (row.certificate != certificate) return std::nullopt;
    return row;
}

void cache_store(const std::string& dir, const CensusRow& row) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path path = std::filesystem::path(dir) / (cache_key(row.certificate) + ".json");
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << row.to_json().dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

CensusRow analyze_row(const LinearSpace& space, const std::string& certificate,
                      std::uint64_t step_budget) {
    CensusRow row;
    row.certificate = certificate;
    row.space = space_to_json(space);
    BestFramingAnalysis best = analyze_space(space, step_budget);
    row.krull_dim = best.analysis.krull_dim;
    row.framings_tried = best.framings_tried;
    if (best.analysis.krull_dim == 0) {
        row.quotient_dim = best.analysis.quotient_dim;
        std::vector<UnivarQ> seen;
        for (const auto& [name, mp] : best.analysis.minimal_polys) {
            for (const UnivarQ& factor : factor_squarefree_rational(uq_squarefree_part(mp))) {
                bool dup = false;
                for (const UnivarQ& g : seen)
                    if (g == factor) { dup = true; break; }
                if (!dup) seen.push_back(factor);
            }
        }
        std::sort(seen.begin(), seen.end(), [](const UnivarQ& a, const UnivarQ& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        });
        for (const UnivarQ& f : seen) row.eliminant_factors.push_back(uq_to_text(f, "x"));
    }
    return row;
}

} // namespace

std::vector<CensusRow> run_census(const CensusOptions& options, const CensusSink& sink) {
    std::vector<LinearSpace> spaces = enumerate_linear_spaces(options.n, true, options.workers);
    std::vector<std::string> certificates;
    certificates.reserve(spaces.size());
    for (const LinearSpace& s : spaces) certificates.push_back(certificate_string(canonical_form(s).code));

    std::vector<CensusRow> rows(spaces.size());
    std::atomic<size_t> cursor{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;

    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= spaces.size()) return;
            try {
                if (std::optional<CensusRow> cached = cache_load(options.cache_dir, certificates[i])) {
                    rows[i] = std::move(*cached);
                } else {
                    rows[i] = analyze_row(spaces[i], certificates[i], options.step_budget);
                    cache_store(options.cache_dir, rows[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    int workers = options.workers > 0 ? options.workers
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(work);
        for (std::thread& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (sink)
        for (const CensusRow& row : rows) sink(row);
    return rows;
}

json census_summary_json(const std::vector<CensusRow>& rows) {
    json j;
    j["spaces"] = rows.size();
    std::map<int, int> dims;
    for (const CensusRow& row : rows) ++dims[row.krull_dim];
    json hist = json::object();
    for (auto [d, count] : dims) hist[std::to_string(d)] = count;
    j["dimension_histogram"] = std::move(hist);

    std::vector<std::string> factors;
    for (const CensusRow& row : rows)
        for (const std::string& f : row.eliminant_factors)
            if (std::find(factors.begin(), factors.end(), f) == factors.end()) factors.push_back(f);
    std::sort(factors.begin(), factors.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    j["eliminant_factors"] = std::move(factors);
    return j;
}

} // namespace lsreal

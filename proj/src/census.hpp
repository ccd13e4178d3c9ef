#ifndef LSREAL_CENSUS_HPP
#define LSREAL_CENSUS_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scheme.hpp"

namespace lsreal {

// Full pipeline over every superfiguration on n points: frame, ideal, basis,
// substitution simplification, dimension, and eliminant data. Rows cache on
// disk keyed by canonical certificate, so reruns are incremental.
struct CensusOptions {
    int n = 10;
    std::string cache_dir;           // empty disables caching
    int workers = 0;                 // 0 = hardware concurrency
    std::uint64_t step_budget = kDefaultStepBudget;
};

struct CensusRow {
    std::string certificate;
    nlohmann::json space;
    int krull_dim = 0;
    int quotient_dim = -1;           // vector space dimension when krull_dim == 0
    int framings_tried = 0;
    std::vector<std::string> eliminant_factors; // irreducible, deduplicated, ascending degree

    nlohmann::json to_json() const;
    static CensusRow from_json(const nlohmann::json& j);
};

using CensusSink = std::function<void(const CensusRow&)>;

std::vector<CensusRow> run_census(const CensusOptions& options, const CensusSink& sink = nullptr);

nlohmann::json census_summary_json(const std::vector<CensusRow>& rows);

} // namespace lsreal

#endif

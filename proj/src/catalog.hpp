#ifndef LSREAL_CATALOG_HPP
#define LSREAL_CATALOG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "linear_space.hpp"

namespace lsreal {

// Named configurations with machine-checkable expected facts, loaded from
// JSON files. The line lists follow the printed sources; entries flagged
// closure_applied store a raw family that closes to the operative space.
struct CatalogEntry {
    std::string name;
    std::string description;
    std::string source; // "literature" or "derived"
    LinearSpace space;
    nlohmann::json raw; // full entry, including "expected"
};

// env LSREAL_CATALOG_DIR, else the in-repo data directory
std::string default_catalog_dir();

std::vector<std::string> catalog_names(const std::string& dir);
CatalogEntry catalog_get(const std::string& dir, const std::string& name);

// The eleven-point space on residues mod 11 whose lines are the zero-sum
// triples; point i holds residue i-1.
LinearSpace mod_eleven_space();

struct VerifyCheck {
    std::string fact;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyReport {
    std::string name;
    std::vector<VerifyCheck> checks;
    bool pass = true;
};

VerifyReport catalog_verify(const std::string& dir, const std::string& name);
nlohmann::json verify_report_json(const VerifyReport& report);

} // namespace lsreal

#endif

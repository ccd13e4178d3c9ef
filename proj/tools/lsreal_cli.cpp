// Command line front end; everything goes through the C API in lsreal.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsreal.h"

namespace {

using nlohmann::json;

int exit_code(lsreal_status status) {
    switch (status) {
        case LSREAL_OK: return 0;
        case LSREAL_ERROR_MISMATCH: return 1;
        case LSREAL_ERROR_PARSE: return 2;
        case LSREAL_ERROR_INVALID: return 2;
        case LSREAL_ERROR_UNKNOWN: return 2;
        case LSREAL_ERROR_BUDGET: return 3;
        case LSREAL_ERROR_INTERNAL: return 4;
    }
    return 4;
}

[[noreturn]] void bail(lsreal_status status) {
    std::cerr << "error: " << lsreal_last_error() << "\n";
    std::exit(exit_code(status));
}

void check(lsreal_status status) {
    if (status != LSREAL_OK) bail(status);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { lsreal_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

struct OwnedSpace {
    lsreal_space* value = nullptr;
    ~OwnedSpace() { lsreal_space_free(value); }
};

OwnedSpace parse_space(const std::string& text) {
    OwnedSpace space;
    check(lsreal_space_parse(text.c_str(), &space.value));
    return space;
}

void emit(const std::string& text) { std::cout << text << "\n"; }

std::vector<std::uint64_t> parse_primes(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of linear spaces and their realization schemes"};
    app.set_version_flag("--version", lsreal_version());
    app.require_subcommand(1);

    std::string input = "-";
    std::string catalog_dir;
    std::string catalog_name;
    std::string mode = "chart";
    std::string order = "degrevlex";
    std::string cache_dir;
    std::string primes_csv = "2,3,5,7,11,13";
    std::string frame_csv;
    std::uint64_t q = 2;
    std::uint64_t budget = 0;
    int n = 10;
    int workers = 0;
    int at_point = 0;
    bool superfigurations = false;
    bool naive = false;
    bool single_step = false;
    bool optimize_frames = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the linear space axioms on a family");
    add_input(validate);

    CLI::App* closure_cmd = app.add_subcommand("closure", "minimal linear space above a family");
    add_input(closure_cmd);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "one representative per isomorphism class");
    enumerate_cmd->add_option("--n", n, "number of points")->required();
    enumerate_cmd->add_flag("--superfigurations", superfigurations, "superfigurations only");
    enumerate_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "iterated reduction at low-degree points");
    add_input(reduce_cmd);
    reduce_cmd->add_flag("--step", single_step, "perform a single step");
    reduce_cmd->add_option("--at", at_point, "remove this point (with --step)");

    CLI::App* frame_cmd = app.add_subcommand("frame", "order a superfiguration behind a V-shaped frame");
    add_input(frame_cmd);

    CLI::App* ideal_cmd = app.add_subcommand("ideal", "determinant ideal of a framed superfiguration");
    add_input(ideal_cmd);
    ideal_cmd->add_option("--catalog", catalog_name, "use a catalog entry instead of input");
    ideal_cmd->add_option("--catalog-dir", catalog_dir, "catalog directory");

    CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_input(gb_cmd);
    gb_cmd->add_option("--order", order, "degrevlex | lex | elim:<k>");
    gb_cmd->add_option("--budget", budget, "reduction step budget");

    CLI::App* eliminate_cmd = app.add_subcommand("eliminate", "substitute away linear variables");
    add_input(eliminate_cmd);

    CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension from a basis");
    add_input(dim_cmd);

    CLI::App* summary_cmd = app.add_subcommand("summary", "zero-dimensional quotient data from a basis");
    add_input(summary_cmd);

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline: frame, ideal, basis, dimension");
    add_input(analyze_cmd);
    analyze_cmd->add_flag("--optimize-frames", optimize_frames,
                          "search every V-shaped frame for the smallest scheme");
    analyze_cmd->add_option("--budget", budget, "reduction step budget");

    CLI::App* count_cmd = app.add_subcommand("count", "exact realization counts over a prime field");
    count_cmd->add_option("--space", input, "space or framing file");
    count_cmd->add_option("--q", q, "field size (prime)")->required();
    count_cmd->add_option("--mode", mode, "chart | framed-weak | framed-strong | strong-total");
    count_cmd->add_option("--frame", frame_csv, "four comma-separated points");
    count_cmd->add_flag("--naive", naive, "use the exhaustive oracle");

    CLI::App* scan_cmd = app.add_subcommand("scan", "strong realizability per characteristic");
    scan_cmd->add_option("--space", input, "space file");
    scan_cmd->add_option("--primes", primes_csv, "comma-separated primes");

    CLI::App* census_cmd = app.add_subcommand("census", "pipeline over every superfiguration on n points");
    census_cmd->add_option("--n", n, "number of points");
    census_cmd->add_option("--cache-dir", cache_dir, "cache directory (default $LSREAL_CACHE_DIR)");
    census_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
    census_cmd->add_option("--budget", budget, "reduction step budget");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "named configurations with expected facts");
    catalog_cmd->require_subcommand(1);
    CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "entry names");
    CLI::App* catalog_get = catalog_cmd->add_subcommand("get", "one entry");
    catalog_get->add_option("name", catalog_name, "entry name")->required();
    CLI::App* catalog_verify = catalog_cmd->add_subcommand("verify", "recompute and diff expected facts");
    catalog_verify->add_option("name", catalog_name, "entry name (default: all)");
    for (CLI::App* cmd : {catalog_list, catalog_get, catalog_verify})
        cmd->add_option("--dir", catalog_dir, "catalog directory");

    CLI11_PARSE(app, argc, argv);

    if (*validate) {
        OwnedString report;
        check(lsreal_validate(read_input(input).c_str(), &report.value));
        emit(report.str());
        return json::parse(report.str())["valid"].get<bool>() ? 0 : 1;
    }
    if (*closure_cmd) {
        OwnedSpace space;
        check(lsreal_space_close(read_input(input).c_str(), &space.value));
        OwnedString out;
        check(lsreal_space_json(space.value, &out.value));
        emit(out.str());
        return 0;
    }
    if (*enumerate_cmd) {
        lsreal_enum* stream = nullptr;
        check(lsreal_enum_new(n, superfigurations ? 1 : 0, workers, &stream));
        for (;;) {
            OwnedString line;
            lsreal_status status = lsreal_enum_next(stream, &line.value);
            if (status != LSREAL_OK) {
                lsreal_enum_free(stream);
                bail(status);
            }
            if (!line.value) break;
            emit(line.str());
        }
        lsreal_enum_free(stream);
        return 0;
    }
    if (*reduce_cmd) {
        OwnedSpace space = parse_space(read_input(input));
        OwnedString out;
        if (single_step)
            check(lsreal_glynn_reduce(space.value, at_point, &out.value));
        else
            check(lsreal_reduce_fully(space.value, &out.value));
        emit(out.str());
        return 0;
    }
    if (*frame_cmd) {
        OwnedSpace space = parse_space(read_input(input));
        OwnedString out;
        check(lsreal_frame(space.value, &out.value));
        emit(out.str());
        return 0;
    }
    if (*ideal_cmd) {
        std::string framing_text;
        if (!catalog_name.empty()) {
            OwnedString entry;
            check(lsreal_catalog_entry(catalog_dir.empty() ? nullptr : catalog_dir.c_str(),
                                       catalog_name.c_str(), &entry.value));
            json space_json = json::parse(entry.str())["resolved_space"];
            OwnedSpace space = parse_space(space_json.dump());
            OwnedString framing;
            check(lsreal_frame(space.value, &framing.value));
            framing_text = framing.str();
        } else {
            std::string text = read_input(input);
            json parsed = json::parse(text, nullptr, false);
            if (!parsed.is_discarded() && parsed.contains("n_prime")) {
                framing_text = text;
            } else {
                OwnedSpace space = parse_space(text);
                OwnedString framing;
                check(lsreal_frame(space.value, &framing.value));
                framing_text = framing.str();
            }
        }
        OwnedString out;
        check(lsreal_ideal(framing_text.c_str(), &out.value));
        emit(out.str());
        return 0;
    }
    if (*gb_cmd) {
        OwnedString out;
        check(lsreal_groebner(read_input(input).c_str(), order.c_str(), budget, &out.value));
        emit(out.str());
        return 0;
    }
    if (*eliminate_cmd) {
        OwnedString out;
        check(lsreal_eliminate(read_input(input).c_str(), &out.value));
        emit(out.str());
        return 0;
    }
    if (*dim_cmd) {
        int dim = 0;
        check(lsreal_dimension(read_input(input).c_str(), &dim));
        emit(json{{"krull_dimension", dim}}.dump());
        return 0;
    }
    if (*summary_cmd) {
        OwnedString out;
        check(lsreal_summary(read_input(input).c_str(), &out.value));
        emit(out.str());
        return 0;
    }
    if (*analyze_cmd) {
        OwnedSpace space = parse_space(read_input(input));
        OwnedString out;
        check(lsreal_analyze(space.value, optimize_frames ? 1 : 0, budget, &out.value));
        emit(out.str());
        return 0;
    }
    if (*count_cmd) {
        std::string text = read_input(input);
        json parsed = json::parse(text, nullptr, false);
        if (parsed.is_discarded()) {
            std::cerr << "error: malformed input\n";
            return 2;
        }
        OwnedString out;
        std::vector<int> frame;
        const int* frame_ptr = nullptr;
        if (!frame_csv.empty()) {
            for (std::uint64_t v : parse_primes(frame_csv)) frame.push_back(static_cast<int>(v));
            if (frame.size() != 4) {
                std::cerr << "error: --frame needs four points\n";
                return 2;
            }
            frame_ptr = frame.data();
        }
        if (parsed.contains("n_prime")) {
            check(lsreal_count(nullptr, text.c_str(), q, mode.c_str(), frame_ptr, naive ? 1 : 0,
                               &out.value));
        } else {
            OwnedSpace space = parse_space(text);
            check(lsreal_count(space.value, nullptr, q, mode.c_str(), frame_ptr, naive ? 1 : 0,
                               &out.value));
        }
        emit(out.str());
        return 0;
    }
    if (*scan_cmd) {
        OwnedSpace space = parse_space(read_input(input));
        std::vector<std::uint64_t> primes = parse_primes(primes_csv);
        OwnedString out;
        check(lsreal_scan(space.value, primes.data(), static_cast<int>(primes.size()), &out.value));
        emit(out.str());
        return 0;
    }
    if (*census_cmd) {
        if (cache_dir.empty()) {
            if (const char* env = std::getenv("LSREAL_CACHE_DIR")) cache_dir = env;
        }
        OwnedString summary;
        auto print_row = [](const char* line, void*) { std::cout << line << "\n"; };
        check(lsreal_census(n, cache_dir.empty() ? nullptr : cache_dir.c_str(), workers, budget,
                            print_row, nullptr, &summary.value));
        emit(summary.str());
        return 0;
    }
    if (*catalog_cmd) {
        const char* dir = catalog_dir.empty() ? nullptr : catalog_dir.c_str();
        if (*catalog_list) {
            OwnedString out;
            check(lsreal_catalog_list(dir, &out.value));
            emit(out.str());
            return 0;
        }
        if (*catalog_get) {
            OwnedString out;
            check(lsreal_catalog_entry(dir, catalog_name.c_str(), &out.value));
            emit(out.str());
            return 0;
        }
        OwnedString out;
        lsreal_status status =
            lsreal_catalog_verify(dir, catalog_name.empty() ? nullptr : catalog_name.c_str(), &out.value);
        if (out.value) emit(out.str());
        if (status != LSREAL_OK && status != LSREAL_ERROR_MISMATCH) bail(status);
        return status == LSREAL_OK ? 0 : 1;
    }
    return 2;
}

#ifndef LSREAL_COUNTING_HPP
#define LSREAL_COUNTING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "enumerate.hpp"
#include "fpplane.hpp"

namespace lsreal {

enum class CountMode { chart, framed_weak, framed_strong, strong_total };

std::string count_mode_name(CountMode mode);
CountMode count_mode_from_name(const std::string& name);

struct RealizationCount {
    std::uint64_t q = 0;
    CountMode mode = CountMode::chart;
    mpz_class count;
    double elapsed_ms = 0.0;
};

using SolutionSink = std::function<void(const std::vector<int>&)>; // point -> plane index

// F_q-points of the affine scheme of a framed superfiguration: frame columns
// pinned, free points ranging over their charts, candidates propagated
// through the lines already determined by two placed points.
RealizationCount count_chart_points(const Framing& framing, std::uint64_t q,
                                    const SolutionSink& sink = nullptr);

// Framed weak/strong realizations: the frame is pinned to the standard frame
// and the remaining points range over all of P^2(F_q). Strong mode enforces
// injectivity and exact collinearity.
RealizationCount count_framed(const LinearSpace& s, const std::array<int, 4>& frame,
                              std::uint64_t q, bool strong, const SolutionSink& sink = nullptr,
                              std::uint64_t stop_after = 0);

mpz_class pgl3_order(std::uint64_t q);

// framed-strong count times |PGL_3(F_q)|; independent of frame choice
RealizationCount strong_total(const LinearSpace& s, std::uint64_t q);

// strong realizability per prime (framed-strong count > 0)
std::map<std::uint64_t, bool> characteristic_scan(const LinearSpace& s,
                                                  const std::vector<std::uint64_t>& primes);

// Full enumeration with no propagation; the independent oracle. Fails when
// the assignment space exceeds the cap.
RealizationCount naive_count_oracle(const LinearSpace& s, std::uint64_t q, CountMode mode,
                                    std::optional<std::array<int, 4>> frame = std::nullopt,
                                    const Framing* framing = nullptr,
                                    double cap = 1e8);

} // namespace lsreal

#endif

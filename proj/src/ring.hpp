#ifndef LSREAL_RING_HPP
#define LSREAL_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace lsreal {

// Ambient polynomial ring descriptor: coefficient field plus variable names.
struct Ring {
    enum class Coeff { rational, prime };
    Coeff coeff = Coeff::rational;
    std::uint64_t p = 0; // modulus when coeff == prime
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }

    std::string coeff_name() const {
        return coeff == Coeff::rational ? "Q" : "Fp:" + std::to_string(p);
    }
    static Ring with_coeff_name(const std::string& name, std::vector<std::string> vars) {
        Ring r;
        r.vars = std::move(vars);
        if (name == "Q") {
            r.coeff = Coeff::rational;
        } else if (name.rfind("Fp:", 0) == 0) {
            r.coeff = Coeff::prime;
            r.p = std::stoull(name.substr(3));
        } else {
            fail(ErrorCode::parse, "unknown coefficient field: " + name);
        }
        return r;
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

// Standard variable names for a framed superfiguration: y1..yn', z1..zn',
// w1..wn''.
inline Ring framed_ring(int n_prime, int n_doubleprime) {
    Ring r;
    for (int j = 1; j <= n_prime; ++j) r.vars.push_back("y" + std::to_string(j));
    for (int j = 1; j <= n_prime; ++j) r.vars.push_back("z" + std::to_string(j));
    for (int j = 1; j <= n_doubleprime; ++j) r.vars.push_back("w" + std::to_string(j));
    if (r.nvars() > 16) fail(ErrorCode::invalid_argument, "too many variables for the polynomial kernel");
    return r;
}

} // namespace lsreal

#endif

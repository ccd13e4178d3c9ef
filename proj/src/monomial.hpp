#ifndef LSREAL_MONOMIAL_HPP
#define LSREAL_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace lsreal {

constexpr int kMaxVars = 16;

// Exponent vector, zero-padded to kMaxVars. The ambient variable count lives
// in the ring context.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    bool operator==(const Monomial&) const = default;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint16_t>(power);
        m.deg = static_cast<std::uint32_t>(power);
        return m;
    }
    bool is_constant() const { return deg == 0; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            std::uint32_t sum = static_cast<std::uint32_t>(e[i]) + o.e[i];
            if (sum > 0xffff) fail(ErrorCode::budget, "monomial exponent overflow");
            r.e[i] = static_cast<std::uint16_t>(sum);
        }
        r.deg = deg + o.deg;
        return r;
    }
    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const { // this / o, assuming divisibility
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
};

struct MonomialOrder {
    enum class Kind { degrevlex, lex, elim };
    Kind kind = Kind::degrevlex;
    int nvars = 0;
    int block = 0; // elim: the first `block` variables are eliminated first

    static MonomialOrder make_degrevlex(int nvars) { return {Kind::degrevlex, nvars, 0}; }
    static MonomialOrder make_lex(int nvars) { return {Kind::lex, nvars, 0}; }
    static MonomialOrder make_elim(int nvars, int block) { return {Kind::elim, nvars, block}; }

    // total degree, ties by reverse lexicographic: a > b when the last
    // nonzero entry of a-b is negative
    static int cmp_degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        std::uint32_t da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }

    // returns -1, 0, 1 for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex:
                for (int i = 0; i < nvars; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            case Kind::degrevlex:
                return cmp_degrevlex(a, b, 0, nvars);
            case Kind::elim: {
                int c = cmp_degrevlex(a, b, 0, block);
                if (c) return c;
                return cmp_degrevlex(a, b, block, nvars);
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const {
        switch (kind) {
            case Kind::degrevlex: return "degrevlex";
            case Kind::lex: return "lex";
            case Kind::elim: return "elim:" + std::to_string(block);
        }
        return "";
    }
    static MonomialOrder from_name(const std::string& name, int nvars) {
        if (name == "degrevlex" || name.empty()) return make_degrevlex(nvars);
        if (name == "lex") return make_lex(nvars);
        if (name.rfind("elim:", 0) == 0) {
            int block = std::stoi(name.substr(5));
            if (block < 0 || block > nvars) fail(ErrorCode::invalid_argument, "bad elimination block");
            return make_elim(nvars, block);
        }
        fail(ErrorCode::invalid_argument, "unknown monomial order: " + name);
    }
};

} // namespace lsreal

#endif

#include "canonical.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace lsreal {

namespace {

// Partition-refinement + individualization search for the lexicographically
// least line-set encoding over all relabelings. Colors are ranks of
// isomorphism-invariant keys, so the refined partition and the class order
// do not depend on the input labeling.
struct Canonizer {
    int n;
    std::vector<PointSet> lines;
    std::vector<std::vector<int>> lines_of_point; // 0-based point -> line indices

    std::vector<std::uint32_t> best;       // best line encoding so far
    bool have_best = false;
    std::vector<std::vector<int>> best_perms; // colors vectors achieving best
    std::vector<std::vector<int>> twin_gens;  // transpositions found via symmetric classes

    explicit Canonizer(const LinearSpace& s) : n(s.n()), lines(s.lines()) {
        lines_of_point.resize(n);
        for (size_t li = 0; li < lines.size(); ++li)
            for_each_point(lines[li], [&](int p) { lines_of_point[p - 1].push_back(static_cast<int>(li)); });
    }

    // Ranks arbitrary comparable keys into colors 0..k-1.
    template <class Key>
    static void rank_keys(const std::vector<Key>& keys, std::vector<int>& colors) {
        std::vector<int> idx(keys.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        int color = 0;
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++color;
            colors[idx[i]] = color;
        }
    }

    std::vector<int> initial_colors() const {
        std::vector<std::vector<int>> keys(n);
        for (int p = 0; p < n; ++p) {
            std::vector<int> sizes;
            for (int li : lines_of_point[p]) sizes.push_back(set_size(lines[li]));
            std::sort(sizes.begin(), sizes.end());
            keys[p].push_back(static_cast<int>(sizes.size()));
            keys[p].insert(keys[p].end(), sizes.begin(), sizes.end());
        }
        std::vector<int> colors(n);
        rank_keys(keys, colors);
        return colors;
    }

    void refine(std::vector<int>& colors) const {
        for (;;) {
            // Line keys: (size, sorted colors of points on the line).
            std::vector<std::vector<int>> line_keys(lines.size());
            for (size_t li = 0; li < lines.size(); ++li) {
                std::vector<int>& k = line_keys[li];
                k.push_back(set_size(lines[li]));
                for_each_point(lines[li], [&](int p) { k.push_back(colors[p - 1]); });
                std::sort(k.begin() + 1, k.end());
            }
            std::vector<int> line_colors(lines.size());
            rank_keys(line_keys, line_colors);

            std::vector<std::vector<int>> keys(n);
            for (int p = 0; p < n; ++p) {
                std::vector<int>& k = keys[p];
                k.push_back(colors[p]);
                std::vector<int> lc;
                for (int li : lines_of_point[p]) lc.push_back(line_colors[li]);
                std::sort(lc.begin(), lc.end());
                k.insert(k.end(), lc.begin(), lc.end());
            }
            std::vector<int> next(n);
            rank_keys(keys, next);
            if (next == colors) return;
            colors.swap(next);
        }
    }

    // True when swapping points a and b (1-based) maps the line set to itself.
    bool transposition_is_automorphism(int a, int b) const {
        PointSet pair = with_point(with_point(0, a), b);
        for (PointSet line : lines) {
            PointSet hit = line & pair;
            if (set_size(hit) == 1) {
                PointSet image = line ^ pair;
                if (!std::binary_search(lines.begin(), lines.end(), image)) return false;
            }
        }
        return true;
    }

    // Members of the first class with >= 2 points, or empty when discrete.
    std::vector<int> first_nonsingleton_class(const std::vector<int>& colors) const {
        int target = -1;
        std::vector<int> counts(n, 0);
        for (int c : colors) ++counts[c];
        for (int c = 0; c < n; ++c)
            if (counts[c] >= 2) { target = c; break; }
        std::vector<int> members;
        if (target < 0) return members;
        for (int p = 0; p < n; ++p)
            if (colors[p] == target) members.push_back(p);
        return members;
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<std::uint32_t> enc;
        enc.reserve(lines.size());
        for (PointSet line : lines) {
            PointSet image = 0;
            for_each_point(line, [&](int p) { image = with_point(image, colors[p - 1] + 1); });
            enc.push_back(image);
        }
        std::sort(enc.begin(), enc.end());
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
            best_perms.clear();
            best_perms.push_back(colors);
        } else if (enc == best) {
            best_perms.push_back(colors);
        }
    }

    void search(std::vector<int> colors) {
        refine(colors);
        std::vector<int> cell = first_nonsingleton_class(colors);
        if (cell.empty()) {
            leaf(colors);
            return;
        }
        bool symmetric = true;
        for (size_t i = 0; i + 1 < cell.size() && symmetric; ++i)
            symmetric = transposition_is_automorphism(cell[i] + 1, cell[i + 1] + 1);
        if (symmetric) {
            for (size_t i = 0; i + 1 < cell.size(); ++i) {
                std::vector<int> gen(n);
                for (int p = 0; p < n; ++p) gen[p] = p + 1;
                std::swap(gen[cell[i]], gen[cell[i + 1]]);
                twin_gens.push_back(std::move(gen));
            }
            // The whole class is mutually interchangeable; fixing ascending
            // order explores one representative per automorphism orbit.
            int base = colors[cell[0]];
            int k = static_cast<int>(cell.size());
            std::vector<int> next = colors;
            for (int p = 0; p < n; ++p)
                if (next[p] > base) next[p] += k - 1;
            for (int i = 0; i < k; ++i) next[cell[i]] = base + i;
            search(std::move(next));
            return;
        }
        int base = colors[cell[0]];
        for (int target : cell) {
            std::vector<int> next = colors;
            for (int p = 0; p < n; ++p)
                if (next[p] >= base && p != target) ++next[p];
            next[target] = base;
            search(std::move(next));
        }
    }
};

} // namespace

CanonicalResult canonical_form(const LinearSpace& s) {
    Canonizer cz(s);
    cz.search(cz.initial_colors());

    CanonicalResult result;
    result.code.push_back(static_cast<std::uint32_t>(s.n()));
    result.code.push_back(static_cast<std::uint32_t>(s.lines().size()));
    result.code.insert(result.code.end(), cz.best.begin(), cz.best.end());

    const std::vector<int>& first = cz.best_perms.front();
    result.to_canonical.resize(s.n());
    for (int p = 0; p < s.n(); ++p) result.to_canonical[p] = first[p] + 1;

    // inverse of the first best labeling, for composing automorphisms
    std::vector<int> inv(s.n());
    for (int p = 0; p < s.n(); ++p) inv[first[p]] = p;
    for (size_t i = 1; i < cz.best_perms.size(); ++i) {
        const std::vector<int>& other = cz.best_perms[i];
        std::vector<int> aut(s.n());
        for (int p = 0; p < s.n(); ++p) aut[p] = inv[other[p]] + 1;
        result.automorphisms.push_back(std::move(aut));
    }
    for (auto& gen : cz.twin_gens) result.automorphisms.push_back(std::move(gen));
    return result;
}

LinearSpace canonical_representative(const LinearSpace& s) {
    CanonicalResult c = canonical_form(s);
    return relabel(s, c.to_canonical);
}

std::string certificate_string(const std::vector<std::uint32_t>& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 7);
    for (size_t i = 0; i < code.size(); ++i) {
        if (i) out.push_back(i < 2 ? '|' : '.');
        std::uint32_t v = code[i];
        char buf[6];
        for (int d = 5; d >= 0; --d) {
            buf[d] = digits[v & 0xf];
            v >>= 4;
        }
        out.append(buf, 6);
    }
    return out;
}

std::optional<std::vector<int>> isomorphism_witness(const LinearSpace& a, const LinearSpace& b) {
    if (a.n() != b.n() || a.lines().size() != b.lines().size()) return std::nullopt;
    CanonicalResult ca = canonical_form(a);
    CanonicalResult cb = canonical_form(b);
    if (ca.code != cb.code) return std::nullopt;
    std::vector<int> inv_b(b.n());
    for (int p = 0; p < b.n(); ++p) inv_b[cb.to_canonical[p] - 1] = p + 1;
    std::vector<int> witness(a.n());
    for (int p = 0; p < a.n(); ++p) witness[p] = inv_b[ca.to_canonical[p] - 1];

    // verify: the witness must carry lines onto lines
    std::vector<PointSet> mapped;
    for (PointSet line : a.lines()) {
        PointSet image = 0;
        for_each_point(line, [&](int p) { image = with_point(image, witness[p - 1]); });
        mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.lines()) fail(ErrorCode::internal, "isomorphism witness failed verification");
    return witness;
}

} // namespace lsreal

#include "fpplane.hpp"

#include <algorithm>

#include "error.hpp"

namespace lsreal {

ProjPlane::ProjPlane(std::uint64_t q_prime) : field_(q_prime) {}

ProjPlane::Coords ProjPlane::coords(int index) const {
    const std::uint64_t q = field_.p;
    if (index == 0) return {0, 0, 1};
    if (index <= static_cast<int>(q)) return {0, 1, static_cast<std::uint64_t>(index - 1)};
    std::uint64_t rest = static_cast<std::uint64_t>(index) - q - 1;
    return {1, rest / q, rest % q};
}

int ProjPlane::index(const Coords& raw) const {
    const std::uint64_t q = field_.p;
    Coords c = raw;
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (c[i] % q != 0) { lead = i; break; }
    if (lead < 0) fail(ErrorCode::invalid_argument, "zero vector is not a projective point");
    std::uint64_t inv = field_.inv(c[lead] % q);
    for (auto& v : c) v = field_.mul(v % q, inv);
    if (lead == 0) return static_cast<int>(q + 1 + c[1] * q + c[2]);
    if (lead == 1) return static_cast<int>(1 + c[2]);
    return 0;
}

std::array<int, 4> ProjPlane::standard_frame() const {
    return {index({0, 0, 1}), index({0, 1, 0}), index({1, 1, 1}), index({1, 0, 0})};
}

ProjPlane::Coords ProjPlane::line_through(int a, int b) const {
    Coords u = coords(a), v = coords(b);
    Coords cross = {field_.sub(field_.mul(u[1], v[2]), field_.mul(u[2], v[1])),
                    field_.sub(field_.mul(u[2], v[0]), field_.mul(u[0], v[2])),
                    field_.sub(field_.mul(u[0], v[1]), field_.mul(u[1], v[0]))};
    if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0)
        fail(ErrorCode::invalid_argument, "line through coincident points is undefined");
    return cross;
}

bool ProjPlane::on_line(const Coords& line, int point) const {
    Coords p = coords(point);
    std::uint64_t dot =
        field_.add(field_.add(field_.mul(line[0], p[0]), field_.mul(line[1], p[1])), field_.mul(line[2], p[2]));
    return dot == 0;
}

std::vector<int> ProjPlane::points_on_line(const Coords& line) const {
    // kernel basis of the 1x3 system
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (line[i] != 0) { pivot = i; break; }
    if (pivot < 0) fail(ErrorCode::invalid_argument, "zero vector is not a line");
    std::uint64_t inv = field_.inv(line[pivot]);
    Coords u{}, v{};
    int free1 = (pivot + 1) % 3, free2 = (pivot + 2) % 3;
    u[free1] = 1;
    u[pivot] = field_.neg(field_.mul(line[free1], inv));
    v[free2] = 1;
    v[pivot] = field_.neg(field_.mul(line[free2], inv));

    std::vector<int> out;
    out.reserve(field_.p + 1);
    out.push_back(index(v));
    for (std::uint64_t t = 0; t < field_.p; ++t) {
        Coords w = {field_.add(u[0], field_.mul(t, v[0])), field_.add(u[1], field_.mul(t, v[1])),
                    field_.add(u[2], field_.mul(t, v[2]))};
        out.push_back(index(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ProjPlane::proportional(const Coords& a, const Coords& b, const PrimeField& f) {
    return f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])) == 0 &&
           f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])) == 0 &&
           f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])) == 0;
}

int ProjPlane::meet(const Coords& l1, const Coords& l2) const {
    Coords cross = {field_.sub(field_.mul(l1[1], l2[2]), field_.mul(l1[2], l2[1])),
                    field_.sub(field_.mul(l1[2], l2[0]), field_.mul(l1[0], l2[2])),
                    field_.sub(field_.mul(l1[0], l2[1]), field_.mul(l1[1], l2[0]))};
    return index(cross);
}

} // namespace lsreal

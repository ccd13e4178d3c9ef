#include "jsonio.hpp"

#include <algorithm>

#include "error.hpp"

namespace lsreal {

using nlohmann::json;

json points_json(PointSet s) {
    json arr = json::array();
    for_each_point(s, [&](int p) { arr.push_back(p); });
    return arr;
}

json space_to_json(const LinearSpace& s) {
    json j;
    j["n"] = s.n();
    json lines = json::array();
    for (PointSet line : s.lines()) lines.push_back(points_json(line));
    j["lines"] = std::move(lines);
    return j;
}

namespace {

PointSet member_from_json(const json& arr, int n) {
    if (!arr.is_array()) fail(ErrorCode::parse, "line must be an array of point indices");
    PointSet mask = 0;
    for (const json& v : arr) {
        if (!v.is_number_integer()) fail(ErrorCode::parse, "point index must be an integer");
        int p = v.get<int>();
        if (p < 1 || p > n) fail(ErrorCode::parse, "point index out of range");
        if (contains(mask, p)) fail(ErrorCode::parse, "repeated point index in line");
        mask = with_point(mask, p);
    }
    return mask;
}

std::pair<int, std::vector<PointSet>> read_members(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("lines"))
        fail(ErrorCode::parse, "expected an object with \"n\" and \"lines\"");
    if (!j["n"].is_number_integer()) fail(ErrorCode::parse, "\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxPoints) fail(ErrorCode::parse, "\"n\" out of supported range");
    if (!j["lines"].is_array()) fail(ErrorCode::parse, "\"lines\" must be an array");
    std::vector<PointSet> members;
    for (const json& arr : j["lines"]) members.push_back(member_from_json(arr, n));
    return {n, std::move(members)};
}

} // namespace

LinearSpace space_from_json(const json& j) {
    auto [n, members] = read_members(j);
    // reading a space is strict: members must already be full lines
    try {
        return LinearSpace(n, std::move(members));
    } catch (const Error& e) {
        fail(ErrorCode::parse, std::string("not a linear space: ") + e.what());
    }
}

json family_to_json(const CollinearityFamily& f) {
    json j;
    j["n"] = f.n;
    json lines = json::array();
    std::vector<PointSet> sorted = f.members;
    std::sort(sorted.begin(), sorted.end());
    for (PointSet m : sorted) lines.push_back(points_json(m));
    j["lines"] = std::move(lines);
    return j;
}

CollinearityFamily family_from_json(const json& j) {
    auto [n, members] = read_members(j);
    return CollinearityFamily{n, std::move(members)};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse, "malformed JSON");
    return j;
}

} // namespace lsreal

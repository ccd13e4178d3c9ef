#ifndef LSREAL_JSONIO_HPP
#define LSREAL_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "linear_space.hpp"

namespace lsreal {

// Interchange format: {"n": <int>, "lines": [[i,j,k,...], ...]} with 1-based
// sorted point indices.

nlohmann::json space_to_json(const LinearSpace& s);
LinearSpace space_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const CollinearityFamily& f);
CollinearityFamily family_from_json(const nlohmann::json& j);

nlohmann::json points_json(PointSet s);

// Wraps nlohmann parse errors into Error(parse).
nlohmann::json parse_json(const std::string& text);

} // namespace lsreal

#endif

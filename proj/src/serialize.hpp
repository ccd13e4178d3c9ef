#ifndef LSREAL_SERIALIZE_HPP
#define LSREAL_SERIALIZE_HPP

#include <json.hpp>

#include "counting.hpp"
#include "scheme.hpp"

namespace lsreal {

// JSON forms of the pipeline objects. Polynomials travel as text in the
// ring's variables; rings as {"coeff": "Q"|"Fp:<p>", "vars": [...]}.

nlohmann::json ring_to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& j);

nlohmann::json framing_to_json(const Framing& framing);
Framing framing_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const IdealQ& ideal);
IdealQ ideal_from_json(const nlohmann::json& j);

nlohmann::json det_ideal_to_json(const DetIdeal& det);

nlohmann::json gb_to_json(const GroebnerBasis<RationalField>& gb, const Ring& ring);
// returns the ring alongside the basis
std::pair<GroebnerBasis<RationalField>, Ring> gb_from_json(const nlohmann::json& j);

nlohmann::json analysis_to_json(const SchemeAnalysis& analysis);

nlohmann::json count_to_json(const RealizationCount& rc);

} // namespace lsreal

#endif

#include "serialize.hpp"

#include "jsonio.hpp"
#include "poly_text.hpp"
#include "univariate.hpp"

namespace lsreal {

using nlohmann::json;

json ring_to_json(const Ring& ring) {
    return json{{"coeff", ring.coeff_name()}, {"vars", ring.vars}};
}

Ring ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("vars"))
        fail(ErrorCode::parse, "ring needs \"coeff\" and \"vars\"");
    std::vector<std::string> vars;
    for (const json& v : j["vars"]) vars.push_back(v.get<std::string>());
    if (static_cast<int>(vars.size()) > kMaxVars) fail(ErrorCode::parse, "too many variables");
    return Ring::with_coeff_name(j["coeff"].get<std::string>(), std::move(vars));
}

json framing_to_json(const Framing& framing) {
    json j;
    j["space"] = space_to_json(framing.space);
    j["n_prime"] = framing.n_prime;
    j["n_doubleprime"] = framing.n_doubleprime;
    j["ordering"] = framing.ordering;
    return j;
}

Framing framing_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("n_prime"))
        fail(ErrorCode::parse, "framing needs \"space\" and \"n_prime\"");
    Framing framing;
    framing.space = space_from_json(j["space"]);
    framing.n_prime = j["n_prime"].get<int>();
    framing.n_doubleprime = j.value("n_doubleprime", 0);
    if (j.contains("ordering"))
        framing.ordering = j["ordering"].get<std::vector<int>>();
    else {
        framing.ordering.resize(framing.space.n());
        for (int p = 1; p <= framing.space.n(); ++p) framing.ordering[p - 1] = p;
    }
    // the stored space must actually satisfy the framing conventions
    std::optional<Framing> id = identity_framing(framing.space);
    if (!id || id->n_prime != framing.n_prime || id->n_doubleprime != framing.n_doubleprime)
        fail(ErrorCode::parse, "framing does not satisfy the ordering conventions");
    return framing;
}

json ideal_to_json(const IdealQ& ideal) {
    json j;
    j["ring"] = ring_to_json(ideal.ring);
    json gens = json::array();
    for (const PolyQ& g : ideal.generators) gens.push_back(poly_to_text(g, ideal.ring));
    j["generators"] = std::move(gens);
    return j;
}

IdealQ ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("generators"))
        fail(ErrorCode::parse, "ideal needs \"ring\" and \"generators\"");
    IdealQ ideal;
    ideal.ring = ring_from_json(j["ring"]);
    if (ideal.ring.coeff != Ring::Coeff::rational)
        fail(ErrorCode::parse, "only rational coefficients are supported here");
    for (const json& g : j["generators"])
        ideal.generators.push_back(poly_from_text(g.get<std::string>(), ideal.ring));
    return ideal;
}

json det_ideal_to_json(const DetIdeal& det) {
    json j = ideal_to_json(det.ideal);
    j["determinants_total"] = det.determinants_total;
    j["determinants_trivial"] = det.determinants_trivial;
    json triples = json::array();
    for (const auto& t : det.kept_triples) triples.push_back({t[0], t[1], t[2]});
    j["kept_triples"] = std::move(triples);
    return j;
}

namespace {

// display form: denominators cleared and content divided out, positive lead
std::string integer_content_text(const PolyQ& p, const Ring& ring) {
    if (p.is_zero()) return "0";
    mpz_class den_lcm(1);
    for (const auto& t : p.terms) den_lcm = lcm(den_lcm, t.c.get_den());
    mpz_class num_gcd(0);
    for (const auto& t : p.terms) num_gcd = gcd(num_gcd, mpz_class(t.c.get_num() * (den_lcm / t.c.get_den())));
    if (num_gcd == 0) num_gcd = 1;
    mpq_class scale{den_lcm, num_gcd};
    scale.canonicalize();
    if (sgn(p.terms.front().c) < 0) scale = -scale;
    RationalField field;
    return poly_to_text(poly_scale(p, scale, field), ring);
}

} // namespace

json gb_to_json(const GroebnerBasis<RationalField>& gb, const Ring& ring) {
    json j;
    j["ring"] = ring_to_json(ring);
    j["order"] = gb.order.name();
    json elements = json::array();
    for (const PolyQ& g : gb.elements) elements.push_back(integer_content_text(g, ring));
    j["elements"] = std::move(elements);
    return j;
}

std::pair<GroebnerBasis<RationalField>, Ring> gb_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("elements"))
        fail(ErrorCode::parse, "basis needs \"ring\" and \"elements\"");
    Ring ring = ring_from_json(j["ring"]);
    GroebnerBasis<RationalField> gb;
    gb.order = MonomialOrder::from_name(j.value("order", "degrevlex"), ring.nvars());
    RationalField field;
    for (const json& g : j["elements"]) {
        PolyQ p = poly_from_text(g.get<std::string>(), ring);
        poly_normalize(p, field, gb.order);
        if (!p.is_zero()) gb.elements.push_back(std::move(p));
    }
    return {std::move(gb), std::move(ring)};
}

json analysis_to_json(const SchemeAnalysis& analysis) {
    json j;
    j["framing"] = framing_to_json(analysis.framing);
    j["determinants_total"] = analysis.determinants_total;
    j["determinants_trivial"] = analysis.determinants_trivial;
    j["krull_dimension"] = analysis.krull_dim;
    j["ring"] = ring_to_json(analysis.final_ring);
    j["basis"] = gb_to_json(analysis.gb, analysis.final_ring);
    json subs = json::array();
    for (const Substitution& s : analysis.substitutions)
        subs.push_back({{"var", s.var}, {"replacement", poly_to_text(s.replacement, analysis.final_ring)}});
    j["substitutions"] = std::move(subs);
    if (analysis.krull_dim == 0) {
        j["vector_space_dimension"] = analysis.quotient_dim;
        json polys = json::object();
        for (const auto& [name, mp] : analysis.minimal_polys) polys[name] = uq_to_text(mp, "x");
        j["minimal_polynomials"] = std::move(polys);
    }
    return j;
}

json count_to_json(const RealizationCount& rc) {
    json j;
    j["q"] = rc.q;
    j["mode"] = count_mode_name(rc.mode);
    if (rc.count.fits_ulong_p() && rc.count.get_ui() < (1ull << 53))
        j["count"] = rc.count.get_ui();
    else
        j["count"] = rc.count.get_str();
    j["elapsed_ms"] = rc.elapsed_ms;
    return j;
}

} // namespace lsreal

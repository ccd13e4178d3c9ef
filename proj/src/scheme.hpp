#ifndef LSREAL_SCHEME_HPP
#define LSREAL_SCHEME_HPP

#include <string>
#include <vector>

#include "groebner.hpp"
#include "matrix_ideal.hpp"
#include "univariate.hpp"

namespace lsreal {

struct Substitution {
    std::string var;
    PolyQ replacement; // expressed in the final ring after all eliminations
};

struct EliminationResult {
    IdealQ ideal;
    std::vector<Substitution> log; // in elimination order
};

// Repeatedly rewrites v := -g/c whenever some generator has the shape
// c*v + g with v absent from g, dropping v from the ring. The quotient
// algebra is unchanged up to isomorphism.
EliminationResult eliminate_linear_variables(const IdealQ& ideal);

// The Groebner/elimination pipeline over Q for one framed superfiguration:
// determinant ideal, basis, substitution simplification, dimension, and the
// zero-dimensional summary data.
struct SchemeAnalysis {
    Framing framing;
    Ring original_ring;
    int determinants_total = 0;
    int determinants_trivial = 0;

    Ring final_ring;
    GroebnerBasis<RationalField> gb; // on the final ring
    std::vector<Substitution> substitutions;
    int krull_dim = 0;

    // filled when krull_dim == 0
    int quotient_dim = 0;
    // minimal polynomial per original variable (monic, over Q)
    std::vector<std::pair<std::string, UnivarQ>> minimal_polys;
};

SchemeAnalysis analyze_framing(const Framing& framing, std::uint64_t step_budget = kDefaultStepBudget);

// Runs analyze_framing over the identity framing (when valid) and every
// V-shaped frame, and keeps the first framing minimizing (krull dimension,
// quotient dimension). Weak-only degenerations can inflate the scheme for an
// unlucky frame; the realization-space content survives every framing, so
// minimizing only sheds junk.
struct BestFramingAnalysis {
    SchemeAnalysis analysis;
    int framings_tried = 0;
};
BestFramingAnalysis analyze_space(const LinearSpace& s, std::uint64_t step_budget = kDefaultStepBudget);

// Minimal polynomial of an element of the quotient algebra, via linear
// dependence of its normal-form powers.
UnivarQ quotient_minimal_polynomial(const PolyQ& u, const GroebnerBasis<RationalField>& gb,
                                    const std::vector<Monomial>& basis, StepBudget& budget);

// Reduces an ideal over Q modulo p; fails when a denominator vanishes mod p.
std::vector<PolyFp> reduce_ideal_mod_p(const IdealQ& ideal, const PrimeField& field);

} // namespace lsreal

#endif

#ifndef LSREAL_UNIVARIATE_HPP
#define LSREAL_UNIVARIATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lsreal {

// Dense univariate polynomials, ascending coefficients, no trailing zeros.
using UnivarQ = std::vector<mpq_class>;
using UnivarZ = std::vector<mpz_class>;
using UnivarFp = std::vector<std::uint64_t>;

int uq_degree(const UnivarQ& f); // -1 for the zero polynomial
void uq_normalize(UnivarQ& f);
UnivarQ uq_monic(const UnivarQ& f);
UnivarQ uq_derivative(const UnivarQ& f);
UnivarQ uq_mul(const UnivarQ& a, const UnivarQ& b);
UnivarQ uq_add(const UnivarQ& a, const UnivarQ& b);
UnivarQ uq_scale(const UnivarQ& a, const mpq_class& c);
// division with remainder; b nonzero
std::pair<UnivarQ, UnivarQ> uq_divmod(const UnivarQ& a, const UnivarQ& b);
UnivarQ uq_gcd_monic(UnivarQ a, UnivarQ b);
UnivarQ uq_squarefree_part(const UnivarQ& f);
mpq_class uq_eval(const UnivarQ& f, const mpq_class& x);
std::string uq_to_text(const UnivarQ& f, const std::string& var);

// primitive integer model with positive leading coefficient
UnivarZ uz_from_q(const UnivarQ& f);
UnivarQ uq_from_z(const UnivarZ& f);
int uz_degree(const UnivarZ& f);
UnivarZ uz_mul(const UnivarZ& a, const UnivarZ& b);
// exact division test over Z
std::optional<UnivarZ> uz_divide_exact(const UnivarZ& a, const UnivarZ& b);
mpz_class uz_resultant(const UnivarZ& f, const UnivarZ& g); // Sylvester + Bareiss
mpz_class uz_discriminant(const UnivarZ& f);

// --- reductions mod p ------------------------------------------------------

// nullopt when the reduction degenerates (leading coefficient vanishes)
std::optional<UnivarFp> uz_mod_p(const UnivarZ& f, std::uint64_t p);
int uf_degree(const UnivarFp& f);
UnivarFp uf_gcd(UnivarFp a, UnivarFp b, std::uint64_t p);
// number of distinct roots of f in F_p; nullopt if f reduces to 0 mod p
std::optional<int> count_roots_mod_p(const UnivarZ& f, std::uint64_t p);
std::vector<std::uint64_t> roots_mod_p(const UnivarZ& f, std::uint64_t p);
// multiset of irreducible factor degrees of f mod p; nullopt when f mod p is
// not squarefree or degenerates
std::optional<std::vector<int>> factor_degrees_mod_p(const UnivarZ& f, std::uint64_t p);

// --- factorization over Q ---------------------------------------------------

// monic irreducible factors of a squarefree rational polynomial
std::vector<UnivarQ> factor_squarefree_rational(const UnivarQ& f);

// Canonical representative of the orbit of a monic polynomial under
// substitutions x -> a*x + b (a, b rational, a != 0). Two monic polynomials
// are related by such a substitution iff their canonical forms coincide.
UnivarQ affine_canonical(const UnivarQ& f);
bool affine_equivalent(const UnivarQ& f, const UnivarQ& g);

// Evidence that two irreducible monic polynomials define isomorphic number
// fields: equal degrees and equal factorization patterns mod every good
// prime up to the bound.
bool same_field_fingerprint(const UnivarQ& f, const UnivarQ& g, std::uint64_t prime_bound = 500);

const std::vector<std::uint64_t>& small_primes(); // primes below 1000

} // namespace lsreal

#endif

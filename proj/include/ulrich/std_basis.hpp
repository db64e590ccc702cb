#ifndef ULRICH_STD_BASIS_HPP
#define ULRICH_STD_BASIS_HPP

#include <optional>
#include <vector>

#include "ulrich/ring.hpp"

namespace ulrich {

/// Standard basis of a submodule of R^rank with respect to the local order.
/// Generators are monic; every input generator and every s-vector reduces to
/// zero against the basis (Mora normal form).
struct StdBasis {
    size_t rank = 1;
    std::vector<Vec> gens;
    std::vector<LeadRef> leads;
    std::vector<std::vector<Monomial>> lead_module;  // minimal gens per component
    bool complete = false;
};

/// Weak normal form with respect to a local order (Mora's algorithm).
/// Returns r with u*f = sum q_i g_i + r for a unit u; the leading term of a
/// nonzero r is not divisible by any leading term of the basis.
Vec mora_nf(const AmbientRing& R, const Vec& f, const StdBasis& B);

/// Mora's tangent cone algorithm. The ring relations are lifted into every
/// free-module component unless adjoin_ring_relations is false (in which case
/// the caller must have supplied whatever relations it wants).
StdBasis std_basis(const AmbientRing& R, size_t rank, const std::vector<Vec>& gens,
                   bool adjoin_ring_relations = true);

bool is_member(const AmbientRing& R, const Vec& v, const StdBasis& B);

/// Mutual membership of generators: equality of the represented submodules
/// of R^rank (ring relations adjoined on both sides).
bool submodule_equals(const AmbientRing& R, size_t rank, const std::vector<Vec>& A,
                      const std::vector<Vec>& B);

/// Generators of {(a_1..a_m) in R^m : sum a_i gens_i lies in <extra_rels>}.
/// Completeness is certified by the standard-basis computation in the
/// augmented module R^rank + R^m with the free part eliminated.
std::vector<Vec> syzygies(const AmbientRing& R, size_t rank, const std::vector<Vec>& gens,
                          const std::vector<Vec>& extra_rels = {});

/// Number of standard monomials of R^rank outside the leading module;
/// nullopt means infinite.
std::optional<long long> quotient_length(const AmbientRing& R, const StdBasis& B);

/// Length of (<U union V> + rels) / (<V> + rels) inside R^rank.
std::optional<long long> subquotient_length(const AmbientRing& R, size_t rank,
                                            const std::vector<Vec>& U,
                                            const std::vector<Vec>& V);

/// Cached standard basis of the pure relation module in R^rank.
std::shared_ptr<const StdBasis> relation_basis(const AmbientRing& R, size_t rank);

/// Weak normal form against the ring relations only.
Poly nf_mod_relations(const AmbientRing& R, const Poly& p);

bool in_max_ideal(const Poly& p);
bool in_max_ideal(const Vec& v);

Vec vec_monic(const PrimeField& F, const Vec& v);

// monomial-ideal helpers (exposed for tests)
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);
std::optional<long long> count_standard_monomials(size_t nvars, const std::vector<int>& weights,
                                                  const std::vector<Monomial>& gens);

}  // namespace ulrich

#endif

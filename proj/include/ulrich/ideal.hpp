#ifndef ULRICH_IDEAL_HPP
#define ULRICH_IDEAL_HPP

#include <memory>
#include <optional>

#include "ulrich/std_basis.hpp"

namespace ulrich {

/// Ideal of R with cached standard basis, plus an optional designated
/// parameter subideal Q and its verified reduction exponent.
struct IdealData {
    RingPtr ring;
    std::vector<Poly> gens;
    std::optional<std::vector<Poly>> Q;
    std::optional<int> reductionExponent;
    mutable std::shared_ptr<const StdBasis> basisCache;
};

IdealData make_ideal(const RingPtr& ring, std::vector<Poly> gens);
const StdBasis& ideal_basis(const IdealData& I);
std::vector<Vec> ideal_vectors(const IdealData& I);

/// Same ideal with the generator list replaced by the nonzero standard-basis
/// elements (keeps product towers from blowing up).
IdealData ideal_compress(const IdealData& a);

IdealData ideal_sum(const IdealData& a, const IdealData& b);
IdealData ideal_product(const IdealData& a, const IdealData& b);
IdealData ideal_power(const IdealData& a, int k);
IdealData ideal_colon_element(const IdealData& a, const Poly& x);
IdealData ideal_intersect(const IdealData& a, const IdealData& b);

bool ideal_equals(const IdealData& a, const IdealData& b);
bool ideal_contains(const IdealData& a, const Poly& p);

/// l(R/I); nullopt when infinite.
std::optional<long long> length_of_quotient_ring(const IdealData& I);

bool is_m_primary(const IdealData& I);

/// Smallest r <= rMax with Q*I^r = I^{r+1}; validates that Q is a parameter
/// ideal inside I and that the declared ring dimension is consistent.
std::optional<int> verify_reduction(const IdealData& I, const std::vector<Poly>& Qgens, int rMax);

/// verify_reduction + stores Q and the exponent; throws when verification
/// fails.
IdealData attach_parameter_ideal(const IdealData& I, std::vector<Poly> Qgens, int rMax = 10);

/// l((I : m)/I) for m-primary I.
long long socle_dimension(const IdealData& I);

/// Smallest n <= nMax with m^n inside I.
int loewy_length(const IdealData& I, int nMax = 20);

IdealData maximal_ideal(const RingPtr& ring);
std::vector<Poly> maximal_ideal_gens(const RingPtr& ring);

/// Generators of m^n (all monomials of total degree n).
std::vector<Poly> power_of_max_ideal(const RingPtr& ring, int n);

}  // namespace ulrich

#endif

#ifndef ULRICH_HILBERT_HPP
#define ULRICH_HILBERT_HPP

#include "ulrich/module.hpp"

namespace ulrich {

/// Hilbert-Samuel data of M with respect to an m-primary ideal: the values
/// l(M/I^k M) for k = 1..kMax and the coefficients fitted on the stabilized
/// window (t-th finite difference constant over t+2 consecutive values).
struct HilbertSamuelTable {
    std::vector<long long> values;        // index k-1 holds l(M/I^k M)
    int stabilizedFrom = 0;               // first k of the accepted window
    std::vector<long long> coefficients;  // e^0 .. e^t, signed per the binomial expansion
    bool polynomialValid = false;
    int dimUsed = 0;
};

/// dimM defaults to dim R (the MCM case); pass 0 for finite-length modules.
HilbertSamuelTable hilbert_samuel(const ModuleData& M, const IdealData& I, int kMax,
                                  std::optional<int> dimM = std::nullopt);

/// The first Hilbert coefficient e^1 from a stabilized table.
long long chern_number(const ModuleData& M, const IdealData& I, int kMax = 12);

struct MinMultReport {
    bool minimal = false;
    int dimUsed = 0;
    long long e0 = 0, e1 = 0, lenMIM = 0, lenIMI2M = 0;
    bool viaDefinition = false;  // e0 = (1-t) l(M/IM) + l(IM/I^2M)
    bool viaColon = false;       // Q*IM = I^2 M
    bool viaChern = false;       // e1 = e0 - l(M/IM)
};

/// Evaluates the defining multiplicity equality together with its two
/// equivalent forms; disagreement is a hard failure.
MinMultReport minimal_multiplicity_check(const ModuleData& M, const IdealData& I, int kMax = 12);

/// Least m <= mMax with Q I^m M = I^{m+1} M.
int reduction_number_relative(const IdealData& I, const ModuleData& M, int mMax = 10);

/// Prefix intersection conditions (z_1..z_i)M  cap  I^{r+1}M = (z_1..z_i)I^r M
/// for i = 1..d-1; vacuously true when d = 1.
bool lemma_intersection_condition(const IdealData& I, const ModuleData& M, int r);

struct RegularityReport {
    int rQ = -1;
    bool minMult = false;
    std::optional<int> regRees;         // nullopt = "not determined"
    std::optional<int> regAssocGraded;  // ditto
    bool viaTheorem = false;
};

RegularityReport regularity_report(const ModuleData& M, const IdealData& I);

}  // namespace ulrich

#endif

#ifndef ULRICH_CHECKS_HPP
#define ULRICH_CHECKS_HPP

#include <string>

#include "ulrich/hilbert.hpp"

namespace ulrich {

struct UlrichIdealReport {
    bool isMPrimary = false;
    int reductionExponent = -1;
    bool squareEqualsQI = false;
    bool conormalFree = false;
    bool isUlrich = false;
    bool isGorenstein = false;
    bool isParameter = false;
    long long lenRI = 0, lenRQ = 0, socle = 0, nu = 0;
};

/// The ideal must carry a verified parameter subideal Q.
UlrichIdealReport check_ulrich_ideal(const IdealData& I);

struct UlrichModuleReport {
    bool mcm = false;
    bool colonEquality = false;  // IM = QM
    bool freeOverQuotient = false;
    bool isUlrich = false;
    long long nu = 0;
    long long e0 = 0;  // l(M/QM), meaningful when mcm
    long long lengthMIM = 0;
};

UlrichModuleReport check_ulrich_module(const ModuleData& M, const IdealData& I);

struct SyzygyUlrichResult {
    ModuleData omega;
    bool asserted = false;  // whether k >= d and Ulrichness was checked
};

/// Omega^k(R/I) for an Ulrich non-parameter ideal; asserts the Ulrich
/// property when k >= dim R.
SyzygyUlrichResult syzygies_of_ulrich_ideal(const IdealData& I, int k);

struct HomProbeResult {
    bool hypothesesMet = false;
    std::string failedHypothesis;
    bool homIsZero = false;
    int n = 0;
    bool condHomUlrich = false;     // (i)
    bool condQuotientFree = false;  // (ii)
    bool condResidualFree = false;  // (iii), only when n = d
    bool equivalencesHold = false;
};

/// Replays the Hom-functor equivalences on a concrete triple. Hypotheses are
/// verified computationally; when they fail the probe says which one.
HomProbeResult hom_ulrich_probe(const ModuleData& M, const ModuleData& N, const IdealData& I,
                                int n);

struct RegularUlrichProbe {
    bool isRegular = false;
    bool ringIsUlrichModule = false;
    bool consistent = false;
};

RegularUlrichProbe regular_iff_ulrich_probe(const RingPtr& ring);

struct FreenessProbeResult {
    std::string mode;
    bool hypothesesMet = false;
    std::string detail;
    bool vanishingFound = false;
    bool freenessConfirmed = false;
    bool consistent = true;  // theorem violated iff false
};

/// Freeness criteria for M/IM over R/I via diagonal Ext/Tor vanishing.
/// Modes: "i", "ii", "iii", "iv". The window parameter bounds every "some i"
/// and "j >> 0" search.
FreenessProbeResult freeness_probe(const ModuleData& M, const IdealData& I,
                                   const std::string& mode, int window = 4);

}  // namespace ulrich

#endif

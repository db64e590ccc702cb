#include "ulrich/hilbert.hpp"

namespace ulrich {

namespace {

long long binom(long long n, long long r)
{
    if (r < 0 || n < r)
        return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i)
        out = out * (n - i) / (i + 1);
    return out;
}

std::vector<long long> hs_values(const ModuleData& M, const IdealData& I, int kMax)
{
    std::vector<long long> values;
    IdealData P = I;
    for (int k = 1; k <= kMax; ++k) {
        auto len = module_length(quotient_by_ideal(M, P));
        if (!len)
            throw Error("hilbert_samuel: l(M/I^k M) is infinite; is I m-primary?");
        values.push_back(*len);
        if (k < kMax)
            P = ideal_compress(ideal_product(P, I));
    }
    return values;
}

// fits coefficients on [from, from+width) against
// P(k) = sum_i (-1)^i e^i C(k + t - i - 1, t - i)
std::optional<std::vector<long long>> fit_window(const std::vector<long long>& values, int from,
                                                 int width, int t)
{
    std::vector<long long> W;
    for (int k = from; k < from + width; ++k)
        W.push_back(values[static_cast<size_t>(k) - 1]);
    std::vector<long long> coeffs;
    for (int i = 0; i <= t; ++i) {
        int deg = t - i;
        std::vector<long long> D = W;
        for (int s = 0; s < deg; ++s)
            for (size_t j = 0; j + 1 < D.size(); ++j)
                D[j] = D[j + 1] - D[j];
        if (static_cast<size_t>(deg) >= W.size())
            return std::nullopt;
        D.resize(W.size() - static_cast<size_t>(deg));
        for (size_t j = 1; j < D.size(); ++j)
            if (D[j] != D[0])
                return std::nullopt;
        long long c = D[0];
        coeffs.push_back(i % 2 == 0 ? c : -c);
        for (int k = from; k < from + width; ++k)
            W[static_cast<size_t>(k - from)] -= c * binom(k + t - i - 1, t - i);
    }
    for (long long w : W)
        if (w != 0)
            return std::nullopt;
    return coeffs;
}

HilbertSamuelTable hs_attempt(const ModuleData& M, const IdealData& I, int kMax, int t)
{
    HilbertSamuelTable tab;
    tab.dimUsed = t;
    tab.values = hs_values(M, I, kMax);
    int width = t + 2;
    for (int from = 1; from + width - 1 <= kMax; ++from) {
        // the fit must persist to the end of the table
        auto fitAll = fit_window(tab.values, from, kMax - from + 1, t);
        if (!fitAll)
            continue;
        tab.stabilizedFrom = from;
        tab.coefficients = *fitAll;
        tab.polynomialValid = true;
        return tab;
    }
    return tab;  // polynomialValid = false
}

std::optional<long long> mcm_multiplicity(const ModuleData& M, const IdealData& I)
{
    if (!I.Q || !is_maximal_cohen_macaulay(M, *I.Q))
        return std::nullopt;
    return module_length(quotient_by_ideal(M, make_ideal(I.ring, *I.Q)));
}

}  // namespace

HilbertSamuelTable hilbert_samuel(const ModuleData& M, const IdealData& I, int kMax,
                                  std::optional<int> dimM)
{
    if (is_zero_module(M))
        throw Error("hilbert_samuel: zero module");
    int d = I.ring->dim();
    int t = dimM.value_or(d);
    if (kMax < d + 3)
        throw Error("hilbert_samuel: kMax must be at least dim R + 3");

    HilbertSamuelTable tab = hs_attempt(M, I, kMax, t);
    std::optional<long long> e0q = (t == d) ? mcm_multiplicity(M, I) : std::nullopt;
    bool crossCheckFailed = tab.polynomialValid && e0q && tab.coefficients[0] != *e0q;
    if (!tab.polynomialValid || crossCheckFailed) {
        // extend the table and retry once
        tab = hs_attempt(M, I, 2 * kMax, t);
        if (tab.polynomialValid && e0q && tab.coefficients[0] != *e0q)
            throw Error("hilbert_samuel: fitted e0 disagrees with l(M/QM)");
    }
    return tab;
}

long long chern_number(const ModuleData& M, const IdealData& I, int kMax)
{
    HilbertSamuelTable tab = hilbert_samuel(M, I, kMax);
    if (!tab.polynomialValid)
        throw Error("chern_number: table did not stabilize by kMax = " + std::to_string(kMax));
    if (tab.coefficients.size() < 2)
        throw Error("chern_number: dimension 0 table has no e1");
    long long e1 = tab.coefficients[1];
    if (I.Q && is_maximal_cohen_macaulay(M, *I.Q) && e1 < 0)
        throw Error("chern_number: negative e1 for a maximal Cohen-Macaulay module");
    return e1;
}

int reduction_number_relative(const IdealData& I, const ModuleData& M, int mMax)
{
    if (!I.Q)
        throw Error("reduction_number_relative: I has no attached parameter ideal");
    if (is_zero_module(M))
        throw Error("reduction_number_relative: zero module");
    IdealData Q = make_ideal(I.ring, *I.Q);
    IdealData P = ideal_power(I, 0);
    for (int m = 0; m <= mMax; ++m) {
        ModuleData lhs = mult_by_ideal(ideal_product(Q, P), M);
        ModuleData rhs = mult_by_ideal(ideal_product(P, I), M);
        if (same_subquotient(lhs, rhs))
            return m;
        P = ideal_compress(ideal_product(P, I));
    }
    throw Error("reduction_number_relative exceeds mMax = " + std::to_string(mMax));
}

MinMultReport minimal_multiplicity_check(const ModuleData& M, const IdealData& I, int kMax)
{
    if (!I.Q)
        throw Error("minimal_multiplicity_check: I has no attached parameter ideal");
    if (is_zero_module(M))
        throw Error("minimal_multiplicity_check: zero module");
    // a parameter ideal that is an M-reduction at all is a minimal one, which
    // certifies using its generators in place of a maximal superficial sequence
    reduction_number_relative(I, M, 10);

    MinMultReport rep;
    int d = I.ring->dim();
    bool mcm = is_maximal_cohen_macaulay(M, *I.Q);
    std::optional<long long> lenM = module_length(M);
    int t;
    if (mcm)
        t = d;
    else if (lenM)
        t = 0;
    else
        throw Error("minimal_multiplicity_check: M is neither MCM nor of finite length");
    rep.dimUsed = t;

    IdealData I2 = ideal_power(I, 2);
    auto lenMIM = module_length(quotient_by_ideal(M, I));
    auto lenMI2M = module_length(quotient_by_ideal(M, I2));
    if (!lenMIM || !lenMI2M)
        throw Error("minimal_multiplicity_check: infinite length; is I m-primary?");
    rep.lenMIM = *lenMIM;
    rep.lenIMI2M = *lenMI2M - *lenMIM;

    if (mcm) {
        auto e0 = module_length(quotient_by_ideal(M, make_ideal(I.ring, *I.Q)));
        if (!e0)
            throw Error("minimal_multiplicity_check: l(M/QM) infinite");
        rep.e0 = *e0;
    } else {
        rep.e0 = *lenM;
    }

    HilbertSamuelTable tab = hilbert_samuel(M, I, std::max(kMax, d + 3), t);
    if (!tab.polynomialValid)
        throw Error("minimal_multiplicity_check: Hilbert-Samuel table did not stabilize");
    if (tab.coefficients[0] != rep.e0)
        throw Error("minimal_multiplicity_check: e0 mismatch between table and l(M/QM)");
    rep.e1 = t > 0 ? tab.coefficients[1] : 0;

    rep.viaDefinition = rep.e0 == (1 - t) * rep.lenMIM + rep.lenIMI2M;
    ModuleData lhs = mult_by_ideal(ideal_product(make_ideal(I.ring, *I.Q), I), M);
    ModuleData rhs = mult_by_ideal(I2, M);
    rep.viaColon = same_subquotient(lhs, rhs);
    rep.viaChern = t > 0 ? (rep.e1 == rep.e0 - rep.lenMIM) : rep.viaColon;

    if (rep.viaDefinition != rep.viaColon || rep.viaColon != rep.viaChern)
        throw Error("minimal_multiplicity_check: the three criteria disagree (engine bug)");
    rep.minimal = rep.viaDefinition;
    return rep;
}

bool lemma_intersection_condition(const IdealData& I, const ModuleData& M, int r)
{
    if (!I.Q)
        throw Error("lemma_intersection_condition: I has no attached parameter ideal");
    const auto& z = *I.Q;
    int d = I.ring->dim();
    if (d <= 1)
        return true;  // no prefixes to check
    IdealData Ir = ideal_power(I, r);
    IdealData Ir1 = ideal_product(Ir, I);
    const PrimeField& F = I.ring->field();
    for (int i = 1; i <= d - 1; ++i) {
        std::vector<Poly> zi(z.begin(), z.begin() + i);
        ModuleData zM = mult_by_ideal(make_ideal(I.ring, zi), M);
        ModuleData IM = mult_by_ideal(Ir1, M);
        // generators of the intersection of the two images, via syzygies
        std::vector<Vec> list = zM.gens;
        list.insert(list.end(), IM.gens.begin(), IM.gens.end());
        list.insert(list.end(), M.rels.begin(), M.rels.end());
        auto syz = syzygies(*I.ring, M.ambient, list);
        std::vector<Vec> inter = M.rels;
        for (const auto& s : syz) {
            Vec e = vec_zero(M.ambient, I.ring->nvars());
            for (size_t j = 0; j < zM.gens.size(); ++j)
                e = vec_add(F, e, vec_mul_poly(F, zM.gens[j], s.c[j]));
            if (!e.is_zero())
                inter.push_back(std::move(e));
        }
        ModuleData ziIrM = mult_by_ideal(ideal_product(make_ideal(I.ring, zi), Ir), M);
        std::vector<Vec> target = ziIrM.gens;
        target.insert(target.end(), M.rels.begin(), M.rels.end());
        if (!submodule_equals(*I.ring, M.ambient, inter, target))
            return false;
    }
    return true;
}

RegularityReport regularity_report(const ModuleData& M, const IdealData& I)
{
    if (!I.Q || !I.reductionExponent)
        throw Error("regularity_report: I has no verified parameter reduction");
    RegularityReport rep;
    rep.rQ = reduction_number_relative(I, M, 10);
    MinMultReport mm = minimal_multiplicity_check(M, I);
    rep.minMult = mm.minimal;
    if (rep.minMult) {
        if (rep.rQ > 1)
            throw Error("regularity_report: minimal multiplicity with r_Q > 1 (engine bug)");
        if (!lemma_intersection_condition(I, M, rep.rQ))
            throw Error("regularity_report: prefix intersection condition failed (engine bug)");
        rep.regRees = rep.rQ;
        rep.regAssocGraded = rep.rQ;
        rep.viaTheorem = true;
    }
    return rep;
}

}  // namespace ulrich

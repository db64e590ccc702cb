#include "ulrich/ideal.hpp"

#include <algorithm>
#include <functional>

namespace ulrich {

IdealData make_ideal(const RingPtr& ring, std::vector<Poly> gens)
{
    IdealData I;
    I.ring = ring;
    for (auto& g : gens)
        if (!g.is_zero())
            I.gens.push_back(std::move(g));
    return I;
}

std::vector<Vec> ideal_vectors(const IdealData& I)
{
    std::vector<Vec> out;
    out.reserve(I.gens.size());
    for (const auto& g : I.gens) {
        Vec v;
        v.c.push_back(g);
        out.push_back(std::move(v));
    }
    return out;
}

const StdBasis& ideal_basis(const IdealData& I)
{
    if (!I.basisCache)
        I.basisCache = std::make_shared<const StdBasis>(std_basis(*I.ring, 1, ideal_vectors(I)));
    return *I.basisCache;
}

namespace {

// compact generating set: standard-basis elements that are nonzero over R
std::vector<Poly> compressed_gens(const IdealData& I)
{
    const StdBasis& B = ideal_basis(I);
    auto relB = relation_basis(*I.ring, 1);
    std::vector<Poly> out;
    for (const auto& g : B.gens)
        if (!is_member(*I.ring, g, *relB))
            out.push_back(g.c[0]);
    return out;
}

}  // namespace

IdealData ideal_compress(const IdealData& a)
{
    IdealData out = a;
    out.gens = compressed_gens(a);
    out.basisCache.reset();
    return out;
}

IdealData ideal_sum(const IdealData& a, const IdealData& b)
{
    if (a.ring != b.ring)
        throw Error("ideal_sum: rings differ");
    std::vector<Poly> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return make_ideal(a.ring, std::move(gens));
}

IdealData ideal_product(const IdealData& a, const IdealData& b)
{
    if (a.ring != b.ring)
        throw Error("ideal_product: rings differ");
    const PrimeField& F = a.ring->field();
    std::vector<Poly> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const auto& p : a.gens)
        for (const auto& q : b.gens)
            gens.push_back(poly_mul(F, p, q));
    return make_ideal(a.ring, std::move(gens));
}

IdealData ideal_power(const IdealData& a, int k)
{
    if (k < 0)
        throw Error("ideal_power: negative exponent");
    if (k == 0)
        return make_ideal(a.ring, {poly_const(a.ring->field(), 1, a.ring->nvars())});
    IdealData acc = a;
    for (int i = 1; i < k; ++i) {
        acc = ideal_product(acc, a);
        acc.gens = compressed_gens(acc);
        acc.basisCache.reset();
    }
    return acc;
}

IdealData ideal_colon_element(const IdealData& a, const Poly& x)
{
    std::vector<Vec> list;
    Vec vx;
    vx.c.push_back(x);
    list.push_back(vx);
    for (const auto& g : a.gens) {
        Vec v;
        v.c.push_back(g);
        list.push_back(v);
    }
    auto syz = syzygies(*a.ring, 1, list);
    std::vector<Poly> gens;
    for (const auto& s : syz)
        if (!s.c[0].is_zero())
            gens.push_back(s.c[0]);
    return make_ideal(a.ring, std::move(gens));
}

IdealData ideal_intersect(const IdealData& a, const IdealData& b)
{
    if (a.ring != b.ring)
        throw Error("ideal_intersect: rings differ");
    std::vector<Vec> list;
    for (const auto& g : a.gens) {
        Vec v;
        v.c.push_back(g);
        list.push_back(v);
    }
    for (const auto& g : b.gens) {
        Vec v;
        v.c.push_back(g);
        list.push_back(v);
    }
    const PrimeField& F = a.ring->field();
    auto syz = syzygies(*a.ring, 1, list);
    std::vector<Poly> gens;
    for (const auto& s : syz) {
        Poly acc = poly_zero();
        for (size_t i = 0; i < a.gens.size(); ++i)
            acc = poly_add(F, acc, poly_mul(F, s.c[i], a.gens[i]));
        if (!acc.is_zero())
            gens.push_back(acc);
    }
    return make_ideal(a.ring, std::move(gens));
}

bool ideal_equals(const IdealData& a, const IdealData& b)
{
    return submodule_equals(*a.ring, 1, ideal_vectors(a), ideal_vectors(b));
}

bool ideal_contains(const IdealData& a, const Poly& p)
{
    Vec v;
    v.c.push_back(p);
    return is_member(*a.ring, v, ideal_basis(a));
}

std::optional<long long> length_of_quotient_ring(const IdealData& I)
{
    return quotient_length(*I.ring, ideal_basis(I));
}

bool is_m_primary(const IdealData& I) { return length_of_quotient_ring(I).has_value(); }

std::optional<int> verify_reduction(const IdealData& I, const std::vector<Poly>& Qgens, int rMax)
{
    const RingPtr& R = I.ring;
    int d = R->dim();
    if (static_cast<int>(Qgens.size()) != d)
        throw Error("parameter ideal must have exactly dim R = " + std::to_string(d) +
                    " generators");
    for (const auto& q : Qgens)
        if (!ideal_contains(I, q))
            throw Error("Q is not contained in I");
    IdealData Q = make_ideal(R, Qgens);
    if (!is_m_primary(Q))
        throw Error("Q is not a parameter ideal: l(R/Q) is infinite");
    // declared dimension check: no (d-1)-generator subideal has finite colength
    for (size_t drop = 0; drop < Qgens.size(); ++drop) {
        std::vector<Poly> sub;
        for (size_t i = 0; i < Qgens.size(); ++i)
            if (i != drop)
                sub.push_back(Qgens[i]);
        IdealData S = make_ideal(R, sub);
        if (is_m_primary(S))
            throw Error("declared dimension is wrong: a proper subideal of Q already has "
                        "finite colength");
    }
    IdealData prev = ideal_power(I, 0);  // I^r, starting at r = 0
    for (int r = 0; r <= rMax; ++r) {
        IdealData lhs = ideal_product(Q, prev);  // Q * I^r
        IdealData rhs = ideal_product(prev, I);  // I^{r+1}
        if (ideal_equals(lhs, rhs))
            return r;
        prev = rhs;
        prev.gens = compressed_gens(prev);
        prev.basisCache.reset();
    }
    return std::nullopt;
}

IdealData attach_parameter_ideal(const IdealData& I, std::vector<Poly> Qgens, int rMax)
{
    auto r = verify_reduction(I, Qgens, rMax);
    if (!r)
        throw Error("Q*I^r = I^{r+1} fails for all r <= " + std::to_string(rMax));
    IdealData out = I;
    out.Q = std::move(Qgens);
    out.reductionExponent = *r;
    return out;
}

long long socle_dimension(const IdealData& I)
{
    if (!is_m_primary(I))
        throw Error("socle_dimension: ideal is not m-primary");
    IdealData colon = make_ideal(I.ring, {poly_const(I.ring->field(), 1, I.ring->nvars())});
    bool first = true;
    for (size_t v = 0; v < I.ring->nvars(); ++v) {
        Poly xv = poly_term(monomial_var(I.ring->nvars(), v, 1, I.ring->weights()), 1);
        IdealData cv = ideal_colon_element(I, xv);
        colon = first ? cv : ideal_intersect(colon, cv);
        first = false;
    }
    auto len = subquotient_length(*I.ring, 1, ideal_vectors(colon), ideal_vectors(I));
    if (!len)
        throw Error("socle_dimension: unexpected infinite length");
    return *len;
}

std::vector<Poly> maximal_ideal_gens(const RingPtr& ring)
{
    std::vector<Poly> gens;
    for (size_t v = 0; v < ring->nvars(); ++v)
        gens.push_back(poly_term(monomial_var(ring->nvars(), v, 1, ring->weights()), 1));
    return gens;
}

IdealData maximal_ideal(const RingPtr& ring) { return make_ideal(ring, maximal_ideal_gens(ring)); }

std::vector<Poly> power_of_max_ideal(const RingPtr& ring, int n)
{
    std::vector<Poly> out;
    size_t nv = ring->nvars();
    std::vector<uint16_t> e(nv, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rest) {
        if (i + 1 == nv) {
            e[i] = static_cast<uint16_t>(rest);
            Monomial m;
            m.e = e;
            m.wdeg = weighted_degree(e, ring->weights());
            out.push_back(poly_term(m, 1));
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            e[i] = static_cast<uint16_t>(k);
            rec(i + 1, rest - k);
        }
    };
    rec(0, n);
    return out;
}

int loewy_length(const IdealData& I, int nMax)
{
    if (!is_m_primary(I))
        throw Error("loewy_length: ideal is not m-primary");
    for (int n = 1; n <= nMax; ++n) {
        bool inside = true;
        for (const auto& m : power_of_max_ideal(I.ring, n))
            if (!ideal_contains(I, m)) {
                inside = false;
                break;
            }
        if (inside)
            return n;
    }
    throw Error("loewy_length exceeds nMax = " + std::to_string(nMax));
}

}  // namespace ulrich

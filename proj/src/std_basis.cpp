#include "ulrich/std_basis.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ulrich {

namespace {

int64_t max_wdeg(const Vec& v)
{
    int64_t m = std::numeric_limits<int64_t>::min();
    for (const auto& p : v.c)
        for (const auto& t : p.t)
            m = std::max(m, t.m.wdeg);
    return m;
}

int64_t ecart_of(const Vec& v, const LeadRef& l) { return max_wdeg(v) - l.m.wdeg; }

constexpr long long kReductionCap = 20000000;
constexpr long long kStaircaseCap = 2000000;

}  // namespace

Vec vec_monic(const PrimeField& F, const Vec& v)
{
    LeadRef l = vec_lead(v);
    if (l.comp < 0 || l.coeff == 1)
        return v;
    return vec_scale(F, v, F.inv(l.coeff));
}

bool in_max_ideal(const Poly& p) { return p.constant_term() == 0; }

bool in_max_ideal(const Vec& v)
{
    for (const auto& p : v.c)
        if (!in_max_ideal(p))
            return false;
    return true;
}

Vec mora_nf(const AmbientRing& R, const Vec& f, const StdBasis& B)
{
    const PrimeField& F = R.field();
    struct Red {
        Vec v;
        LeadRef lead;
        int64_t ecart;
    };
    // the basis is consulted in place; only intermediate results are stored
    std::vector<Red> added;
    Vec h = f;
    long long guard = 0;
    while (!h.is_zero()) {
        if (++guard > kReductionCap)
            throw Error("mora_nf: reduction cap exceeded");
        LeadRef lh = vec_lead(h);
        int64_t eh = ecart_of(h, lh);
        // pick a divisor of the leading term with minimal ecart
        const Vec* best = nullptr;
        LeadRef bestLead;
        int64_t bestEcart = 0;
        for (size_t i = 0; i < B.gens.size(); ++i) {
            const LeadRef& lg = B.leads[i];
            if (lg.comp != lh.comp || !mono_divides(lg.m, lh.m))
                continue;
            int64_t eg = ecart_of(B.gens[i], lg);
            if (!best || eg < bestEcart) {
                best = &B.gens[i];
                bestLead = lg;
                bestEcart = eg;
            }
        }
        for (const auto& r : added) {
            if (r.lead.comp != lh.comp || !mono_divides(r.lead.m, lh.m))
                continue;
            if (!best || r.ecart < bestEcart) {
                best = &r.v;
                bestLead = r.lead;
                bestEcart = r.ecart;
            }
        }
        if (!best)
            return h;
        if (bestEcart > eh)
            added.push_back(Red{h, lh, eh});
        // h -= (c_h / c_g) * (m_h / m_g) * g   (cancels the leading term)
        Monomial q = mono_div(lh.m, bestLead.m);
        uint32_t c = F.div(lh.coeff, bestLead.coeff);
        h = vec_sub(F, h, vec_mul_term(F, *best, q, c));
    }
    return h;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.e < b.e;
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& m : out)
            if (mono_divides(m, g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(g);
    }
    return out;
}

StdBasis std_basis(const AmbientRing& R, size_t rank, const std::vector<Vec>& gens,
                   bool adjoin_ring_relations)
{
    const PrimeField& F = R.field();
    StdBasis B;
    B.rank = rank;

    std::vector<Vec> input;
    if (adjoin_ring_relations) {
        auto rel = R.relation_vectors(rank);
        input.insert(input.end(), rel.begin(), rel.end());
    }
    input.insert(input.end(), gens.begin(), gens.end());

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pairLess = [](const Pair& a, const Pair& b) {
        if (a.lcm.wdeg != b.lcm.wdeg)
            return a.lcm.wdeg < b.lcm.wdeg;
        if (a.lcm.e != b.lcm.e)
            return a.lcm.e < b.lcm.e;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };
    // max-heap on "greater", so the smallest pair pops first
    auto heapCmp = [&](const Pair& a, const Pair& b) { return pairLess(b, a); };
    std::vector<Pair> heap;

    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            if (B.leads[i].comp != B.leads[k].comp)
                continue;
            heap.push_back(Pair{i, k, mono_lcm(B.leads[i].m, B.leads[k].m, R.weights())});
            std::push_heap(heap.begin(), heap.end(), heapCmp);
        }
    };
    auto add_elem = [&](Vec v) {
        v = vec_monic(F, v);
        B.leads.push_back(vec_lead(v));
        B.gens.push_back(std::move(v));
        push_pairs_for(B.gens.size() - 1);
    };

    for (const auto& g : input) {
        if (g.is_zero())
            continue;
        Vec h = mora_nf(R, g, B);
        if (!h.is_zero())
            add_elem(std::move(h));
    }

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), heapCmp);
        Pair pr = heap.back();
        heap.pop_back();
        const LeadRef& li = B.leads[pr.i];
        const LeadRef& lj = B.leads[pr.j];
        Vec s = vec_sub(F, vec_mul_term(F, B.gens[pr.i], mono_div(pr.lcm, li.m), 1),
                        vec_mul_term(F, B.gens[pr.j], mono_div(pr.lcm, lj.m), 1));
        Vec h = mora_nf(R, s, B);
        if (!h.is_zero())
            add_elem(std::move(h));
    }

    B.lead_module.assign(rank, {});
    for (const auto& l : B.leads)
        B.lead_module[l.comp].push_back(l.m);
    for (auto& lm : B.lead_module)
        lm = minimalize_monomials(std::move(lm));
    B.complete = true;
    return B;
}

bool is_member(const AmbientRing& R, const Vec& v, const StdBasis& B)
{
    if (v.rank() != B.rank)
        throw Error("is_member: ambient rank mismatch");
    return mora_nf(R, v, B).is_zero();
}

bool submodule_equals(const AmbientRing& R, size_t rank, const std::vector<Vec>& A,
                      const std::vector<Vec>& B)
{
    for (const auto& v : A)
        if (v.rank() != rank)
            throw Error("submodule_equals: ambient rank mismatch");
    for (const auto& v : B)
        if (v.rank() != rank)
            throw Error("submodule_equals: ambient rank mismatch");
    StdBasis SA = std_basis(R, rank, A);
    StdBasis SB = std_basis(R, rank, B);
    for (const auto& v : A)
        if (!mora_nf(R, v, SB).is_zero())
            return false;
    for (const auto& v : B)
        if (!mora_nf(R, v, SA).is_zero())
            return false;
    return true;
}

std::vector<Vec> syzygies(const AmbientRing& R, size_t rank, const std::vector<Vec>& gens,
                          const std::vector<Vec>& extra_rels)
{
    size_t m = gens.size();
    if (m == 0)
        return {};
    size_t nv = R.nvars();
    size_t aug = rank + m;
    auto widen = [&](const Vec& v) {
        Vec w = vec_zero(aug, nv);
        for (size_t i = 0; i < rank; ++i)
            w.c[i] = v.c[i];
        return w;
    };
    std::vector<Vec> ag;
    for (const auto& r : extra_rels)
        ag.push_back(widen(r));
    for (size_t i = 0; i < m; ++i) {
        if (gens[i].rank() != rank)
            throw Error("syzygies: ambient rank mismatch");
        Vec w = widen(gens[i]);
        w.c[rank + i] = poly_term(monomial_one(nv), 1);
        ag.push_back(std::move(w));
    }
    // ring relations on every component (free part and coefficient part) are
    // adjoined by std_basis
    StdBasis B = std_basis(R, aug, ag, true);

    auto relB = relation_basis(R, m);
    std::vector<Vec> out;
    for (const auto& b : B.gens) {
        bool freePartZero = true;
        for (size_t i = 0; i < rank && freePartZero; ++i)
            freePartZero = b.c[i].is_zero();
        if (!freePartZero)
            continue;
        Vec tail;
        tail.c.assign(b.c.begin() + rank, b.c.end());
        if (m > 0 && is_member(R, tail, *relB))
            continue;  // trivial relation multiple, zero over R
        out.push_back(std::move(tail));
    }
    return out;
}

namespace {

std::optional<std::vector<Monomial>> enumerate_standard_monomials(
    size_t nvars, const std::vector<int>& weights, const std::vector<Monomial>& gens)
{
    std::vector<Monomial> mins = minimalize_monomials(gens);
    for (const auto& g : mins)
        if (g.is_one())
            return std::vector<Monomial>{};
    // finite iff each variable has a pure-power generator
    for (size_t v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const auto& g : mins) {
            bool onlyV = g.e[v] > 0;
            for (size_t u = 0; u < nvars && onlyV; ++u)
                if (u != v && g.e[u] > 0)
                    onlyV = false;
            if (onlyV) {
                pure = true;
                break;
            }
        }
        if (!pure)
            return std::nullopt;
    }
    auto divisible = [&](const Monomial& m) {
        for (const auto& g : mins)
            if (mono_divides(g, m))
                return true;
        return false;
    };
    std::set<std::vector<uint16_t>> seen;
    std::vector<Monomial> out;
    std::vector<Monomial> frontier{monomial_one(nvars)};
    if (divisible(frontier[0]))
        return std::vector<Monomial>{};
    seen.insert(frontier[0].e);
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            out.push_back(m);
            if (static_cast<long long>(out.size()) > kStaircaseCap)
                throw Error("staircase enumeration cap exceeded");
            for (size_t v = 0; v < nvars; ++v) {
                Monomial child = m;
                child.e[v]++;
                child.wdeg += weights[v];
                if (seen.count(child.e) || divisible(child))
                    continue;
                seen.insert(child.e);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

std::optional<long long> count_standard_monomials(size_t nvars, const std::vector<int>& weights,
                                                  const std::vector<Monomial>& gens)
{
    auto e = enumerate_standard_monomials(nvars, weights, gens);
    if (!e)
        return std::nullopt;
    return static_cast<long long>(e->size());
}

std::optional<long long> quotient_length(const AmbientRing& R, const StdBasis& B)
{
    long long total = 0;
    for (size_t c = 0; c < B.rank; ++c) {
        auto n = count_standard_monomials(R.nvars(), R.weights(), B.lead_module[c]);
        if (!n)
            return std::nullopt;
        total += *n;
    }
    return total;
}

std::optional<long long> subquotient_length(const AmbientRing& R, size_t rank,
                                            const std::vector<Vec>& U, const std::vector<Vec>& V)
{
    StdBasis BV = std_basis(R, rank, V);
    std::vector<Vec> W = V;
    W.insert(W.end(), U.begin(), U.end());
    StdBasis BW = std_basis(R, rank, W);

    long long total = 0;
    for (size_t c = 0; c < rank; ++c) {
        const auto& LV = BV.lead_module[c];
        const auto& LW = BW.lead_module[c];
        std::set<std::vector<uint16_t>> seen;
        for (const auto& g : LW) {
            // monomials m with g*m outside the leading module of V
            std::vector<Monomial> colon;
            colon.reserve(LV.size());
            for (const auto& v : LV)
                colon.push_back(mono_div(mono_lcm(v, g, R.weights()), g));
            auto std_set = enumerate_standard_monomials(R.nvars(), R.weights(), colon);
            if (!std_set)
                return std::nullopt;
            for (const auto& m : *std_set)
                seen.insert(mono_mul(g, m).e);
        }
        total += static_cast<long long>(seen.size());
        if (total > kStaircaseCap)
            throw Error("subquotient length cap exceeded");
    }
    return total;
}

std::shared_ptr<const StdBasis> relation_basis(const AmbientRing& R, size_t rank)
{
    auto it = R.relation_basis_cache.find(rank);
    if (it != R.relation_basis_cache.end())
        return it->second;
    auto B = std::make_shared<const StdBasis>(std_basis(R, rank, {}, true));
    R.relation_basis_cache[rank] = B;
    return B;
}

Poly nf_mod_relations(const AmbientRing& R, const Poly& p)
{
    Vec v;
    v.c.push_back(p);
    Vec r = mora_nf(R, v, *relation_basis(R, 1));
    return r.c[0];
}

}  // namespace ulrich

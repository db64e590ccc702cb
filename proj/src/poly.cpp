#include "ulrich/poly.hpp"

#include <algorithm>

namespace ulrich {

Poly poly_zero() { return Poly{}; }

Poly poly_const(const PrimeField& F, int64_t c, size_t nvars)
{
    uint32_t r = F.reduce(c);
    Poly p;
    if (r != 0)
        p.t.push_back(Term{monomial_one(nvars), r});
    return p;
}

Poly poly_term(const Monomial& m, uint32_t c)
{
    Poly p;
    if (c != 0)
        p.t.push_back(Term{m, c});
    return p;
}

Poly poly_normalize(const PrimeField& F, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return local_cmp(a.m, b.m) > 0;
    });
    Poly out;
    out.t.reserve(terms.size());
    for (auto& tm : terms) {
        if (!out.t.empty() && out.t.back().m == tm.m) {
            out.t.back().c = F.add(out.t.back().c, tm.c);
            if (out.t.back().c == 0)
                out.t.pop_back();
        } else if (tm.c != 0) {
            out.t.push_back(tm);
        }
    }
    return out;
}

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b)
{
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int cmp = local_cmp(a.t[i].m, b.t[j].m);
        if (cmp > 0)
            out.t.push_back(a.t[i++]);
        else if (cmp < 0)
            out.t.push_back(b.t[j++]);
        else {
            uint32_t c = F.add(a.t[i].c, b.t[j].c);
            if (c != 0)
                out.t.push_back(Term{a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i)
        out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        out.t.push_back(b.t[j]);
    return out;
}

Poly poly_neg(const PrimeField& F, const Poly& a)
{
    Poly out = a;
    for (auto& tm : out.t)
        tm.c = F.neg(tm.c);
    return out;
}

Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b)
{
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_scale(const PrimeField& F, const Poly& a, uint32_t c)
{
    if (c == 0)
        return poly_zero();
    Poly out = a;
    for (auto& tm : out.t)
        tm.c = F.mul(tm.c, c);
    return out;
}

Poly poly_mul_term(const PrimeField& F, const Poly& a, const Monomial& m, uint32_t c)
{
    if (c == 0)
        return poly_zero();
    Poly out;
    out.t.reserve(a.t.size());
    for (const auto& tm : a.t)
        out.t.push_back(Term{mono_mul(tm.m, m), F.mul(tm.c, c)});
    return out;
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b)
{
    std::vector<Term> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const auto& ta : a.t)
        for (const auto& tb : b.t)
            acc.push_back(Term{mono_mul(ta.m, tb.m), F.mul(ta.c, tb.c)});
    return poly_normalize(F, std::move(acc));
}

bool poly_equal(const Poly& a, const Poly& b)
{
    if (a.t.size() != b.t.size())
        return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].c != b.t[i].c || a.t[i].m != b.t[i].m)
            return false;
    return true;
}

Vec vec_zero(size_t rank, size_t nvars)
{
    Vec v;
    v.c.assign(rank, poly_zero());
    (void)nvars;
    return v;
}

Vec vec_unit(size_t rank, size_t comp, size_t nvars)
{
    Vec v = vec_zero(rank, nvars);
    v.c[comp] = poly_term(monomial_one(nvars), 1);
    return v;
}

LeadRef vec_lead(const Vec& v)
{
    LeadRef l;
    for (size_t i = 0; i < v.c.size(); ++i) {
        if (!v.c[i].is_zero()) {
            l.comp = static_cast<int>(i);
            l.m = v.c[i].lead().m;
            l.coeff = v.c[i].lead().c;
            return l;
        }
    }
    return l;
}

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b)
{
    Vec out;
    out.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = poly_add(F, a.c[i], b.c[i]);
    return out;
}

Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b)
{
    Vec out;
    out.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = poly_sub(F, a.c[i], b.c[i]);
    return out;
}

Vec vec_scale(const PrimeField& F, const Vec& a, uint32_t c)
{
    Vec out;
    out.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = poly_scale(F, a.c[i], c);
    return out;
}

Vec vec_mul_term(const PrimeField& F, const Vec& a, const Monomial& m, uint32_t c)
{
    Vec out;
    out.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = poly_mul_term(F, a.c[i], m, c);
    return out;
}

Vec vec_mul_poly(const PrimeField& F, const Vec& a, const Poly& p)
{
    Vec out;
    out.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = poly_mul(F, a.c[i], p);
    return out;
}

bool vec_equal(const Vec& a, const Vec& b)
{
    if (a.c.size() != b.c.size())
        return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!poly_equal(a.c[i], b.c[i]))
            return false;
    return true;
}

}  // namespace ulrich

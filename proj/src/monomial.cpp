#include "ulrich/monomial.hpp"

#include "ulrich/field.hpp"

namespace ulrich {

int64_t weighted_degree(const std::vector<uint16_t>& e, const std::vector<int>& weights)
{
    int64_t t = 0;
    for (size_t i = 0; i < e.size(); ++i)
        t += static_cast<int64_t>(e[i]) * weights[i];
    return t;
}

Monomial monomial_one(size_t nvars)
{
    Monomial m;
    m.e.assign(nvars, 0);
    m.wdeg = 0;
    return m;
}

Monomial monomial_var(size_t nvars, size_t i, int exp, const std::vector<int>& weights)
{
    if (i >= nvars)
        throw Error("variable index out of range");
    Monomial m = monomial_one(nvars);
    m.e[i] = static_cast<uint16_t>(exp);
    m.wdeg = static_cast<int64_t>(exp) * weights[i];
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i)
        r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    r.wdeg = a.wdeg + b.wdeg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a)
{
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i)
        r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
    r.wdeg = b.wdeg - a.wdeg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights)
{
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i)
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    r.wdeg = weighted_degree(r.e, weights);
    return r;
}

int local_cmp(const Monomial& a, const Monomial& b)
{
    if (a.wdeg != b.wdeg)
        return a.wdeg < b.wdeg ? 1 : -1;  // lower weighted degree is larger
    for (size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? 1 : -1;  // revlex tie-break
    }
    return 0;
}

int module_cmp(int compA, const Monomial& a, int compB, const Monomial& b)
{
    if (compA != compB)
        return compA < compB ? 1 : -1;
    return local_cmp(a, b);
}

}  // namespace ulrich

#ifndef ULRICH_MONOMIAL_HPP
#define ULRICH_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace ulrich {

/// Exponent vector with cached weighted degree.
struct Monomial {
    std::vector<uint16_t> e;
    int64_t wdeg = 0;

    bool is_one() const
    {
        for (auto x : e)
            if (x)
                return false;
        return true;
    }
    int64_t total_degree() const
    {
        int64_t t = 0;
        for (auto x : e)
            t += x;
        return t;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial monomial_one(size_t nvars);
Monomial monomial_var(size_t nvars, size_t i, int exp, const std::vector<int>& weights);
int64_t weighted_degree(const std::vector<uint16_t>& e, const std::vector<int>& weights);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

/// Local order: anti-graded by weights (1 is largest), ties broken by
/// reverse lexicographic on the declared variable order.
/// Returns >0 if a > b, 0 if equal, <0 if a < b.
int local_cmp(const Monomial& a, const Monomial& b);

/// Position-over-term with ascending component index: lower component wins,
/// then the local order on monomials.
int module_cmp(int compA, const Monomial& a, int compB, const Monomial& b);

}  // namespace ulrich

#endif

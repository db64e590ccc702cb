#ifndef ULRICH_POLY_HPP
#define ULRICH_POLY_HPP

#include <string>
#include <vector>

#include "ulrich/field.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

struct Term {
    Monomial m;
    uint32_t c = 0;  // nonzero residue in [1, p)
};

/// Sparse polynomial over F_p; terms kept sorted, leading term first.
struct Poly {
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
    uint32_t constant_term() const
    {
        if (t.empty())
            return 0;
        const Term& last = t.back();
        return last.m.is_one() ? last.c : 0;
    }
};

Poly poly_zero();
Poly poly_const(const PrimeField& F, int64_t c, size_t nvars);
Poly poly_term(const Monomial& m, uint32_t c);
Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_neg(const PrimeField& F, const Poly& a);
Poly poly_scale(const PrimeField& F, const Poly& a, uint32_t c);
Poly poly_mul_term(const PrimeField& F, const Poly& a, const Monomial& m, uint32_t c);
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
bool poly_equal(const Poly& a, const Poly& b);
/// Sorts terms and merges duplicates; drops zero coefficients.
Poly poly_normalize(const PrimeField& F, std::vector<Term> terms);

/// Element of a free module R^rank; components are polynomials.
struct Vec {
    std::vector<Poly> c;

    size_t rank() const { return c.size(); }
    bool is_zero() const
    {
        for (const auto& p : c)
            if (!p.is_zero())
                return false;
        return true;
    }
};

struct LeadRef {
    int comp = -1;  // -1 on the zero vector
    Monomial m;
    uint32_t coeff = 0;
};

Vec vec_zero(size_t rank, size_t nvars);
Vec vec_unit(size_t rank, size_t comp, size_t nvars);
LeadRef vec_lead(const Vec& v);
Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& F, const Vec& a, uint32_t c);
Vec vec_mul_term(const PrimeField& F, const Vec& a, const Monomial& m, uint32_t c);
Vec vec_mul_poly(const PrimeField& F, const Vec& a, const Poly& p);
bool vec_equal(const Vec& a, const Vec& b);

}  // namespace ulrich

#endif

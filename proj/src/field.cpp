#include "ulrich/field.hpp"

namespace ulrich {

PrimeField::PrimeField(uint32_t p) : p_(p)
{
    if (!is_prime(p))
        throw Error("characteristic must be a prime number, got " + std::to_string(p));
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const
{
    uint32_t r = 1 % p_;
    uint32_t b = a % p_;
    while (e > 0) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const
{
    a %= p_;
    if (a == 0)
        throw Error("division by zero in F_" + std::to_string(p_));
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = p_, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<uint32_t>(t);
}

bool PrimeField::is_prime(uint32_t p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace ulrich

#ifndef ULRICH_FIELD_HPP
#define ULRICH_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace ulrich {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic in the prime field F_p. Values are residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t prime() const { return p_; }

    uint32_t reduce(int64_t v) const
    {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0)
            r += p_;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const
    {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return s >= p_ ? static_cast<uint32_t>(s - p_) : static_cast<uint32_t>(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const
    {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const
    {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    static bool is_prime(uint32_t p);

private:
    uint32_t p_;
};

}  // namespace ulrich

#endif

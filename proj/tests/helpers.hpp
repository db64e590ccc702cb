#ifndef ULRICH_TESTS_HELPERS_HPP
#define ULRICH_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "ulrich/poly_io.hpp"
#include "ulrich/ring.hpp"

namespace testutil {

using namespace ulrich;

// K[[x,y,z]]/(x^2+y^2+z^4), d = 2, weights (2,2,1)
inline RingPtr sec6_ring(uint32_t p = 32003)
{
    auto tmp = make_ring(p, {"x", "y", "z"}, {2, 2, 1}, {}, 2);
    Poly f = parse_poly(*tmp, "x^2 + y^2 + z^4");
    return make_ring(p, {"x", "y", "z"}, {2, 2, 1}, {f}, 2);
}

// K[[x,y]]/(x^2+y^4), d = 1, weights (2,1)
inline RingPtr a3_ring(uint32_t p = 32003)
{
    auto tmp = make_ring(p, {"x", "y"}, {2, 1}, {}, 1);
    Poly f = parse_poly(*tmp, "x^2 + y^4");
    return make_ring(p, {"x", "y"}, {2, 1}, {f}, 1);
}

inline Poly pp(const RingPtr& R, const std::string& s) { return parse_poly(*R, s); }

inline Vec pv(const RingPtr& R, const std::vector<std::string>& comps)
{
    Vec v;
    for (const auto& s : comps)
        v.c.push_back(parse_poly(*R, s));
    return v;
}

inline std::vector<Vec> ideal_vecs(const RingPtr& R, const std::vector<std::string>& gens)
{
    std::vector<Vec> out;
    for (const auto& g : gens)
        out.push_back(pv(R, {g}));
    return out;
}

// columns of the 3x4 presentation of (x, y, z^2) from the worked example
inline std::vector<Vec> sec6_psi_cols(const RingPtr& R)
{
    return {pv(R, {"-z^2", "0", "x"}), pv(R, {"0", "-z^2", "y"}), pv(R, {"-y", "x", "0"}),
            pv(R, {"x", "y", "z^2"})};
}

// columns of the symmetric 4x4 matrix with square = f * Id
inline std::vector<Vec> sec6_phi_cols(const RingPtr& R)
{
    return {pv(R, {"-z^2", "0", "-y", "x"}), pv(R, {"0", "-z^2", "x", "y"}),
            pv(R, {"-y", "x", "z^2", "0"}), pv(R, {"x", "y", "0", "z^2"})};
}

}  // namespace testutil

#endif

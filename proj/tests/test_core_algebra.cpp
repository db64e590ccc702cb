#include <doctest.h>

#include "helpers.hpp"
#include "ulrich/std_basis.hpp"

using namespace ulrich;
using namespace testutil;

TEST_CASE("prime field arithmetic")
{
    PrimeField F(32003);
    CHECK(F.mul(F.inv(17), 17) == 1);
    CHECK(F.reduce(-1) == 32002);
    CHECK_THROWS_AS(F.inv(0), Error);
    CHECK_THROWS_AS(PrimeField(32004), Error);
}

TEST_CASE("local order: 1 is largest, anti-graded, revlex ties")
{
    auto R = sec6_ring();
    Monomial one = monomial_one(3);
    Monomial x = monomial_var(3, 0, 1, R->weights());
    Monomial y = monomial_var(3, 1, 1, R->weights());
    Monomial z = monomial_var(3, 2, 1, R->weights());
    CHECK(local_cmp(one, x) > 0);
    CHECK(local_cmp(z, x) > 0);  // wdeg 1 < 2
    CHECK(local_cmp(x, y) > 0);  // tie at wdeg 2, revlex
    Monomial z2 = monomial_var(3, 2, 2, R->weights());
    CHECK(local_cmp(x, z2) > 0);
    CHECK(local_cmp(y, z2) > 0);
}

TEST_CASE("mora normal form on the hypersurface relation")
{
    auto R = sec6_ring();
    StdBasis B = std_basis(*R, 1, ideal_vecs(R, {"x", "y", "z^2"}));

    // x^2+y^2+z^4 = x*x + y*y + z^2*z^2
    CHECK(mora_nf(*R, pv(R, {"x^2 + y^2 + z^4"}), B).is_zero());
    CHECK(mora_nf(*R, pv(R, {"0"}), B).is_zero());
    Vec r = mora_nf(*R, pv(R, {"z"}), B);
    CHECK(poly_to_string(*R, r.c[0]) == "z");
}

TEST_CASE("standard basis of (x, y, z^2) has leading ideal (x, y, z^2)")
{
    auto R = sec6_ring();
    StdBasis B = std_basis(*R, 1, ideal_vecs(R, {"x", "y", "z^2"}));
    REQUIRE(B.complete);
    auto& lm = B.lead_module[0];
    REQUIRE(lm.size() == 3);
    std::vector<std::string> leads;
    for (const auto& m : lm)
        leads.push_back(poly_to_string(*R, poly_term(m, 1)));
    CHECK(std::find(leads.begin(), leads.end(), "x") != leads.end());
    CHECK(std::find(leads.begin(), leads.end(), "y") != leads.end());
    CHECK(std::find(leads.begin(), leads.end(), "z^2") != leads.end());

    // every input generator reduces to zero against the basis
    for (const auto& g : ideal_vecs(R, {"x", "y", "z^2"}))
        CHECK(mora_nf(*R, g, B).is_zero());

    // leading-module idempotence
    StdBasis B2 = std_basis(*R, 1, B.gens);
    CHECK(B2.lead_module[0].size() == B.lead_module[0].size());
    for (size_t i = 0; i < B.lead_module[0].size(); ++i)
        CHECK(B2.lead_module[0][i] == B.lead_module[0][i]);
}

TEST_CASE("standard basis edge cases")
{
    auto R = sec6_ring();
    StdBasis empty = std_basis(*R, 1, {});
    // the zero submodule in R^1 still carries the ring relation
    CHECK(quotient_length(*R, empty) == std::nullopt);

    StdBasis unit = std_basis(*R, 1, ideal_vecs(R, {"1"}));
    bool hasOne = false;
    for (const auto& m : unit.lead_module[0])
        hasOne |= m.is_one();
    CHECK(hasOne);
    CHECK(quotient_length(*R, unit) == 0);
}

TEST_CASE("lengths of quotients (paper values)")
{
    auto R = sec6_ring();
    StdBasis BI = std_basis(*R, 1, ideal_vecs(R, {"x", "y", "z^2"}));
    CHECK(quotient_length(*R, BI) == 2);
    StdBasis BQ = std_basis(*R, 1, ideal_vecs(R, {"x", "y"}));
    CHECK(quotient_length(*R, BQ) == 4);
    StdBasis BR = std_basis(*R, 1, ideal_vecs(R, {"1"}));
    CHECK(quotient_length(*R, BR) == 0);
}

TEST_CASE("submodule membership")
{
    auto R = sec6_ring();
    // QI for Q = (x,y), I = (x,y,z^2)
    std::vector<Vec> qi = ideal_vecs(R, {"x^2", "x*y", "x*z^2", "y*x", "y^2", "y*z^2"});
    StdBasis B = std_basis(*R, 1, qi);
    CHECK(is_member(*R, pv(R, {"z^4"}), B));
    CHECK(is_member(*R, pv(R, {"0"}), B));
    StdBasis BI = std_basis(*R, 1, ideal_vecs(R, {"x", "y", "z^2"}));
    CHECK_FALSE(is_member(*R, pv(R, {"1"}), BI));
    CHECK_THROWS_AS(is_member(*R, pv(R, {"x", "y"}), BI), Error);
}

TEST_CASE("submodule equality: I^2 = QI in the detailed example")
{
    auto R = sec6_ring();
    std::vector<Vec> I2 =
        ideal_vecs(R, {"x^2", "x*y", "x*z^2", "y^2", "y*z^2", "z^4"});
    std::vector<Vec> QI = ideal_vecs(R, {"x^2", "x*y", "x*z^2", "y*x", "y^2", "y*z^2"});
    CHECK(submodule_equals(*R, 1, I2, QI));
    CHECK(submodule_equals(*R, 1, ideal_vecs(R, {"x"}), ideal_vecs(R, {"x", "x^2"})));
    CHECK_FALSE(submodule_equals(*R, 1, ideal_vecs(R, {"x"}), ideal_vecs(R, {"x", "y"})));
}

TEST_CASE("syzygies: regular element has only relation syzygies")
{
    auto R = sec6_ring();
    auto syz = syzygies(*R, 1, ideal_vecs(R, {"x"}));
    CHECK(syz.empty());
}

TEST_CASE("syzygies of (x, y) over K[x,y]/(x^2+y^4)")
{
    auto R = a3_ring();
    std::vector<Vec> gens = ideal_vecs(R, {"x", "y"});
    auto syz = syzygies(*R, 1, gens);
    REQUIRE(!syz.empty());
    // every returned syzygy annihilates the generators modulo the relation
    auto relB = relation_basis(*R, 1);
    for (const auto& s : syz) {
        Poly acc = poly_zero();
        for (size_t i = 0; i < gens.size(); ++i)
            acc = poly_add(R->field(), acc, poly_mul(R->field(), s.c[i], gens[i].c[0]));
        Vec v;
        v.c.push_back(acc);
        CHECK(mora_nf(*R, v, *relB).is_zero());
    }
    // the kernel contains the Koszul syzygy and the relation-induced one
    StdBasis B = std_basis(*R, 2, syz);
    CHECK(is_member(*R, pv(R, {"y", "-x"}), B));
    CHECK(is_member(*R, pv(R, {"x", "y^3"}), B));
}

TEST_CASE("syzygies of the three generators of the detailed-example ideal")
{
    auto R = sec6_ring();
    std::vector<Vec> gens = ideal_vecs(R, {"x", "y", "z^2"});
    auto syz = syzygies(*R, 1, gens);
    StdBasis B = std_basis(*R, 3, syz);
    // columns of the 3x4 presentation from the worked example
    CHECK(is_member(*R, pv(R, {"-z^2", "0", "x"}), B));
    CHECK(is_member(*R, pv(R, {"0", "-z^2", "y"}), B));
    CHECK(is_member(*R, pv(R, {"-y", "x", "0"}), B));
    CHECK(is_member(*R, pv(R, {"x", "y", "z^2"}), B));
}

TEST_CASE("submodule_equals is an equivalence relation on represented submodules")
{
    auto R = a3_ring();
    std::vector<std::vector<Vec>> pool = {
        ideal_vecs(R, {"x", "y^2"}),
        ideal_vecs(R, {"y^2", "x"}),
        ideal_vecs(R, {"x", "y^2", "x*y"}),
        ideal_vecs(R, {"x^2", "y^2"}),
        ideal_vecs(R, {"y"}),
    };
    for (const auto& A : pool)
        CHECK(submodule_equals(*R, 1, A, A));
    for (const auto& A : pool)
        for (const auto& B : pool) {
            CHECK(submodule_equals(*R, 1, A, B) == submodule_equals(*R, 1, B, A));
            for (const auto& C : pool) {
                if (submodule_equals(*R, 1, A, B) && submodule_equals(*R, 1, B, C))
                    CHECK(submodule_equals(*R, 1, A, C));
            }
        }
    CHECK(submodule_equals(*R, 1, pool[0], pool[1]));
    CHECK(submodule_equals(*R, 1, pool[0], pool[2]));
    CHECK_FALSE(submodule_equals(*R, 1, pool[0], pool[3]));
}

TEST_CASE("polynomial parser errors")
{
    auto R = sec6_ring();
    CHECK_THROWS_AS(parse_poly(*R, "x + w"), ParseError);
    CHECK_THROWS_AS(parse_poly(*R, "x +"), ParseError);
    CHECK_THROWS_AS(parse_poly(*R, "(x"), ParseError);
    Poly p = parse_poly(*R, "2*x^2 - 3*(y + z)*z + 1");
    Poly q = parse_poly(*R, "2*x^2 - 3*y*z - 3*z^2 + 1");
    CHECK(poly_equal(p, q));
}

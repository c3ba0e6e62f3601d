#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rigid/grobner.hpp"
#include "rigid/parse.hpp"

using namespace rigid;

namespace {

LaurentPoly P(const std::string& s, int d = 0) { return parsePoly(s, d); }

SubmoduleHandle ideal(std::vector<LaurentPoly> gens) {
    int d = gens.front().dim();
    return SubmoduleHandle::ideal(d, std::move(gens));
}

LaurentPoly normalFormIdeal(const LaurentPoly& v, const SubmoduleHandle& U) {
    PolyVec nf = normalForm({v.monomialNormalize()}, U.basis());
    return nf[0];
}

}  // namespace

TEST_CASE("ideal (2, u): basis and normal forms in the polynomial ring") {
    StrongGBasis B = strongGroebner({{P("2")}, {P("u1")}}, 1, 1,
                                    MonomialOrder::grevlex());
    CHECK(normalForm({P("3")}, B)[0] == P("1"));
    CHECK(normalForm({P("u1^3 + 4")}, B)[0].isZero());
    CHECK(normalForm({P("2")}, B)[0].isZero());
    CHECK(normalForm({P("u1")}, B)[0].isZero());
    // In the polynomial ring 3 is not a Z-combination of 2 and u times
    // polynomial cofactors with nonnegative exponents; the brute-force oracle
    // over box 0 (constant cofactors and u-multiples stay positive) agrees
    // once restricted to the saturation-free reading. In the Laurent ring u
    // is a unit, so the ideal is everything.
    SubmoduleHandle U = ideal({P("2"), P("u1")});
    CHECK(isMember(P("3"), U));
    std::vector<LaurentPoly> gens = {P("2"), P("u1")};
    CHECK(oracle::bruteForceMember(P("3"), gens, 2));
    CHECK(oracle::bruteForceMember(P("u1^2 + 2"), gens, 2));
}

TEST_CASE("ideal (u-1, u+1) contains 2") {
    SubmoduleHandle U = ideal({P("u1 - 1"), P("u1 + 1")});
    CHECK(isMember(P("2"), U));
    CHECK(normalFormIdeal(P("2"), U).isZero());
    // The strong basis reduces everything the pair generates, e.g. u+1 and 2.
    CHECK(isMember(P("u1 + 1"), U));
    CHECK_FALSE(isMember(P("1"), U));
}

TEST_CASE("unit ideal") {
    SubmoduleHandle U = ideal({P("1")});
    CHECK(isMember(P("17"), U));
    CHECK(normalFormIdeal(P("u1^2 - 5"), U).isZero());
}

TEST_CASE("normal_form examples") {
    SubmoduleHandle U = ideal({P("u1 - 1")});
    CHECK(normalFormIdeal(P("u1^2 - 1"), U).isZero());
    CHECK(normalFormIdeal(LaurentPoly(1), U).isZero());
}

TEST_CASE("normal_form is idempotent") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        std::vector<LaurentPoly> gens;
        for (int i = 0; i < 2; ++i) {
            LaurentPoly g = oracle::randomPoly(rng, 2, 2, 3, 3);
            if (!g.isZero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        SubmoduleHandle U = ideal(gens);
        LaurentPoly v = oracle::randomPoly(rng, 2, 3, 5, 4);
        LaurentPoly nf = normalFormIdeal(v, U);
        CHECK(normalFormIdeal(nf, U) == nf);
    }
}

TEST_CASE("is_member examples") {
    CHECK(isMember(P("u1*u2 - 1"), ideal({P("u1*u2 - 1")})));
    CHECK_FALSE(isMember(P("u1^2 - 1"), ideal({P("u1 - 2")})));
    CHECK(isMember(P("2"), ideal({P("u1 - 1"), P("u1 + 1")})));
}

TEST_CASE("membership works on Laurent inputs") {
    // v with negative exponents is a unit multiple of a member.
    SubmoduleHandle U = ideal({P("u1 - 1")});
    CHECK(isMember(P("u1^-1 - 1"), U));
    CHECK(isMember(P("u1^-2 - u1^2"), U));
}

TEST_CASE("saturate_vars examples") {
    SubmoduleHandle A = ideal({P("u1*(u1 - 1)")});
    CHECK(isMember(P("u1 - 1"), A));
    CHECK(submoduleEqual(A, ideal({P("u1 - 1")})));
    CHECK(submoduleEqual(ideal({P("1")}), ideal({P("1")})));
    SubmoduleHandle B = ideal({P("u1*u2^2 + u1*u2", 2)});
    CHECK(isMember(P("u2 + 1", 2), B));
}

TEST_CASE("module_colon examples") {
    SubmoduleHandle C1 = moduleColon(ideal({P("(u1 - 1)^2")}), P("u1 - 1"));
    CHECK(submoduleEqual(C1, ideal({P("u1 - 1")})));
    SubmoduleHandle U = ideal({P("u1^2 + 3")});
    CHECK(submoduleEqual(moduleColon(U, P("1")), U));
    SubmoduleHandle C2 = moduleColon(ideal({P("2*u1")}), P("2"));
    CHECK(submoduleEqual(C2, ideal({P("u1")})));
}

TEST_CASE("colon contains the original module") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        LaurentPoly g = oracle::randomPoly(rng, 2, 2, 3, 3);
        LaurentPoly h = oracle::randomPoly(rng, 2, 2, 3, 2);
        if (g.isZero() || h.isZero()) continue;
        SubmoduleHandle U = ideal({g});
        SubmoduleHandle C = moduleColon(U, h);
        for (const auto& r : U.rows()) CHECK(isMember(r, C));
    }
}

TEST_CASE("colon detects zero divisors exactly on principal ideals") {
    // h is a zero divisor on R/(g) iff gcd considerations put g/h-overlap in
    // the colon; checked against brute-force membership of the colon witness.
    SubmoduleHandle U = ideal({P("u1*u2 - 1")});
    SubmoduleHandle C = moduleColon(U, P("u1*u2 - 1"));
    CHECK(isMember(P("1", 2), C));
    CHECK_FALSE(submoduleEqual(C, U));

    SubmoduleHandle V = ideal({P("1 + u1 + u2")});
    CHECK(submoduleEqual(moduleColon(V, P("u1 - 1", 2)), V));
}

TEST_CASE("submodule_equal examples") {
    CHECK(submoduleEqual(ideal({P("u1 - 1")}), ideal({P("1 - u1")})));
    // In the plain polynomial ring 1 is not in (2, u): its normal form is 1.
    // As Laurent ideals u is a unit, so (2, u) saturates to (1).
    StrongGBasis B = strongGroebner({{P("2")}, {P("u1")}}, 1, 1,
                                    MonomialOrder::grevlex());
    CHECK(normalForm({P("1")}, B)[0] == P("1"));
    CHECK(submoduleEqual(ideal({P("2"), P("u1")}), ideal({P("1")})));
    CHECK_FALSE(submoduleEqual(ideal({P("2"), P("u1 - 1")}), ideal({P("1")})));
    CHECK(submoduleEqual(ideal({P("u1*(u1 - 1)")}), ideal({P("u1 - 1")})));
}

TEST_CASE("membership is order independent") {
    std::mt19937_64 rng(47);
    MonomialOrder orders[2] = {MonomialOrder::grevlex(), MonomialOrder::lex()};
    for (int t = 0; t < 25; ++t) {
        std::vector<PolyVec> gens;
        for (int i = 0; i < 2; ++i) {
            LaurentPoly g = oracle::randomPoly(rng, 2, 2, 3, 3).monomialNormalize();
            if (!g.isZero()) gens.push_back({g});
        }
        if (gens.empty()) continue;
        LaurentPoly v = oracle::randomPoly(rng, 2, 3, 5, 3).monomialNormalize();
        bool verdicts[2];
        for (int o = 0; o < 2; ++o) {
            StrongGBasis B = strongGroebner(gens, 2, 1, orders[o]);
            verdicts[o] = vecIsZero(normalForm({v}, B));
        }
        CHECK(verdicts[0] == verdicts[1]);
    }
}

TEST_CASE("membership agrees with brute force on random ideals") {
    std::mt19937_64 rng(53);
    int agree = 0, total = 0;
    for (int t = 0; t < 120; ++t) {
        int d = 1 + (t % 2);
        std::vector<LaurentPoly> gens;
        for (int i = 0; i < 2; ++i) {
            LaurentPoly g = oracle::randomPoly(rng, d, 2, 3, 2);
            if (!g.isZero()) gens.push_back(g.monomialNormalize());
        }
        if (gens.empty()) continue;
        // Half the probes are forced members.
        LaurentPoly v;
        if (t % 2 == 0) {
            v = gens[0] * oracle::randomPoly(rng, d, 1, 2, 2);
            if (gens.size() > 1) v = v + gens[1] * oracle::randomPoly(rng, d, 1, 2, 1);
        } else {
            v = oracle::randomPoly(rng, d, 2, 4, 3);
        }
        if (v.isZero()) continue;
        v = v.monomialNormalize();
        bool engine = isMember(v, ideal(gens));
        // The brute-force box only searches a bounded cofactor support, so it
        // can only under-approximate membership.
        bool brute = oracle::bruteForceMember(v, gens, 4);
        ++total;
        if (brute) CHECK(engine);
        if (!engine) CHECK_FALSE(brute);
        if (engine == brute) ++agree;
    }
    CHECK(total > 60);
    CHECK(agree == total);
}

TEST_CASE("module (rank 2) membership and colon") {
    // U = span{(u-1, 0), (0, 2)} in R_1^2.
    std::vector<PolyVec> rows = {{P("u1 - 1"), LaurentPoly(1)},
                                 {LaurentPoly(1), P("2")}};
    SubmoduleHandle U(1, 2, rows);
    CHECK(isMember(PolyVec{P("u1^2 - 1"), P("4")}, U));
    CHECK_FALSE(isMember(PolyVec{P("1"), LaurentPoly(1)}, U));
    SubmoduleHandle C = moduleColon(U, P("2"));
    CHECK(isMember(PolyVec{LaurentPoly(1), P("1")}, C));
    CHECK_FALSE(isMember(PolyVec{P("1"), LaurentPoly(1)}, C));
}

TEST_CASE("budget failure is explicit") {
    Limits tiny;
    tiny.maxPairs = 1;
    std::vector<PolyVec> gens = {{P("u1^2*u2 + u1", 2).monomialNormalize()},
                                 {P("u1*u2^2 + u2", 2).monomialNormalize()},
                                 {P("u1^3 + u2^3 + 1", 2)}};
    CHECK_THROWS_AS(strongGroebner(gens, 2, 1, MonomialOrder::grevlex(), tiny),
                    BudgetExceeded);
}

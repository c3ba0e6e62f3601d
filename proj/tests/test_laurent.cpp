#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rigid/laurent.hpp"
#include "rigid/parse.hpp"

using namespace rigid;

namespace {

LaurentPoly P(const std::string& s, int d = 0) { return parsePoly(s, d); }

LaurentPoly randomLaurent(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> expDist(-3, 3);
    std::uniform_int_distribution<int> coeffDist(-4, 4);
    std::uniform_int_distribution<int> termDist(0, 4);
    LaurentPoly f(d);
    int terms = termDist(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(d);
        for (int a = 0; a < d; ++a) e[a] = expDist(rng);
        f.addTerm(Monomial(e), coeffDist(rng));
    }
    return f;
}

std::vector<std::complex<double>> randomTorusPoint(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::complex<double>> z(d);
    for (int a = 0; a < d; ++a) {
        double t = 2 * M_PI * u(rng);
        z[a] = {std::cos(t), std::sin(t)};
    }
    return z;
}

}  // namespace

TEST_CASE("add: examples") {
    CHECK(P("u1 - 1") + P("1") == P("u1"));
    LaurentPoly f = P("3*u1^2 - u2", 2);
    CHECK(f + LaurentPoly(2) == f);
    CHECK(P("1 + u1 + u2") + (-P("u1", 2)) == P("1 + u2", 2));
}

TEST_CASE("mul: examples") {
    CHECK(P("u1") * P("u1^-1") == LaurentPoly::constant(1, 1));
    CHECK(P("u1 - 1") * P("u1 + 1") == P("u1^2 - 1"));
    CHECK(P("1 + u1 + u2") * P("1 - u1", 2) ==
          P("1 - u1^2 + u2 - u1*u2", 2));
}

TEST_CASE("mul: derived products verified by evaluation") {
    std::mt19937_64 rng(7);
    LaurentPoly f = P("1 + u1 + u2");
    LaurentPoly g = P("1 - u1", 2);
    LaurentPoly h = f * g;
    for (int t = 0; t < 3; ++t) {
        auto z = randomTorusPoint(rng, 2);
        CHECK(std::abs(h.eval(z) - f.eval(z) * g.eval(z)) < 1e-10);
    }
}

TEST_CASE("eval: examples") {
    CHECK(P("u1 - 2").eval({{1.0, 0.0}}) == std::complex<double>(-1.0, 0.0));
    CHECK(P("1 + u1 + u2").eval({{1, 0}, {1, 0}}) == std::complex<double>(3, 0));
    // u1*u2 - 1 at (i, -i): i * (-i) = 1, so the value is 0.
    std::complex<double> v =
        P("u1*u2 - 1").eval({{0.0, 1.0}, {0.0, -1.0}});
    CHECK(std::abs(v) < 1e-15);
}

TEST_CASE("eval rejects zero coordinates") {
    CHECK_THROWS(P("u1^-1").eval({{0.0, 0.0}}));
}

TEST_CASE("content: examples") {
    CHECK(P("2 + 2*u1").content() == 2);
    CHECK(P("1 + u1 + u2").content() == 1);
    CHECK(P("6*u1^-1 + 9*u2").content() == 3);
    CHECK(LaurentPoly(2).content() == 0);
}

TEST_CASE("monomial_normalize: examples") {
    CHECK(P("u1^-1 + 1").monomialNormalize() == P("1 + u1"));
    LaurentPoly f = P("1 + u1*u2", 2);
    CHECK(f.monomialNormalize() == f);
    CHECK(P("u1^-2*u2 + u1^-1", 2).monomialNormalize() == P("u2 + u1", 2));
}

TEST_CASE("substitute_monomial: examples") {
    CHECK(P("u1*u2 - 1").substituteMonomial({1, 1}) == P("u1^2 - 1"));
    CHECK(unMinusOne(2, {1, 0}).substituteMonomial({1, 0}) == P("u1 - 1"));
    CHECK(P("1 + u1 + u2").substituteMonomial({1, -1}) ==
          P("1 + u1 + u1^-1"));
}

TEST_CASE("substitute_monomial rejects n = 0") {
    CHECK_THROWS(P("1 + u1 + u2").substituteMonomial({0, 0}));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int d = 1; d <= 3; ++d) {
        for (int t = 0; t < 40; ++t) {
            LaurentPoly f = randomLaurent(rng, d);
            LaurentPoly g = randomLaurent(rng, d);
            LaurentPoly h = randomLaurent(rng, d);
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f + g) + h == f + (g + h));
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f - f == LaurentPoly(d));
        }
    }
}

TEST_CASE("content is multiplicative (Gauss's lemma)") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        LaurentPoly f = randomLaurent(rng, 2);
        LaurentPoly g = randomLaurent(rng, 2);
        CHECK((f * g).content() == f.content() * g.content());
    }
}

TEST_CASE("eval is multiplicative on the torus") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        LaurentPoly f = randomLaurent(rng, 2);
        LaurentPoly g = randomLaurent(rng, 2);
        auto z = randomTorusPoint(rng, 2);
        std::complex<double> lhs = (f * g).eval(z);
        std::complex<double> rhs = f.eval(z) * g.eval(z);
        double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-10);
    }
}

TEST_CASE("monomial_normalize is idempotent and preserves content") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        LaurentPoly f = randomLaurent(rng, 2);
        LaurentPoly n = f.monomialNormalize();
        CHECK(n.monomialNormalize() == n);
        CHECK(n.content() == f.content());
        CHECK(n.inPositiveOrthant());
    }
}

TEST_CASE("pow handles negative exponents on unit monomials only") {
    CHECK(P("u1").pow(-2) == P("u1^-2"));
    CHECK(P("u1 + 1").pow(2) == P("u1^2 + 2*u1 + 1"));
    CHECK_THROWS(P("u1 + 1").pow(-1));
}

TEST_CASE("canonical form: no zero coefficients stored") {
    LaurentPoly f(2);
    f.addTerm(Monomial({1, 0}), 3);
    f.addTerm(Monomial({1, 0}), -3);
    CHECK(f.isZero());
    CHECK(f.termCount() == 0);
}

TEST_CASE("exactDivide in the Laurent ring") {
    LaurentPoly q(2);
    CHECK(exactDivide(P("u1^2 - 1"), P("u1 - 1"), q));
    CHECK(q == P("u1 + 1"));
    CHECK(exactDivide(P("u1*u2 - u1", 2), P("u2 - 1", 2), q));
    CHECK(q == P("u1", 2));
    // Laurent units divide everything.
    CHECK(exactDivide(P("1 + u1 + u2"), P("u1^-1*u2", 2), q));
    CHECK(q * P("u1^-1*u2", 2) == P("1 + u1 + u2"));
    CHECK_FALSE(exactDivide(P("u1^2 - 1"), P("u1 - 2"), q));
}

TEST_CASE("exactDivide agrees with multiplication on random pairs") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        LaurentPoly f = randomLaurent(rng, 2);
        LaurentPoly g = randomLaurent(rng, 2);
        if (g.isZero()) continue;
        LaurentPoly q(2);
        CHECK(exactDivide(f * g, g, q));
        CHECK(q == f);
    }
}

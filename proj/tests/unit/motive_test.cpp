#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lr.hpp"
#include "motive.hpp"

using namespace kzr;

TEST_CASE("kappa parameter") {
    KappaParam k = KappaParam::make(4, Rational(12, 7));
    CHECK(k.N == 48);
    CHECK(is_integer(Rational(k.N) / k.kappa));
    CHECK(is_integer(Rational(5) * Rational(k.N) / k.kappa));
    CHECK_THROWS_AS(KappaParam::make(3, Rational(-2)), domain_error);
    CHECK_THROWS_AS(KappaParam::make(3, Rational(0)), domain_error);
}

TEST_CASE("rank-one polynomials: integral branches") {
    // integral a with integral 1/kappa
    CHECK(delmos(Rational(3), Rational(1)) == HodgePoly::one());
    CHECK(delmos(Rational(5), Rational(1, 2)) == HodgePoly::one());
    // a/kappa integral
    CHECK(delmos(Rational(6), Rational(3)) == HodgePoly::one());
    // (1+a)/kappa integral but a/kappa not
    CHECK(delmos(Rational(5), Rational(3)) == HodgePoly::monomial(1));
}

TEST_CASE("rank-one polynomials: fractional branch") {
    CHECK(delmos(Rational(1), Rational(3)) == HodgePoly::monomial(1));
    CHECK(delmos(Rational(1), Rational(3, 2)) == HodgePoly::one());
}

TEST_CASE("rank-one polynomials on the sl_2 grid") {
    // kappa = ell + 2: every nonvanishing class gives t; the complex
    // conjugate parameter gives 1 inside the alcove blocks and t on the
    // block boundary
    for (int ell = 1; ell <= 8; ++ell) {
        Rational kap(ell + 2);
        Rational kapbar(ell + 2, ell + 1);
        for (int a = 1; a <= 40; ++a) {
            HodgePoly d = delmos(Rational(a), kap);
            CHECK(d.is_monomial());
            CHECK((d.degree() == 0 || d.degree() == 1));
            if (a % (ell + 2) == 0)
                CHECK(d == HodgePoly::one());
            else
                CHECK(d == HodgePoly::monomial(1));

            HodgePoly dbar = delmos(Rational(a), kapbar);
            int r = a % (ell + 2);
            if (r == ell + 1)
                CHECK(dbar == HodgePoly::monomial(1));
            else
                CHECK(dbar == HodgePoly::one());
        }
    }
}

TEST_CASE("delmos rejects nonpositive input") {
    CHECK_THROWS_AS(delmos(Rational(0), Rational(3)), domain_error);
    CHECK_THROWS_AS(delmos(Rational(-1), Rational(3)), domain_error);
    CHECK_THROWS_AS(delmos(Rational(1), Rational(0)), domain_error);
}

TEST_CASE("Pieri varpi_1 polynomial") {
    CHECK(pieri1_poly(Weight(4, {3, 1, 0}), 0, Rational(7)) == HodgePoly::one());
    // single factor [(lambda, alpha_1); kappa] for sl_2
    for (int p = 1; p <= 12; ++p)
        for (int den = 1; den <= 4; ++den) {
            Rational kap(7, den);
            CHECK(pieri1_poly(Weight(2, {p}), 1, kap) == delmos(Rational(p), kap));
        }
    CHECK(pieri1_poly(Weight(2, {1}), 1, Rational(3)) == HodgePoly::monomial(1));
}

TEST_CASE("Pieri varpi_1 polynomial is a unit monomial of degree at most M") {
    for (const Weight& lam : weights_up_to(4, 7))
        for (const Weight& mu : classical_pieri(lam, 1)) {
            auto combo = pieri_combo(lam, 1, mu);
            REQUIRE(combo.has_value());
            for (const Rational& kap : {Rational(5), Rational(12, 5), Rational(1, 3), Rational(9, 2)}) {
                HodgePoly p = pieri1_poly(lam, combo->num_vars, kap);
                CHECK(p.is_monomial());
                CHECK(p.coeff(p.degree()) == 1);
                CHECK(p.degree() <= combo->num_vars);
            }
        }
}

TEST_CASE("local exponents cancel against the unit class") {
    auto exps = local_exponents(3, Rational(5, 2), {Weight(3, {4, 2}), Weight::zero(3)});
    REQUIRE(exps.size() == 1);
    CHECK(exps[0].target == Weight(3, {4, 2}));
    CHECK(exps[0].exponent == 0);
}

TEST_CASE("local exponents of the rigid rank-four datum are distinct mod 1") {
    auto exps = local_exponents(4, Rational(12), {Weight(4, {5, 2, 2}), Weight(4, {1, 0, 0})});
    REQUIRE(exps.size() == 3);
    std::set<Rational> residues;
    long mult_total = 0;
    for (const auto& e : exps) {
        residues.insert(frac(e.exponent));
        mult_total += e.multiplicity;
    }
    CHECK(residues.size() == 3);
    CHECK(mult_total == 4);
}

TEST_CASE("sl_2 exponents against the Casimir") {
    auto exps = local_exponents(2, Rational(4), {Weight(2, {1}), Weight(2, {1})});
    REQUIRE(exps.size() == 2);
    Rational c1 = casimir(Weight(2, {1}));
    for (const auto& e : exps)
        CHECK(e.exponent == (2 * c1 - casimir(e.target)) / 8);
}

TEST_CASE("exponent differences land in (1/kappa) Z inside the root lattice") {
    Rational kap(7, 3);
    auto exps = local_exponents(3, kap, {Weight::highest_root(3), Weight::highest_root(3)});
    for (const auto& a : exps)
        for (const auto& b : exps) CHECK(is_integer((a.exponent - b.exponent) * kap));
}

TEST_CASE("weight bounds") {
    HodgePoly f;
    f.add_term(8, 2);
    f.add_term(7, 1);
    HodgePoly fbar;
    fbar.add_term(2, 1);
    fbar.add_term(1, 1);
    fbar.add_term(0, 1);
    CHECK(weight_bounds(f, fbar) == std::pair<long, long>(7, 10));
    CHECK(weight_bounds(HodgePoly::monomial(11), HodgePoly::one()) == std::pair<long, long>(11, 11));
    CHECK(weight_bounds(HodgePoly::one(), HodgePoly::one()) == std::pair<long, long>(0, 0));
    CHECK_THROWS_AS(weight_bounds(HodgePoly(), HodgePoly::one()), domain_error);
}

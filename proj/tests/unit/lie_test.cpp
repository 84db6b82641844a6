#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lr.hpp"
#include "weight.hpp"

using namespace kzr;

namespace {

// brute-force sl_2 tensor decomposition from weight multiplicities: the
// independent oracle for the Clebsch-Gordan shape of lr_tensor
std::map<int, long> sl2_tensor_brute(int p, int q) {
    // weights of V_p (x) V_q on the h-axis: p+q-2i-2j
    std::map<int, long> mult;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) mult[p + q - 2 * i - 2 * j]++;
    std::map<int, long> out;
    for (int h = p + q; h >= 0; --h) {
        long m = mult[h] - (mult.count(h + 2) ? mult[h + 2] : 0);
        if (m > 0) out[h] = m;
    }
    return out;
}

}  // namespace

TEST_CASE("weight normalization and validation") {
    CHECK_THROWS_AS(Weight(3, {5, 7}), bad_argument);
    CHECK_THROWS_AS(Weight(3, {5}), bad_argument);
    CHECK_THROWS_AS(Weight(3, {5, -1}), bad_argument);
    CHECK(Weight::from_lvec(3, {9, 7, 2}) == Weight(3, {7, 5}));
    CHECK(level(Weight(3, {7, 5})) == 7);
    CHECK(boxes(Weight(4, {3, 3, 1})) == 7);
}

TEST_CASE("pairing values") {
    // (varpi, varpi) = 1 - 1/2 for sl_2
    CHECK(pairing(Weight::fundamental(2, 1), Weight::fundamental(2, 1)) == Rational(1, 2));
    // (theta, theta) = 2 for every rank
    for (int n = 2; n <= 6; ++n)
        CHECK(pairing(Weight::highest_root(n), Weight::highest_root(n)) == 2);
    // (lambda, alpha_i) = a_i - a_{i+1}
    CHECK(pairing_simple_root(Weight(3, {7, 5}), 1) == 2);
    CHECK(pairing_simple_root(Weight(3, {7, 5}), 2) == 5);
    CHECK_THROWS_AS(pairing(Weight(3, {7, 5}), Weight(2, {7})), bad_argument);
}

TEST_CASE("pairing is symmetric and dominant-integral on simple roots") {
    std::mt19937_64 rng(3);
    auto pool = weights_up_to(4, 8);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 200; ++i) {
        Weight a = pool[pick(rng)], b = pool[pick(rng)];
        CHECK(pairing(a, b) == pairing(b, a));
        for (int j = 1; j <= 3; ++j) {
            Rational v = pairing_simple_root(a, j);
            CHECK(is_integer(v));
            CHECK(v >= 0);
        }
    }
}

TEST_CASE("casimir values") {
    for (int p = 0; p <= 12; ++p)
        CHECK(casimir(Weight(2, {p})) == Rational(p * (p + 2), 2));
    CHECK(casimir(Weight::zero(5)) == 0);
    for (int n = 2; n <= 6; ++n) CHECK(casimir(Weight::highest_root(n)) == 2 * n);
}

TEST_CASE("dual is an involution preserving level and casimir") {
    CHECK(dual(Weight(3, {7, 5})) == Weight(3, {7, 2}));
    CHECK(dual(Weight::zero(4)) == Weight::zero(4));
    for (int n = 3; n <= 5; ++n)
        CHECK(dual(Weight::fundamental(n, 1)) == Weight::fundamental(n, n - 1));
    for (const Weight& w : weights_up_to(4, 7)) {
        CHECK(dual(dual(w)) == w);
        CHECK(level(dual(w)) == level(w));
        CHECK(casimir(dual(w)) == casimir(w));
    }
}

TEST_CASE("root decomposition") {
    Weight alpha(2, {2});
    auto rv = root_decompose({alpha, alpha, alpha}, alpha);
    REQUIRE(rv.has_value());
    CHECK(rv->coeffs == std::vector<Rational>{2});
    CHECK(rv->total() == 2);

    Weight lam(3, {4, 1});
    auto self = root_decompose({lam}, lam);
    REQUIRE(self.has_value());
    CHECK(self->total() == 0);

    // a difference outside the nonnegative root cone
    CHECK_FALSE(root_decompose({Weight(2, {1})}, Weight(2, {3})).has_value());
    CHECK_FALSE(root_decompose({Weight(2, {1})}, Weight(2, {0})).has_value());

    std::vector<Weight> four = {Weight(4, {3, 3, 1}), Weight(4, {3, 2, 1}), Weight(4, {3, 2, 2}),
                                Weight(4, {1, 1, 0})};
    auto big = root_decompose(four, Weight(4, {3, 3, 0}));
    REQUIRE(big.has_value());
    CHECK(big->total() == 11);
}

TEST_CASE("classical Pieri") {
    // sl_4: varpi_1 (x) varpi_1
    auto p11 = classical_pieri(Weight::fundamental(4, 1), 1);
    REQUIRE(p11.size() == 2);
    CHECK(p11[0] == Weight(4, {1, 1, 0}));
    CHECK(p11[1] == Weight(4, {2, 0, 0}));

    auto triv = classical_pieri(Weight::zero(4), 2);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0] == Weight::fundamental(4, 2));

    auto goursat = classical_pieri(Weight(4, {5, 2, 2}), 1);
    REQUIRE(goursat.size() == 3);
    CHECK(goursat[0] == Weight(4, {4, 1, 1}));
    CHECK(goursat[1] == Weight(4, {5, 3, 2}));
    CHECK(goursat[2] == Weight(4, {6, 2, 2}));
}

TEST_CASE("pieri_combo recovers the subset and the variable count") {
    Weight lam(4, {5, 2, 2});
    for (const Weight& mu : classical_pieri(lam, 1)) {
        auto combo = pieri_combo(lam, 1, mu);
        REQUIRE(combo.has_value());
        auto rv = root_decompose({lam, Weight::fundamental(4, 1)}, mu);
        REQUIRE(rv.has_value());
        CHECK(Rational(combo->num_vars) == rv->total());
    }
    CHECK_FALSE(pieri_combo(lam, 1, Weight(4, {5, 2, 0})).has_value());
}

TEST_CASE("lr_tensor on small fundamentals") {
    auto prod = lr_tensor(Weight::fundamental(4, 2), Weight::fundamental(4, 2));
    REQUIRE(prod.size() == 3);
    CHECK(prod[Weight(4, {2, 2, 0})] == 1);
    CHECK(prod[Weight(4, {2, 1, 1})] == 1);
    CHECK(prod[Weight::zero(4)] == 1);

    auto unit = lr_tensor(Weight(4, {3, 2, 1}), Weight::zero(4));
    REQUIRE(unit.size() == 1);
    CHECK(unit[Weight(4, {3, 2, 1})] == 1);
}

TEST_CASE("lr_tensor matches brute-force sl_2 Clebsch-Gordan") {
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; q <= 8; ++q) {
            auto oracle = sl2_tensor_brute(p, q);
            auto got = lr_tensor(Weight(2, {p}), Weight(2, {q}));
            REQUIRE(got.size() == oracle.size());
            for (const auto& [h, m] : oracle) CHECK(got[Weight(2, {h})] == m);
        }
}

TEST_CASE("lr_tensor is commutative and respects Weyl dimensions") {
    std::mt19937_64 rng(5);
    auto pool = weights_up_to(4, 6);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 40; ++i) {
        Weight a = pool[pick(rng)], b = pool[pick(rng)];
        auto ab = lr_tensor(a, b);
        CHECK(ab == lr_tensor(b, a));
        Int total = 0;
        for (const auto& [w, m] : ab) total += Int(m) * weyl_dim(w);
        CHECK(total == weyl_dim(a) * weyl_dim(b));
    }
}

TEST_CASE("classical_pieri agrees with lr_tensor against fundamentals") {
    auto pool = weights_up_to(4, 5);
    for (const Weight& lam : pool)
        for (int k = 1; k <= 3; ++k) {
            auto pieri = classical_pieri(lam, k);
            auto lr = lr_tensor(lam, Weight::fundamental(4, k));
            REQUIRE(pieri.size() == lr.size());
            for (const Weight& mu : pieri) {
                REQUIRE(lr.count(mu) == 1);
                CHECK(lr[mu] == 1);
            }
        }
}

TEST_CASE("weyl dimension basics") {
    CHECK(weyl_dim(Weight::zero(4)) == 1);
    CHECK(weyl_dim(Weight::fundamental(4, 1)) == 4);
    CHECK(weyl_dim(Weight::fundamental(4, 2)) == 6);
    CHECK(weyl_dim(Weight::highest_root(3)) == 8);
    for (int p = 0; p <= 6; ++p) CHECK(weyl_dim(Weight(2, {p})) == p + 1);
}

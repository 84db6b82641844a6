#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "motive.hpp"
#include "poly.hpp"
#include "weight.hpp"

namespace kzr {

// Z[t]-linear combination of weight classes. Star products only ever hold
// polynomials with nonnegative coefficients; images under the map to the
// fusion ring may be signed.
struct Expansion {
    std::map<Weight, HodgePoly> terms;

    void add(const Weight& w, const HodgePoly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms.emplace(w, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    HodgePoly coeff(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? HodgePoly() : it->second;
    }
    bool operator==(const Expansion& o) const { return terms == o.terms; }
    bool is_zero() const { return terms.empty(); }
};

// Pieri products [lambda] * [varpi_k] in the enriched representation ring at
// a fixed kappa > 0, for every rank (the recursion drops rank). This is the
// kernel both ring modes are built on.
//
// The coefficient of a target mu is computed by the double induction on
// (number of boxes of lambda, number of variables M):
//   k = 1              directly from the rank-one factorization;
//   k = n-1            by duality from the varpi_1 case;
//   L_1 or L_n absent
//   from the root sum  by re-reading the same data for sl_{n-1};
//   otherwise          by solving ([l'] * [w_1]) * [w_k] = ([l'] * [w_k]) * [w_1]
//                      for the one unknown coefficient, with l' = lambda - L_1
//                      (leading part strict) or lambda - L_s (first s parts
//                      equal, s > 1); in the second case the unknown enters
//                      with a unit monomial and the division must be exact.
class PieriEngine {
public:
    explicit PieriEngine(const Rational& kappa);

    const Rational& kappa() const { return kappa_; }

    // full expansion of [lambda] * [varpi_k], keys are the classical Pieri targets
    const Expansion& expansion(const Weight& lambda, int k);

    // coefficient of [mu]; zero polynomial when mu is not a Pieri target
    HodgePoly coeff(const Weight& lambda, int k, const Weight& mu);

private:
    HodgePoly coeff_uncached(const Weight& lambda, int k, const Weight& mu, const PieriCombo& combo);

    Rational kappa_;
    std::map<std::tuple<Weight, int>, Expansion> expansions_;
    std::map<std::tuple<Weight, int, Weight>, HodgePoly> coeffs_;
};

// The result of rewriting [mu] as a polynomial in the fundamental classes:
// [mu] = [w_1]^{a_1} * ... * [w_{n-1}]^{a_{n-1}} - sum_i corrections[i].
struct FundamentalExpansion {
    std::vector<int> exponents;                            // a_i, i = 1..n-1
    std::vector<std::pair<Weight, HodgePoly>> corrections;  // strictly below mu, dominance-descending
};

// A product context: the enriched representation ring at kappa > 0, or the
// enriched fusion ring at level ell with Galois parameter b coprime to
// ell + n (effective kappa (ell+n)/b). All computations are deterministic
// and memoized; contexts are single-threaded.
class RingContext {
public:
    enum class Mode { Rep, Fusion };

    static RingContext rep(int n, const Rational& kappa);
    static RingContext fusion(int n, int ell, int galois);
    // representation ring reusing an existing Pieri kernel (same kappa)
    static RingContext rep_with_engine(int n, std::shared_ptr<PieriEngine> engine);

    int rank() const { return rank_; }
    Mode mode() const { return mode_; }
    const Rational& kappa_eff() const { return engine_->kappa(); }
    int fusion_level() const { return level_; }
    int galois() const { return galois_; }
    std::shared_ptr<PieriEngine> engine() const { return engine_; }

    Expansion star_pieri1(const Weight& lambda);
    Expansion star_pieri(const Weight& lambda, int k);

    FundamentalExpansion expand_in_fundamentals(const Weight& mu);

    const Expansion& star(const Weight& lambda, const Weight& mu);

    // coefficient of [nu] in [lambda_1] * ... * [lambda_m]
    HodgePoly npoint(const std::vector<Weight>& lambdas, const Weight& nu);
    Expansion npoint_full(const std::vector<Weight>& lambdas);

    // number of simple roots, with multiplicity, in lambda + mu - nu
    long pair_num_vars(const Weight& lambda, const Weight& mu, const Weight& nu) const;

    // fusion only: every coefficient of star homogenized to degree M(lambda,mu,nu)
    std::map<Weight, BigradedPoly> bigraded_star(const Weight& lambda, const Weight& mu);

    Expansion star_with_expansion(const Expansion& e, const Weight& mu);

private:
    RingContext(int n, Mode mode, std::shared_ptr<PieriEngine> engine, int ell, int galois);

    void require_level(const Weight& w) const;
    Expansion truncate(Expansion e) const;

    int rank_;
    Mode mode_;
    std::shared_ptr<PieriEngine> engine_;
    int level_;
    int galois_;
    std::map<std::pair<Weight, Weight>, Expansion> star_cache_;
};

// Image of [lambda] under the algebra map pi from the enriched representation
// ring at kappa = (ell+n)/b to the enriched fusion ring, defined by fixing
// every fundamental class. The image is reported raw, plus the single-term
// classification (sign, monomial, target) when it has the conjectured shape.
struct PiImage {
    Expansion image;
    bool single_term = false;  // zero image also counts as conforming
    int sign = 1;
    HodgePoly monomial;  // unit monomial when single_term and image nonzero
    std::optional<Weight> target;
};

class PiCalculator {
public:
    PiCalculator(int n, int ell, int galois);

    PiImage image(const Weight& lambda);
    RingContext& rep_context() { return rep_; }
    RingContext& fusion_context() { return fusion_; }

private:
    const Expansion& raw_image(const Weight& lambda);

    RingContext fusion_;
    RingContext rep_;
    std::map<Weight, Expansion> memo_;
};

enum class PiVariant { Standard, Conjugate };

// The conjectured value of pi([lambda]): zero on walls, otherwise
// epsilon(w) t^{s(lambda-mu)} [mu] (standard, b = 1) or
// epsilon(w) t^{l(w)} [mu] with l(w) minimal (conjugate, b = ell+n-1).
struct PiPrediction {
    bool zero = false;
    int sign = 1;
    HodgePoly monomial;
    std::optional<Weight> target;
};

PiPrediction pi_predict(int n, int ell, PiVariant variant, const Weight& lambda);

}  // namespace kzr

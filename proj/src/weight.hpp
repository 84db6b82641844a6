#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace kzr {

// A dominant integral weight of sl_n in partition normal form: n-1 weakly
// decreasing nonnegative parts with the implicit n-th coordinate 0. Writing
// the coordinate functions L_1,...,L_n (sum zero on the Cartan), the weight
// is parts[0] L_1 + ... + parts[n-2] L_{n-1}. Since only the class modulo
// (1,...,1) matters, every weight has a unique representative of this shape;
// from_lvec applies that normalization.
struct Weight {
    int rank = 2;            // n
    std::vector<int> parts;  // size n-1

    Weight() : parts{0} {}
    Weight(int n, std::vector<int> p);

    static Weight zero(int n);
    static Weight fundamental(int n, int k);  // varpi_k = L_1+...+L_k
    static Weight rho(int n);                 // (n-1, n-2, ..., 1)
    static Weight highest_root(int n);        // theta = L_1 - L_n
    // normalize an arbitrary integer L-coordinate vector (size n); requires
    // the result to be weakly decreasing
    static Weight from_lvec(int n, const std::vector<long long>& l);

    std::vector<long long> lvec() const;  // size n, last coordinate 0

    auto operator<=>(const Weight&) const = default;

    std::string to_string() const;  // e.g. "[7,5]"
};

inline int level(const Weight& w) { return w.parts.empty() ? 0 : w.parts.front(); }

inline long long boxes(const Weight& w) {
    long long s = 0;
    for (int p : w.parts) s += p;
    return s;
}

bool is_zero(const Weight& w);

// -w_0 lambda; parts (a_1 - a_n, a_1 - a_{n-1}, ..., a_1 - a_2)
Weight dual(const Weight& w);

// Killing form normalized by (theta,theta)=2; (L_i,L_j) = delta_ij - 1/n.
Rational pairing(int n, const std::vector<Rational>& x, const std::vector<Rational>& y);
Rational pairing(const Weight& x, const Weight& y);
// (lambda, alpha_i) for the i-th simple root, 1-based
Rational pairing_simple_root(const Weight& w, int i);

// c(lambda) = (lambda, lambda + 2 rho)
Rational casimir(const Weight& w);

// Element of the root lattice (or its rational span) in the basis of simple
// roots alpha_1..alpha_{n-1}.
struct RootVector {
    int rank = 2;
    std::vector<Rational> coeffs;  // size n-1

    Rational total() const {
        Rational s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }
    bool integral_nonneg() const;
};

// Expand sum(lambdas) - nu over the simple roots (rational coefficients;
// empty optional if the difference is not in the rational root span, i.e.
// the coordinate sum is not divisible as required).
RootVector root_span_decompose(int n, const std::vector<Rational>& lvec_diff);

// Integral decomposition: returns the coefficients n_i >= 0 with
// sum(lambdas) - nu = sum n_i alpha_i, or nullopt if any n_i is negative
// or non-integral. M = sum n_i.
std::optional<RootVector> root_decompose(const std::vector<Weight>& lambdas, const Weight& nu);

// s(w) = sum of the simple-root coefficients of w1 - w2 (Rational in general)
Rational s_value(const Weight& w1, const Weight& w2);

// All mu such that V_mu appears in V_lambda (x) V_varpi_k (each with
// multiplicity one), in increasing Weight order.
std::vector<Weight> classical_pieri(const Weight& lambda, int k);

// Number of positive roots, with multiplicity, in lambda + varpi_k - mu,
// together with the defining k-subset K of {1..n}; nullopt when mu is not
// a Pieri summand of lambda (x) varpi_k.
struct PieriCombo {
    std::vector<int> subset_mask;  // K as 0/1 over 1..n
    int num_vars = 0;              // M
    bool contains_first() const { return subset_mask[0] != 0; }
    bool contains_last() const { return subset_mask.back() != 0; }
};
std::optional<PieriCombo> pieri_combo(const Weight& lambda, int k, const Weight& mu);

// Deterministic linear extension of the dominance order: sort key
// (boxes, parts lexicographic); if mu < nu in dominance then key(mu) < key(nu).
std::pair<long long, std::vector<int>> dominance_key(const Weight& w);

// Weyl dimension of V_lambda
Int weyl_dim(const Weight& w);

// All dominant weights with boxes(w) <= max_boxes (and level <= max_level
// if max_level >= 0), in increasing Weight order.
std::vector<Weight> weights_up_to(int n, long long max_boxes, int max_level = -1);

}  // namespace kzr

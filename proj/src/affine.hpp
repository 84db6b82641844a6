#pragma once

#include <map>
#include <optional>

#include "weight.hpp"

namespace kzr {

// Result of folding lambda + rho into the fundamental alcove of the affine
// Weyl group W_ell (generated by W and translation by (ell + n) theta).
// result is empty when lambda + rho lands on an alcove wall; otherwise
// result = w(lambda + rho) - rho has level <= ell, sign = epsilon(w) and
// length = l(w) is minimal.
struct AlcoveFold {
    std::optional<Weight> result;
    int sign = 1;
    long length = 0;
};

AlcoveFold affine_fold(int n, int ell, const Weight& lambda);

// Minimal length of the folding element for dominant lambda:
// sum over positive roots of floor((lambda + rho, alpha) / (ell + n)).
long alcove_min_length(int n, int ell, const Weight& lambda);

// Level-ell fusion coefficients by the Kac-Walton rule: fold every classical
// Littlewood-Richardson summand with its sign. Inputs must have level <= ell.
std::map<Weight, long> fusion_tensor(int ell, const Weight& lambda, const Weight& mu);

// Coefficient of [nu] in the iterated classical fusion product of lambdas.
long fusion_npoint_rank(int ell, const std::vector<Weight>& lambdas, const Weight& nu);

}  // namespace kzr

#pragma once

#include <map>

#include "weight.hpp"

namespace kzr {

// Full decomposition of V_lambda (x) V_mu for sl_n by counting
// Littlewood-Richardson skew tableaux. Serves as the independent classical
// oracle for the t=1 specialization of the enriched products.
std::map<Weight, long> lr_tensor(const Weight& lambda, const Weight& mu);

}  // namespace kzr

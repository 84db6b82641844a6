#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"
#include "weight.hpp"

namespace kzr {

// Exact parameter kappa = r/s > 0 together with the cyclotomic modulus
// N = n |r| (for sl_n): N/kappa and N a/kappa are integers for integer a.
struct KappaParam {
    Rational kappa;
    Int N;

    static KappaParam make(int n, const Rational& kappa);
};

// Hodge polynomial of the rank-one motive [a; kappa] (a > 0, kappa > 0):
// always the monomial 1 or t. The three branches:
//   a/kappa integral        -> 1
//   (1+a)/kappa integral    -> t
//   otherwise S = <-1/k> + <-a/k> + <(1+a)/k> is 1 or 2; t iff S = 2.
HodgePoly delmos(const Rational& a, const Rational& kappa);

// Hodge polynomial of the Pieri summand mu = lambda + varpi_1 - (alpha_1 +
// ... + alpha_M) in [lambda] * [varpi_1]: the product of the M rank-one
// factors [ (j-1) + (lambda, alpha_{M-j+1} + ... + alpha_M) ; kappa ].
// Always a monomial t^e with 0 <= e <= M.
HodgePoly pieri1_poly(const Weight& lambda, int M, const Rational& kappa);

// Residue exponent of the local monodromy as the given marked points
// coalesce, one entry per summand mu of the classical tensor product:
// a = (1/2 kappa)(-c(mu) + sum c(lambda_i)). The monodromy eigenvalue is
// exp(2 pi i a), so only a mod 1 matters.
struct LocalExponent {
    Weight target;
    long multiplicity = 1;
    Rational exponent;
};
std::vector<LocalExponent> local_exponents(int n, const Rational& kappa, const std::vector<Weight>& coalescing);

// Weight window from a Hodge polynomial and the Hodge polynomial of the
// complex conjugate: (mindeg f + mindeg fbar, maxdeg f + maxdeg fbar). When
// both are monomials the window is a single point, the weight itself.
std::pair<long, long> weight_bounds(const HodgePoly& f, const HodgePoly& fbar);

}  // namespace kzr

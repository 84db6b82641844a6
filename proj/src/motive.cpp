#include "motive.hpp"

#include "errors.hpp"
#include "lr.hpp"

namespace kzr {

KappaParam KappaParam::make(int n, const Rational& kappa) {
    if (kappa <= 0) throw domain_error("kappa must be positive");
    return KappaParam{kappa, Int(n) * abs(numerator(kappa))};
}

HodgePoly delmos(const Rational& a, const Rational& kappa) {
    if (a <= 0) throw domain_error("delmos: weight argument must be positive, got " + rat_to_string(a));
    if (kappa <= 0) throw domain_error("delmos: kappa must be positive, got " + rat_to_string(kappa));
    if (is_integer(a / kappa)) return HodgePoly::one();
    if (is_integer((1 + a) / kappa)) return HodgePoly::monomial(1);
    Rational s = frac(-1 / kappa) + frac(-a / kappa) + frac((1 + a) / kappa);
    // the three arguments sum to 0, so with none of them integral the
    // fractional parts add to 1 or 2
    if (s == 2) return HodgePoly::monomial(1);
    if (s == 1) return HodgePoly::one();
    throw internal_error("delmos: fractional parts summed to " + rat_to_string(s));
}

HodgePoly pieri1_poly(const Weight& lambda, int M, const Rational& kappa) {
    if (M < 0 || M > lambda.rank - 1) throw domain_error("pieri1_poly: M out of range");
    if (M == 0) return HodgePoly::one();
    HodgePoly out = HodgePoly::one();
    Rational tail = 0;  // (lambda, alpha_{M-j+1} + ... + alpha_M)
    for (int j = 1; j <= M; ++j) {
        tail += pairing_simple_root(lambda, M - j + 1);
        out = out * delmos(Rational(j - 1) + tail, kappa);
    }
    if (out.degree() > M) throw internal_error("pieri1_poly: degree above the number of variables");
    return out;
}

std::vector<LocalExponent> local_exponents(int n, const Rational& kappa, const std::vector<Weight>& coalescing) {
    if (kappa == 0) throw domain_error("local_exponents: kappa must be nonzero");
    if (coalescing.empty()) throw bad_argument("local_exponents: no weights");
    Rational casimir_sum = 0;
    for (const auto& w : coalescing) {
        if (w.rank != n) throw bad_argument("local_exponents: rank mismatch");
        casimir_sum += casimir(w);
    }
    std::map<Weight, long> support{{coalescing[0], 1}};
    for (std::size_t i = 1; i < coalescing.size(); ++i) {
        std::map<Weight, long> next;
        for (const auto& [w, c] : support)
            for (const auto& [v, d] : lr_tensor(w, coalescing[i])) next[v] += c * d;
        support = std::move(next);
    }
    std::vector<LocalExponent> out;
    for (const auto& [mu, mult] : support)
        out.push_back({mu, mult, (casimir_sum - casimir(mu)) / (2 * kappa)});
    return out;
}

std::pair<long, long> weight_bounds(const HodgePoly& f, const HodgePoly& fbar) {
    if (f.is_zero() || fbar.is_zero()) throw domain_error("weight_bounds: zero polynomial");
    return {static_cast<long>(f.min_degree()) + fbar.min_degree(),
            static_cast<long>(f.degree()) + fbar.degree()};
}

}  // namespace kzr

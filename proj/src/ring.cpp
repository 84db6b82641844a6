#include "ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "affine.hpp"
#include "errors.hpp"

namespace kzr {

namespace {

// lambda with the L_1 coordinate deleted, as an sl_{n-1} partition
Weight drop_first(const Weight& w) {
    std::vector<int> p(w.parts.begin() + 1, w.parts.end());
    return Weight(w.rank - 1, std::move(p));
}

// lambda with the L_n coordinate deleted (renormalized by the new last part)
Weight drop_last(const Weight& w) {
    std::vector<int> p(w.rank - 2);
    int last = w.parts.back();
    for (int i = 0; i < w.rank - 2; ++i) p[i] = w.parts[i] - last;
    return Weight(w.rank - 1, std::move(p));
}

int leading_run(const Weight& w) {
    int s = 1;
    while (s < w.rank - 1 && w.parts[s] == w.parts[0]) ++s;
    // the implicit part a_n = 0 never extends the run because a_1 > 0 here
    return s;
}

}  // namespace

PieriEngine::PieriEngine(const Rational& kappa) : kappa_(kappa) {
    if (kappa <= 0) throw domain_error("PieriEngine: kappa must be positive");
}

const Expansion& PieriEngine::expansion(const Weight& lambda, int k) {
    auto key = std::make_tuple(lambda, k);
    auto it = expansions_.find(key);
    if (it != expansions_.end()) return it->second;
    Expansion e;
    for (const Weight& mu : classical_pieri(lambda, k)) e.add(mu, coeff(lambda, k, mu));
    return expansions_.emplace(std::move(key), std::move(e)).first->second;
}

HodgePoly PieriEngine::coeff(const Weight& lambda, int k, const Weight& mu) {
    auto combo = pieri_combo(lambda, k, mu);
    if (!combo) return HodgePoly();
    auto key = std::make_tuple(lambda, k, mu);
    auto it = coeffs_.find(key);
    if (it != coeffs_.end()) return it->second;
    HodgePoly p = coeff_uncached(lambda, k, mu, *combo);
    if (!p.nonneg_coeffs() || (!p.is_zero() && p.degree() > combo->num_vars))
        throw internal_error("Pieri coefficient out of bounds for " + lambda.to_string() + " * w_" +
                             std::to_string(k) + " -> " + mu.to_string() + ": " + p.to_string());
    coeffs_.emplace(std::move(key), p);
    return p;
}

HodgePoly PieriEngine::coeff_uncached(const Weight& lambda, int k, const Weight& mu, const PieriCombo& combo) {
    int n = lambda.rank;
    int M = combo.num_vars;
    if (M == 0) return HodgePoly::one();
    if (k == 1) return pieri1_poly(lambda, M, kappa_);
    if (k == n - 1) return coeff(dual(lambda), 1, dual(mu));
    if (!combo.contains_last()) return coeff(drop_last(lambda), k, drop_last(mu));
    if (combo.contains_first()) return coeff(drop_first(lambda), k - 1, drop_first(mu));

    // K avoids 1 and contains n: solve ([l'] * [w_1]) * [w_k] = ([l'] * [w_k]) * [w_1]
    // for the coefficient of [mu], where [lambda] appears in [l'] * [w_1].
    int s = leading_run(lambda);
    Weight lp = lambda;
    lp.parts[s - 1] -= 1;  // s == 1: lambda - varpi_1; s > 1: lambda - L_s
    Weight lpw(lambda.rank, lp.parts);  // validates dominance

    HodgePoly rhs;
    for (const auto& [gamma, c] : expansion(lpw, k)) rhs += c * coeff(gamma, 1, mu);
    HodgePoly unknown_unit;
    for (const auto& [nu, c] : expansion(lpw, 1)) {
        if (nu == lambda) {
            unknown_unit = c;
            continue;
        }
        rhs -= c * coeff(nu, k, mu);
    }
    if (unknown_unit.is_zero() || !unknown_unit.is_monomial() ||
        unknown_unit.coeff(unknown_unit.degree()) != 1)
        throw internal_error("Pieri recursion: unknown does not enter with a unit monomial");
    int e = unknown_unit.degree();
    if (!rhs.is_zero() && rhs.min_degree() < e) {
        std::ostringstream os;
        os << "Pieri recursion: inexact division solving ([" << lpw.to_string() << "]*[w_1])*[w_" << k
           << "] = ([" << lpw.to_string() << "]*[w_" << k << "])*[w_1] at [" << mu.to_string()
           << "], kappa=" << rat_to_string(kappa_) << ": (" << rhs.to_string() << ") / ("
           << unknown_unit.to_string() << ")";
        throw internal_error(os.str());
    }
    return rhs.divide_by_monomial(e);
}

RingContext::RingContext(int n, Mode mode, std::shared_ptr<PieriEngine> engine, int ell, int galois)
    : rank_(n), mode_(mode), engine_(std::move(engine)), level_(ell), galois_(galois) {}

RingContext RingContext::rep(int n, const Rational& kappa) {
    if (n < 2) throw bad_argument("rank must be at least 2");
    if (kappa <= 0) throw domain_error("representation ring requires kappa > 0");
    return RingContext(n, Mode::Rep, std::make_shared<PieriEngine>(kappa), -1, 0);
}

RingContext RingContext::fusion(int n, int ell, int galois) {
    if (n < 2) throw bad_argument("rank must be at least 2");
    if (ell < 1) throw domain_error("fusion ring requires level >= 1");
    int modulus = ell + n;
    int b = galois % modulus;
    if (b < 0) b += modulus;
    if (std::gcd(b, modulus) != 1)
        throw domain_error("galois parameter " + std::to_string(galois) + " not coprime to " +
                           std::to_string(modulus));
    Rational kappa_eff(Int(modulus), Int(b));
    return RingContext(n, Mode::Fusion, std::make_shared<PieriEngine>(kappa_eff), ell, b);
}

RingContext RingContext::rep_with_engine(int n, std::shared_ptr<PieriEngine> engine) {
    return RingContext(n, Mode::Rep, std::move(engine), -1, 0);
}

void RingContext::require_level(const Weight& w) const {
    if (mode_ == Mode::Fusion && level(w) > level_)
        throw level_error("weight " + w.to_string() + " above level " + std::to_string(level_));
}

Expansion RingContext::truncate(Expansion e) const {
    if (mode_ == Mode::Rep) return e;
    for (auto it = e.terms.begin(); it != e.terms.end();)
        it = (level(it->first) > level_) ? e.terms.erase(it) : std::next(it);
    return e;
}

Expansion RingContext::star_pieri1(const Weight& lambda) { return star_pieri(lambda, 1); }

Expansion RingContext::star_pieri(const Weight& lambda, int k) {
    if (lambda.rank != rank_) throw bad_argument("star_pieri: rank mismatch");
    require_level(lambda);
    // For a Pieri pair the conformal-block motive coincides with the full
    // rank-one motive, so the fusion coefficients are the representation-ring
    // coefficients at the effective kappa, truncated to the level bound.
    return truncate(engine_->expansion(lambda, k));
}

Expansion RingContext::star_with_expansion(const Expansion& e, const Weight& mu) {
    Expansion out;
    for (const auto& [w, c] : e.terms) {
        const Expansion& prod = star(w, mu);
        for (const auto& [v, d] : prod.terms) out.add(v, c * d);
    }
    return out;
}

FundamentalExpansion RingContext::expand_in_fundamentals(const Weight& mu) {
    if (mu.rank != rank_) throw bad_argument("expand_in_fundamentals: rank mismatch");
    require_level(mu);
    FundamentalExpansion out;
    out.exponents.resize(rank_ - 1);
    for (int i = 0; i < rank_ - 1; ++i) {
        int next = (i + 1 < rank_ - 1) ? mu.parts[i + 1] : 0;
        out.exponents[i] = mu.parts[i] - next;
    }
    Expansion acc;
    acc.add(Weight::zero(rank_), HodgePoly::one());
    for (int i = 0; i < rank_ - 1; ++i)
        for (int rep = 0; rep < out.exponents[i]; ++rep) {
            Expansion next;
            for (const auto& [w, c] : acc.terms) {
                Expansion p = star_pieri(w, i + 1);
                for (const auto& [v, d] : p.terms) next.add(v, c * d);
            }
            acc = std::move(next);
        }
    if (!(acc.coeff(mu) == HodgePoly::one()))
        throw internal_error("leading coefficient of the fundamental monomial at " + mu.to_string() +
                             " is not 1");
    acc.terms.erase(mu);
    out.corrections.assign(acc.terms.begin(), acc.terms.end());
    std::sort(out.corrections.begin(), out.corrections.end(), [](const auto& a, const auto& b) {
        return dominance_key(a.first) > dominance_key(b.first);
    });
    return out;
}

const Expansion& RingContext::star(const Weight& lambda, const Weight& mu) {
    if (lambda.rank != rank_ || mu.rank != rank_) throw bad_argument("star: rank mismatch");
    require_level(lambda);
    require_level(mu);
    // the product is commutative; normalize the key and recurse on the
    // operand with fewer boxes
    const bool swap = dominance_key(mu) > dominance_key(lambda);
    const Weight& a = swap ? mu : lambda;
    const Weight& b = swap ? lambda : mu;
    auto key = std::make_pair(a, b);
    auto it = star_cache_.find(key);
    if (it != star_cache_.end()) return it->second;

    Expansion result;
    if (is_zero(b)) {
        result.add(a, HodgePoly::one());
    } else {
        // b = b' + varpi_j: [a]*[b] = ([a]*[b'])*[w_j] - corrections
        int j = 1;
        while (j < rank_ - 1 && b.parts[j - 1] == b.parts[j]) ++j;
        std::vector<int> bp_parts = b.parts;
        for (int i = 0; i < j; ++i) bp_parts[i] -= 1;
        Weight bprime(rank_, std::move(bp_parts));

        // map references stay valid while the cache grows
        const Expansion& ab = star(a, bprime);
        Expansion lhs;
        for (const auto& [w, c] : ab.terms) {
            Expansion p = star_pieri(w, j);
            for (const auto& [v, d] : p.terms) lhs.add(v, c * d);
        }
        Expansion bstep = star_pieri(bprime, j);
        for (const auto& [gamma, c] : bstep.terms) {
            if (gamma == b) {
                if (!c.is_one())
                    throw internal_error("leading Pieri coefficient of " + b.to_string() + " is not 1");
                continue;
            }
            const Expansion& sub = star(a, gamma);
            for (const auto& [v, d] : sub.terms) lhs.add(v, c * d * Int(-1));
        }
        result = std::move(lhs);
    }
    for (const auto& [v, c] : result.terms)
        if (!c.nonneg_coeffs())
            throw internal_error("negative structure constant at " + v.to_string() + " in " +
                                 lambda.to_string() + " * " + mu.to_string());
    return star_cache_.emplace(std::move(key), std::move(result)).first->second;
}

HodgePoly RingContext::npoint(const std::vector<Weight>& lambdas, const Weight& nu) {
    Expansion acc = npoint_full(lambdas);
    if (mode_ == Mode::Fusion) require_level(nu);
    return acc.coeff(nu);
}

Expansion RingContext::npoint_full(const std::vector<Weight>& lambdas) {
    if (lambdas.empty()) throw bad_argument("npoint: no weights");
    require_level(lambdas[0]);
    Expansion acc;
    acc.add(lambdas[0], HodgePoly::one());
    for (std::size_t i = 1; i < lambdas.size(); ++i) acc = star_with_expansion(acc, lambdas[i]);
    return acc;
}

long RingContext::pair_num_vars(const Weight& lambda, const Weight& mu, const Weight& nu) const {
    auto rv = root_decompose({lambda, mu}, nu);
    if (!rv) throw domain_error("lambda + mu - nu is not a nonnegative root sum");
    Rational t = rv->total();
    return static_cast<long>(numerator(t));
}

std::map<Weight, BigradedPoly> RingContext::bigraded_star(const Weight& lambda, const Weight& mu) {
    if (mode_ != Mode::Fusion) throw domain_error("bigraded products live in the fusion ring");
    std::map<Weight, BigradedPoly> out;
    for (const auto& [nu, p] : star(lambda, mu).terms) {
        long M = pair_num_vars(lambda, mu, nu);
        try {
            out.emplace(nu, homogenize(p, static_cast<int>(M)));
        } catch (const domain_error& e) {
            throw internal_error(std::string("purity violation in bigraded product: ") + e.what());
        }
    }
    return out;
}

PiCalculator::PiCalculator(int n, int ell, int galois)
    : fusion_(RingContext::fusion(n, ell, galois)),
      rep_(RingContext::rep_with_engine(n, fusion_.engine())) {}

const Expansion& PiCalculator::raw_image(const Weight& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    Expansion img;
    if (is_zero(lambda)) {
        img.add(lambda, HodgePoly::one());
    } else if (boxes(lambda) == static_cast<long long>(std::count(lambda.parts.begin(), lambda.parts.end(), 1))) {
        // fundamental classes map to themselves (level 1 <= ell)
        img.add(lambda, HodgePoly::one());
    } else {
        int n = lambda.rank;
        int j = 1;
        while (j < n - 1 && lambda.parts[j - 1] == lambda.parts[j]) ++j;
        std::vector<int> lp = lambda.parts;
        for (int i = 0; i < j; ++i) lp[i] -= 1;
        Weight lprime(n, std::move(lp));
        // [lambda] = [lambda'] * [w_j] - corrections, computed upstairs
        Expansion step = rep_.star_pieri(lprime, j);
        const Expansion base = raw_image(lprime);
        for (const auto& [w, c] : base.terms) {
            Expansion p = fusion_.star_pieri(w, j);
            for (const auto& [v, d] : p.terms) img.add(v, c * d);
        }
        for (const auto& [gamma, c] : step.terms) {
            if (gamma == lambda) continue;
            const Expansion sub = raw_image(gamma);
            for (const auto& [v, d] : sub.terms) img.add(v, c * d * Int(-1));
        }
    }
    return memo_.emplace(lambda, std::move(img)).first->second;
}

PiImage PiCalculator::image(const Weight& lambda) {
    PiImage out;
    out.image = raw_image(lambda);
    if (out.image.is_zero()) {
        out.single_term = true;
        return out;
    }
    if (out.image.terms.size() == 1) {
        const auto& [w, p] = *out.image.terms.begin();
        if (p.is_monomial()) {
            Int c = p.coeff(p.degree());
            if (c == 1 || c == -1) {
                out.single_term = true;
                out.sign = (c == 1) ? 1 : -1;
                out.monomial = HodgePoly::monomial(p.degree());
                out.target = w;
            }
        }
    }
    return out;
}

PiPrediction pi_predict(int n, int ell, PiVariant variant, const Weight& lambda) {
    if (ell < 1) throw domain_error("pi_predict requires level >= 1");
    AlcoveFold fold = affine_fold(n, ell, lambda);
    PiPrediction out;
    if (!fold.result) {
        out.zero = true;
        return out;
    }
    out.sign = fold.sign;
    out.target = *fold.result;
    if (variant == PiVariant::Standard) {
        Rational s = s_value(lambda, *fold.result);
        if (!is_integer(s) || s < 0)
            throw internal_error("s(lambda - mu) is not a nonnegative integer for " + lambda.to_string());
        out.monomial = HodgePoly::monomial(static_cast<int>(numerator(s)));
    } else {
        out.monomial = HodgePoly::monomial(static_cast<int>(fold.length));
    }
    return out;
}

}  // namespace kzr

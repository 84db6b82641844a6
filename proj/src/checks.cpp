#include "checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "affine.hpp"
#include "errors.hpp"
#include "jsonio.hpp"
#include "lr.hpp"

namespace kzr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_fragment(const std::string& canonical) { return ordered_json::parse(canonical); }

std::string weights_to_string(const std::vector<Weight>& ws) {
    std::string s = "(";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) s += ",";
        s += ws[i].to_string();
    }
    s += ")";
    return s;
}

// deterministic sampler over dominant weights with bounded box count
// (and bounded level in fusion mode)
class WeightSampler {
public:
    WeightSampler(int n, int max_boxes, int max_level, std::uint64_t seed)
        : pool_(weights_up_to(n, max_boxes, max_level)), rng_(seed) {}

    Weight next() {
        std::uniform_int_distribution<std::size_t> d(0, pool_.size() - 1);
        return pool_[d(rng_)];
    }

private:
    std::vector<Weight> pool_;
    std::mt19937_64 rng_;
};

void finalize(CheckReport& r, bool report_only) {
    if (report_only)
        r.status = CheckReport::Status::ReportOnly;
    else
        r.status = r.failures.empty() ? CheckReport::Status::Pass : CheckReport::Status::Fail;
}

}  // namespace

RingContext ModeSpec::make() const {
    return mode == RingContext::Mode::Rep ? RingContext::rep(rank, kappa)
                                          : RingContext::fusion(rank, level, galois);
}

ordered_json ModeSpec::describe() const {
    ordered_json j;
    j["n"] = rank;
    if (mode == RingContext::Mode::Rep) {
        j["mode"] = "rep";
        j["kappa"] = rat_to_string(kappa);
    } else {
        j["mode"] = "fusion";
        j["level"] = level;
        j["galois"] = galois;
    }
    return j;
}

std::string CheckReport::to_json() const {
    ordered_json j;
    j["name"] = name;
    switch (status) {
        case Status::Pass: j["status"] = "pass"; break;
        case Status::Fail: j["status"] = "fail"; break;
        case Status::ReportOnly: j["status"] = "report-only"; break;
    }
    j["cases_run"] = cases_run;
    j["seed"] = seed;
    j["params"] = params;
    ordered_json fails = ordered_json::array();
    for (const auto& f : failures) {
        ordered_json jf;
        jf["inputs"] = f.inputs;
        jf["expected"] = f.expected;
        jf["actual"] = f.actual;
        fails.push_back(jf);
    }
    j["failures"] = fails;
    if (!data.empty()) j["data"] = data;
    return j.dump();
}

CheckReport check_associativity(const ModeSpec& mode, const SampleSpec& sample) {
    CheckReport r;
    r.name = "assoc";
    r.seed = sample.seed;
    r.params = mode.describe();
    r.params["max_boxes"] = sample.max_boxes;
    r.params["samples"] = sample.samples;

    RingContext ctx = mode.make();
    int max_level = mode.mode == RingContext::Mode::Fusion ? mode.level : -1;
    WeightSampler gen(mode.rank, sample.max_boxes, max_level, sample.seed);
    for (int i = 0; i < sample.samples; ++i) {
        Weight a = gen.next(), b = gen.next(), c = gen.next();
        ++r.cases_run;

        const Expansion& ab = ctx.star(a, b);
        const Expansion& ba = ctx.star(b, a);
        if (!(ab == ba))
            r.failures.push_back({a.to_string() + "*" + b.to_string(), "commutative", "products differ"});

        Expansion left = ctx.star_with_expansion(ab, c);
        Expansion right = ctx.star_with_expansion(ctx.star(b, c), a);
        if (!(left == right))
            r.failures.push_back({weights_to_string({a, b, c}), "associative", "bracketings differ"});

        if (mode.mode == RingContext::Mode::Fusion) {
            // bigraded version: homogenize every three-point coefficient to
            // its weight and compare the two bracketings
            auto hom_fold = [&](const Weight& x, const Weight& y, const Weight& z) {
                std::map<Weight, BigradedPoly> acc;
                for (const auto& [g, bp] : ctx.bigraded_star(x, y)) {
                    for (const auto& [v, bq] : ctx.bigraded_star(g, z)) {
                        auto prod = bp * bq;
                        auto [it, inserted] = acc.emplace(v, prod);
                        if (!inserted) it->second += prod;
                    }
                }
                for (auto it = acc.begin(); it != acc.end();)
                    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
                return acc;
            };
            auto bl = hom_fold(a, b, c);
            auto br = hom_fold(b, c, a);
            if (bl != br)
                r.failures.push_back({weights_to_string({a, b, c}), "bigraded associative", "bracketings differ"});
        }
    }
    finalize(r, false);
    return r;
}

CheckReport check_classical_limit(const ModeSpec& mode, const SampleSpec& sample) {
    CheckReport r;
    r.name = "classical";
    r.seed = sample.seed;
    r.params = mode.describe();
    r.params["max_boxes"] = sample.max_boxes;
    r.params["samples"] = sample.samples;

    RingContext ctx = mode.make();
    int max_level = mode.mode == RingContext::Mode::Fusion ? mode.level : -1;
    WeightSampler gen(mode.rank, sample.max_boxes, max_level, sample.seed);
    for (int i = 0; i < sample.samples; ++i) {
        Weight a = gen.next(), b = gen.next();
        ++r.cases_run;
        std::map<Weight, long> oracle = mode.mode == RingContext::Mode::Rep
                                            ? lr_tensor(a, b)
                                            : fusion_tensor(mode.level, a, b);
        const Expansion& prod = ctx.star(a, b);
        bool ok = prod.terms.size() == oracle.size();
        if (ok)
            for (const auto& [w, c] : prod.terms) {
                auto it = oracle.find(w);
                if (it == oracle.end() || Int(it->second) != c.eval_at_one()) {
                    ok = false;
                    break;
                }
            }
        if (!ok) {
            std::ostringstream expected;
            for (const auto& [w, c] : oracle) expected << w.to_string() << ":" << c << " ";
            std::ostringstream actual;
            for (const auto& [w, c] : prod.terms) actual << w.to_string() << ":" << c.eval_at_one() << " ";
            r.failures.push_back({a.to_string() + "*" + b.to_string(), expected.str(), actual.str()});
        }
    }
    finalize(r, false);
    return r;
}

CheckReport check_purity_integer_inverse(int n, int m, const SampleSpec& sample) {
    if (m < 1) throw bad_argument("integer-inverse check needs m >= 1");
    CheckReport r;
    r.name = "purity";
    r.seed = sample.seed;
    r.params["n"] = n;
    r.params["m"] = m;
    r.params["max_boxes"] = sample.max_boxes;
    r.params["samples"] = sample.samples;

    RingContext ctx = RingContext::rep(n, Rational(1, m));
    WeightSampler gen(n, sample.max_boxes, -1, sample.seed);
    for (int i = 0; i < sample.samples; ++i) {
        Weight a = gen.next(), b = gen.next();
        ++r.cases_run;
        auto oracle = lr_tensor(a, b);
        for (const auto& [w, c] : ctx.star(a, b).terms) {
            if (c.is_zero()) continue;
            bool constant = c.degree() == 0;
            if (!constant || c.coeff(0) != Int(oracle[w]))
                r.failures.push_back({a.to_string() + "*" + b.to_string() + " at " + w.to_string(),
                                      "constant " + std::to_string(oracle[w]), c.to_string()});
        }
    }
    finalize(r, false);
    return r;
}

CheckReport check_kappa_shift(int n, const Rational& kappa, const SampleSpec& sample) {
    if (kappa <= 0) throw domain_error("kappa-shift check requires kappa > 0");
    CheckReport r;
    r.name = "kappa-shift";
    r.seed = sample.seed;
    r.params["n"] = n;
    r.params["kappa"] = rat_to_string(kappa);
    r.params["max_boxes"] = sample.max_boxes;
    r.params["samples"] = sample.samples;

    RingContext lhs = RingContext::rep(n, kappa);
    RingContext rhs = RingContext::rep(n, kappa / (1 + kappa));
    WeightSampler gen(n, sample.max_boxes, -1, sample.seed);
    for (int i = 0; i < sample.samples; ++i) {
        Weight a = gen.next(), b = gen.next();
        ++r.cases_run;
        if (!(lhs.star(a, b) == rhs.star(a, b)))
            r.failures.push_back({a.to_string() + "*" + b.to_string(), "equal at kappa and kappa/(1+kappa)",
                                  "products differ"});
    }
    finalize(r, false);
    return r;
}

CheckReport check_pi(int n, int ell, PiVariant variant, int max_boxes) {
    CheckReport r;
    r.name = "pi";
    r.params["n"] = n;
    r.params["level"] = ell;
    r.params["variant"] = variant == PiVariant::Standard ? "standard" : "conjugate";
    r.params["max_boxes"] = max_boxes;

    int b = variant == PiVariant::Standard ? 1 : ell + n - 1;
    PiCalculator pi(n, ell, b);
    for (const Weight& lam : weights_up_to(n, max_boxes)) {
        ++r.cases_run;
        PiImage img = pi.image(lam);
        PiPrediction pred = pi_predict(n, ell, variant, lam);
        std::string predicted = pred.zero
                                    ? "0"
                                    : (pred.sign < 0 ? "-" : "+") + pred.monomial.to_string() + "*" +
                                          pred.target->to_string();
        if (!img.single_term) {
            r.failures.push_back({lam.to_string(), predicted, expansion_to_json(img.image)});
            continue;
        }
        bool zero = img.image.is_zero();
        bool match = pred.zero == zero &&
                     (zero || (pred.sign == img.sign && pred.monomial == img.monomial &&
                               pred.target == img.target));
        if (!match) {
            std::string actual = zero ? "0"
                                      : (img.sign < 0 ? "-" : "+") + img.monomial.to_string() + "*" +
                                            img.target->to_string();
            r.failures.push_back({lam.to_string(), predicted, actual});
        }
    }

    if (n == 2) {
        // cross-check c(p) against the product of the rank-one polynomials
        // d(p') over the reflected part of the orbit below p
        const Rational kappa_eff = Rational(Int(ell + 2), Int(b));
        std::vector<HodgePoly> d(max_boxes + 1, HodgePoly::one());
        for (int p = 1; p <= max_boxes; ++p) d[p] = delmos(Rational(p), kappa_eff);
        PiCalculator pi2(n, ell, b);
        for (int p = 1; p <= max_boxes; ++p) {
            if ((p + 1) % (ell + 2) == 0) continue;
            HodgePoly c = HodgePoly::one();
            for (int q = 1; q <= p; ++q) {
                int rem = q % (ell + 2);
                bool reflected_block = (q / (ell + 2)) % 2 == 1 && rem <= ell;
                bool last_in_alcove = (q + 1) % (ell + 2) == ell + 1;
                if (reflected_block || last_in_alcove) c = c * d[q];
            }
            ++r.cases_run;
            PiImage img = pi2.image(Weight(2, {p}));
            HodgePoly actual_mono;
            if (img.single_term && !img.image.is_zero()) actual_mono = img.monomial;
            if (!(actual_mono == c))
                r.failures.push_back({"c(" + std::to_string(p) + ")", c.to_string(), actual_mono.to_string()});
        }
    }

    finalize(r, n >= 3);
    return r;
}

CheckReport check_hodge_filtration(int n, int ell, const std::vector<Weight>& lambdas, const Weight& nu,
                                   int kmax) {
    CheckReport r;
    r.name = "hodge";
    r.params["n"] = n;
    r.params["level"] = ell;
    ordered_json jw = ordered_json::array();
    for (const auto& w : lambdas) jw.push_back(json_fragment(weight_to_json(w)));
    r.params["weights"] = jw;
    r.params["nu"] = json_fragment(weight_to_json(nu));

    for (const auto& w : lambdas)
        if (level(w) > ell) throw level_error("weight above level in hodge check");
    if (level(nu) > ell) throw level_error("nu above level in hodge check");

    RingContext rep = RingContext::rep(n, Rational(ell + n));
    HodgePoly kz = rep.npoint(lambdas, nu);
    auto rv = root_decompose(lambdas, nu);
    if (!rv) throw domain_error("sum of weights minus nu is not a nonnegative root sum");
    long M = static_cast<long>(numerator(rv->total()));

    r.data["kz_poly"] = json_fragment(poly_to_json(kz));
    r.data["num_vars"] = M;
    ordered_json rows = ordered_json::array();
    for (int k = 0; k <= kmax; ++k) {
        Int partial = kz.coeff_sum_from(static_cast<int>(M) - k);
        long rank = fusion_npoint_rank(ell + k + 1, lambdas, nu);
        ordered_json row;
        row["k"] = k;
        row["coeff_sum_from"] = static_cast<long>(M) - k;
        row["partial_sum"] = partial.str();
        row["cb_rank_level"] = ell + k + 1;
        row["cb_rank"] = rank;
        row["consistent"] = (partial == Int(rank));
        rows.push_back(row);
        ++r.cases_run;
    }
    r.data["filtration"] = rows;
    finalize(r, true);
    return r;
}

CheckReport check_weight_bounds_galois(int n, int ell, const std::vector<Weight>& lambdas, const Weight& nu) {
    CheckReport r;
    r.name = "weights-galois";
    r.params["n"] = n;
    r.params["level"] = ell;
    ordered_json jw = ordered_json::array();
    for (const auto& w : lambdas) jw.push_back(json_fragment(weight_to_json(w)));
    r.params["weights"] = jw;
    r.params["nu"] = json_fragment(weight_to_json(nu));

    int modulus = ell + n;
    ordered_json fusion_entries = ordered_json::array();
    bool all_monomial = true;
    ordered_json windows = ordered_json::array();
    for (int b = 1; b < modulus; ++b) {
        if (std::gcd(b, modulus) != 1) continue;
        RingContext fus = RingContext::fusion(n, ell, b);
        HodgePoly cb = fus.npoint(lambdas, nu);
        ordered_json e;
        e["galois"] = b;
        e["cb_poly"] = json_fragment(poly_to_json(cb));
        fusion_entries.push_back(e);
        if (!cb.is_zero() && !cb.is_monomial()) all_monomial = false;
        ++r.cases_run;

        int bbar = modulus - b;
        if (b <= bbar) {
            RingContext rep_b = RingContext::rep(n, Rational(Int(modulus), Int(b)));
            RingContext rep_bbar = RingContext::rep(n, Rational(Int(modulus), Int(bbar)));
            HodgePoly f = rep_b.npoint(lambdas, nu);
            HodgePoly fbar = rep_bbar.npoint(lambdas, nu);
            ordered_json wrow;
            wrow["galois_pair"] = ordered_json::array({b, bbar});
            wrow["kz_poly"] = json_fragment(poly_to_json(f));
            wrow["kz_poly_conjugate"] = json_fragment(poly_to_json(fbar));
            if (!f.is_zero() && !fbar.is_zero()) {
                auto [lo, hi] = weight_bounds(f, fbar);
                wrow["weight_window"] = ordered_json::array({lo, hi});
            }
            windows.push_back(wrow);
        }
    }
    r.data["fusion_galois_orbit"] = fusion_entries;
    r.data["all_monomial"] = all_monomial;
    if (all_monomial) r.data["monodromy"] = "finite/scalar-compatible";
    r.data["weight_windows"] = windows;
    finalize(r, true);
    return r;
}

CheckReport bgg_euler_report(int n, int ell, const std::vector<Weight>& gammas, const Weight& nu,
                             int max_boxes) {
    CheckReport r;
    r.name = "bgg";
    r.params["n"] = n;
    r.params["level"] = ell;
    ordered_json jw = ordered_json::array();
    for (const auto& w : gammas) jw.push_back(json_fragment(weight_to_json(w)));
    r.params["gammas"] = jw;
    r.params["nu"] = json_fragment(weight_to_json(nu));
    r.params["max_boxes"] = max_boxes;

    Weight nustar = dual(nu);
    RingContext rep = RingContext::rep(n, Rational(ell + n));

    HodgePoly euler;
    ordered_json orbit = ordered_json::array();
    for (const Weight& lam : weights_up_to(n, max_boxes)) {
        AlcoveFold fold = affine_fold(n, ell, lam);
        if (!fold.result || !(*fold.result == nustar)) continue;
        Rational s = s_value(lam, nustar);
        if (!is_integer(s) || s < 0) throw internal_error("non-integral twist exponent in the orbit");
        HodgePoly term = rep.npoint(gammas, lam) * HodgePoly::monomial(static_cast<int>(numerator(s)));
        if (fold.sign < 0) term = term * Int(-1);
        euler += term;
        ordered_json row;
        row["lambda"] = json_fragment(weight_to_json(lam));
        row["length"] = fold.length;
        row["sign"] = fold.sign;
        row["twist_exponent"] = static_cast<long>(numerator(s));
        orbit.push_back(row);
        ++r.cases_run;
    }
    r.data["orbit"] = orbit;
    r.data["euler_sum"] = json_fragment(poly_to_json(euler));

    // conformal-block side of the comparison: fold every gamma and, when no
    // wall appears, the fusion polynomial of the folded data
    bool wall = false;
    int sign = 1;
    std::vector<Weight> folded;
    for (const auto& g : gammas) {
        AlcoveFold f = affine_fold(n, ell, g);
        if (!f.result) {
            wall = true;
            break;
        }
        folded.push_back(*f.result);
        sign *= f.sign;
    }
    if (wall || level(nu) > ell) {
        r.data["cb_poly"] = nullptr;
    } else {
        RingContext fus = RingContext::fusion(n, ell, 1);
        r.data["cb_poly"] = json_fragment(poly_to_json(fus.npoint(folded, nu)));
        r.data["cb_fold_sign"] = sign;
    }
    finalize(r, true);
    return r;
}

}  // namespace kzr

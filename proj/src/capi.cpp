#include "../include/kzring.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "jsonio.hpp"
#include "motive.hpp"
#include "ring.hpp"

using namespace kzr;
using ordered_json = nlohmann::ordered_json;

struct kzr_ring {
    RingContext ctx;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kzr_status status_of(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const bad_argument*>(&e)) return KZR_ERR_BAD_ARGUMENT;
    if (dynamic_cast<const level_error*>(&e)) return KZR_ERR_LEVEL;
    if (dynamic_cast<const domain_error*>(&e)) return KZR_ERR_DOMAIN;
    return KZR_ERR_INTERNAL;
}

template <typename Fn>
kzr_status guarded(Fn&& fn) {
    try {
        fn();
        return KZR_OK;
    } catch (const std::exception& e) {
        return status_of(e);
    } catch (...) {
        g_last_error = "unknown error";
        return KZR_ERR_INTERNAL;
    }
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.empty()) throw bad_argument("empty part in weight '" + text + "'");
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw bad_argument("bad part '" + token + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw bad_argument("empty weight");
    return parts;
}

Weight parse_weight(int rank, const std::string& text) { return Weight(rank, parse_parts(text)); }

std::vector<Weight> parse_weight_list(int rank, const std::string& text) {
    std::vector<Weight> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ';')) out.push_back(parse_weight(rank, token));
    if (out.empty()) throw bad_argument("empty weight list");
    return out;
}

Weight weight_from_json(int rank, const ordered_json& j) {
    if (!j.is_array()) throw bad_argument("weight must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Weight(rank, std::move(parts));
}

std::vector<Weight> weights_from_json(int rank, const ordered_json& j) {
    std::vector<Weight> out;
    for (const auto& w : j) out.push_back(weight_from_json(rank, w));
    return out;
}

// ---- product table ----

std::string table_entries_canonical(const std::vector<std::tuple<Weight, Weight, Expansion>>& entries) {
    std::ostringstream os;
    for (const auto& [a, b, e] : entries)
        os << weight_to_json(a) << "|" << weight_to_json(b) << "|" << expansion_to_json(e) << ";";
    return os.str();
}

ordered_json table_header(const RingContext& ctx) {
    ordered_json h;
    h["format_version"] = 1;
    h["n"] = ctx.rank();
    if (ctx.mode() == RingContext::Mode::Rep) {
        h["mode"] = "rep";
        h["kappa"] = rat_to_string(ctx.kappa_eff());
    } else {
        h["mode"] = "fusion";
        h["level"] = ctx.fusion_level();
        h["galois"] = ctx.galois();
    }
    return h;
}

Expansion expansion_from_json(int rank, const ordered_json& j) {
    Expansion e;
    for (const auto& entry : j) {
        Weight nu = weight_from_json(rank, entry.at("nu"));
        HodgePoly p;
        for (const auto& [key, value] : entry.at("coeff").items()) {
            if (!value.is_number_integer()) throw bad_argument("coefficient not an exact integer");
            p.add_term(std::stoi(key), Int(value.get<long long>()));
        }
        e.add(nu, p);
    }
    return e;
}

void run_table(RingContext& ctx, int max_boxes, const std::string& path, std::string& summary_out) {
    if (max_boxes < 0) throw bad_argument("max_boxes must be nonnegative");
    int max_level = ctx.mode() == RingContext::Mode::Fusion ? ctx.fusion_level() : -1;
    std::vector<Weight> pool = weights_up_to(ctx.rank(), max_boxes, max_level);

    std::vector<std::tuple<Weight, Weight, Expansion>> entries;
    bool verified = false;
    std::ifstream in(path);
    if (in.good()) {
        ordered_json j = ordered_json::parse(in);
        ordered_json expected_header = table_header(ctx);
        for (const auto& [key, value] : expected_header.items())
            if (j.at("header").at(key) != value)
                throw bad_argument("existing table at " + path + " was built with different parameters");
        for (const auto& entry : j.at("entries"))
            entries.emplace_back(weight_from_json(ctx.rank(), entry.at("lhs")),
                                 weight_from_json(ctx.rank(), entry.at("rhs")),
                                 expansion_from_json(ctx.rank(), entry.at("expansion")));
        std::string checksum = fnv1a_hex(table_entries_canonical(entries));
        if (checksum != j.at("checksum").get<std::string>())
            throw bad_argument("table checksum mismatch at " + path);
        verified = true;
    }

    std::set<std::pair<Weight, Weight>> have;
    for (const auto& [a, b, e] : entries) have.emplace(a, b);
    long computed = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j2 = i; j2 < pool.size(); ++j2) {
            auto key = std::make_pair(pool[i], pool[j2]);
            if (have.count(key)) continue;
            entries.emplace_back(pool[i], pool[j2], ctx.star(pool[i], pool[j2]));
            ++computed;
        }

    std::string checksum = fnv1a_hex(table_entries_canonical(entries));
    std::ostringstream body;
    body << "{\"header\":" << table_header(ctx).dump() << ",\"max_boxes\":" << max_boxes
         << ",\"checksum\":\"" << checksum << "\",\"entries\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [a, b, e] = entries[i];
        if (i) body << ",";
        body << "{\"lhs\":" << weight_to_json(a) << ",\"rhs\":" << weight_to_json(b)
             << ",\"expansion\":" << expansion_to_json(e) << "}";
    }
    body << "]}";
    std::ofstream out(path);
    if (!out.good()) throw bad_argument("cannot write table to " + path);
    out << body.str() << "\n";

    ordered_json summary;
    summary["path"] = path;
    summary["header"] = table_header(ctx);
    summary["entries"] = entries.size();
    summary["computed"] = computed;
    summary["verified_existing"] = verified;
    summary["checksum"] = checksum;
    summary_out = summary.dump();
}

// ---- check dispatch ----

CheckReport dispatch_check(const std::string& name, const ordered_json& p) {
    auto mode_spec = [&]() {
        ModeSpec m;
        m.rank = p.at("n").get<int>();
        std::string mode = p.value("mode", "rep");
        if (mode == "rep") {
            m.mode = RingContext::Mode::Rep;
            m.kappa = parse_rational(p.value("kappa", "1"));
        } else if (mode == "fusion") {
            m.mode = RingContext::Mode::Fusion;
            m.level = p.at("level").get<int>();
            m.galois = p.value("galois", 1);
        } else {
            throw bad_argument("mode must be rep or fusion");
        }
        return m;
    };
    auto sample_spec = [&]() {
        SampleSpec s;
        s.max_boxes = p.value("max_boxes", 4);
        s.samples = p.value("samples", 50);
        s.seed = p.value("seed", 1);
        return s;
    };
    auto weights_arg = [&](const char* field) {
        int n = p.at("n").get<int>();
        return weights_from_json(n, p.at(field));
    };
    auto nu_arg = [&]() {
        int n = p.at("n").get<int>();
        return weight_from_json(n, p.at("nu"));
    };

    if (name == "assoc") return check_associativity(mode_spec(), sample_spec());
    if (name == "classical") return check_classical_limit(mode_spec(), sample_spec());
    if (name == "purity")
        return check_purity_integer_inverse(p.at("n").get<int>(), p.value("m", 1), sample_spec());
    if (name == "kappa-shift")
        return check_kappa_shift(p.at("n").get<int>(), parse_rational(p.at("kappa").get<std::string>()),
                                 sample_spec());
    if (name == "pi") {
        std::string v = p.value("variant", "standard");
        if (v != "standard" && v != "conjugate") throw bad_argument("variant must be standard or conjugate");
        return check_pi(p.at("n").get<int>(), p.at("level").get<int>(),
                        v == "standard" ? PiVariant::Standard : PiVariant::Conjugate, p.value("max", 30));
    }
    if (name == "hodge")
        return check_hodge_filtration(p.at("n").get<int>(), p.at("level").get<int>(), weights_arg("weights"),
                                      nu_arg(), p.value("kmax", 4));
    if (name == "weights-galois")
        return check_weight_bounds_galois(p.at("n").get<int>(), p.at("level").get<int>(),
                                          weights_arg("weights"), nu_arg());
    if (name == "bgg")
        return bgg_euler_report(p.at("n").get<int>(), p.at("level").get<int>(), weights_arg("weights"),
                                nu_arg(), p.value("max_boxes", 8));
    throw bad_argument("unknown check '" + name + "'");
}

}  // namespace

extern "C" {

const char* kzr_last_error(void) { return g_last_error.c_str(); }

void kzr_string_free(char* s) { delete[] s; }

kzr_status kzr_ring_new_rep(int rank, const char* kappa, kzr_ring** out) {
    return guarded([&] {
        if (!kappa || !out) throw bad_argument("null argument");
        *out = new kzr_ring{RingContext::rep(rank, parse_rational(kappa))};
    });
}

kzr_status kzr_ring_new_fusion(int rank, int level, int galois, kzr_ring** out) {
    return guarded([&] {
        if (!out) throw bad_argument("null argument");
        *out = new kzr_ring{RingContext::fusion(rank, level, galois)};
    });
}

void kzr_ring_free(kzr_ring* ring) { delete ring; }

kzr_status kzr_mult(kzr_ring* ring, const char* weights, const char* nu, char** json_out) {
    return guarded([&] {
        if (!ring || !weights || !json_out) throw bad_argument("null argument");
        auto lambdas = parse_weight_list(ring->ctx.rank(), weights);
        if (nu) {
            Weight target = parse_weight(ring->ctx.rank(), nu);
            *json_out = dup_string(poly_to_json(ring->ctx.npoint(lambdas, target)));
        } else {
            *json_out = dup_string(expansion_to_json(ring->ctx.npoint_full(lambdas)));
        }
    });
}

kzr_status kzr_mult_bigraded(kzr_ring* ring, const char* weights, char** json_out) {
    return guarded([&] {
        if (!ring || !weights || !json_out) throw bad_argument("null argument");
        auto lambdas = parse_weight_list(ring->ctx.rank(), weights);
        if (lambdas.size() != 2) throw bad_argument("bigraded product takes exactly two weights");
        auto prod = ring->ctx.bigraded_star(lambdas[0], lambdas[1]);
        std::vector<std::pair<Weight, BigradedPoly>> items(prod.begin(), prod.end());
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return dominance_key(a.first) > dominance_key(b.first); });
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) os << ",";
            os << "{\"nu\":" << weight_to_json(items[i].first)
               << ",\"coeff\":" << bigraded_to_json(items[i].second) << "}";
        }
        os << "]";
        *json_out = dup_string(os.str());
    });
}

kzr_status kzr_local_exponents(int rank, const char* kappa, const char* weights, char** json_out) {
    return guarded([&] {
        if (!kappa || !weights || !json_out) throw bad_argument("null argument");
        auto lambdas = parse_weight_list(rank, weights);
        auto exps = local_exponents(rank, parse_rational(kappa), lambdas);
        std::sort(exps.begin(), exps.end(), [](const LocalExponent& a, const LocalExponent& b) {
            return dominance_key(a.target) > dominance_key(b.target);
        });
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) os << ",";
            os << "{\"nu\":" << weight_to_json(exps[i].target) << ",\"multiplicity\":" << exps[i].multiplicity
               << ",\"exponent\":\"" << rat_to_string(exps[i].exponent) << "\"}";
        }
        os << "]";
        *json_out = dup_string(os.str());
    });
}

kzr_status kzr_pi(int rank, int level, int galois, const char* weight, char** json_out) {
    return guarded([&] {
        if (!weight || !json_out) throw bad_argument("null argument");
        Weight lam = parse_weight(rank, weight);
        PiCalculator pi(rank, level, galois);
        PiImage img = pi.image(lam);

        std::ostringstream os;
        os << "{\"n\":" << rank << ",\"level\":" << level << ",\"galois\":" << galois
           << ",\"weight\":" << weight_to_json(lam) << ",\"image\":" << expansion_to_json(img.image)
           << ",\"single_term\":" << (img.single_term ? "true" : "false");

        AlcoveFold fold = affine_fold(rank, level, lam);
        os << ",\"fold\":{\"wall\":" << (fold.result ? "false" : "true");
        if (fold.result)
            os << ",\"target\":" << weight_to_json(*fold.result) << ",\"sign\":" << fold.sign
               << ",\"length\":" << fold.length;
        os << "}";

        int modulus = level + rank;
        int b = ((galois % modulus) + modulus) % modulus;
        if (b == 1 || b == modulus - 1) {
            PiVariant v = (b == 1) ? PiVariant::Standard : PiVariant::Conjugate;
            PiPrediction pred = pi_predict(rank, level, v, lam);
            os << ",\"predicted\":{\"variant\":\"" << (b == 1 ? "standard" : "conjugate") << "\"";
            if (pred.zero)
                os << ",\"zero\":true";
            else
                os << ",\"zero\":false,\"sign\":" << pred.sign << ",\"coeff\":" << poly_to_json(pred.monomial)
                   << ",\"target\":" << weight_to_json(*pred.target);
            os << "}";
        }
        os << "}";
        *json_out = dup_string(os.str());
    });
}

kzr_status kzr_check(const char* name, const char* params_json, char** report_json_out, int* failed_out) {
    return guarded([&] {
        if (!name || !report_json_out) throw bad_argument("null argument");
        ordered_json params =
            params_json ? ordered_json::parse(std::string(params_json)) : ordered_json::object();
        CheckReport report = dispatch_check(name, params);
        *report_json_out = dup_string(report.to_json());
        if (failed_out) *failed_out = report.failed() ? 1 : 0;
    });
}

kzr_status kzr_table(kzr_ring* ring, int max_boxes, const char* path, char** summary_json_out) {
    return guarded([&] {
        if (!ring || !path || !summary_json_out) throw bad_argument("null argument");
        std::string summary;
        run_table(ring->ctx, max_boxes, path, summary);
        *summary_json_out = dup_string(summary);
    });
}

}  // extern "C"

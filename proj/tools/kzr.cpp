// kzr - command line front end for libkzring. Computes products in the
// enriched representation/fusion rings of sl_n, local monodromy exponents,
// the map to the fusion ring, batch product tables, and the checker suite.
// All results are UTF-8 JSON on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success (or report-only check), 1 check failure, 2 bad
// argument, 3 level violation, 4 domain error, 5 internal error.

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kzring.h"

namespace {

int exit_code(kzr_status s) {
    switch (s) {
        case KZR_OK: return 0;
        case KZR_ERR_BAD_ARGUMENT: return 2;
        case KZR_ERR_LEVEL: return 3;
        case KZR_ERR_DOMAIN: return 4;
        case KZR_ERR_INTERNAL: return 5;
    }
    return 5;
}

int fail(kzr_status s) {
    std::fprintf(stderr, "error: %s\n", kzr_last_error());
    return exit_code(s);
}

struct RingHandle {
    kzr_ring* ring = nullptr;
    ~RingHandle() { kzr_ring_free(ring); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { kzr_string_free(s); }
};

struct ModeFlags {
    int n = 2;
    std::string mode = "rep";
    std::string kappa;
    int level = -1;
    int galois = 1;

    void attach(CLI::App* cmd, bool need_mode = true) {
        cmd->add_option("--n", n, "rank of sl_n")->required();
        if (need_mode) cmd->add_option("--mode", mode, "rep or fusion")->check(CLI::IsMember({"rep", "fusion"}));
        cmd->add_option("--kappa", kappa, "kappa as r or r/s (rep mode)");
        cmd->add_option("--level", level, "fusion level");
        cmd->add_option("--galois", galois, "Galois class, coprime to level+n");
    }

    kzr_status open(kzr_ring** out) const {
        if (mode == "rep") {
            if (kappa.empty()) {
                std::fprintf(stderr, "error: rep mode needs --kappa\n");
                return KZR_ERR_BAD_ARGUMENT;
            }
            return kzr_ring_new_rep(n, kappa.c_str(), out);
        }
        if (level < 0) {
            std::fprintf(stderr, "error: fusion mode needs --level\n");
            return KZR_ERR_BAD_ARGUMENT;
        }
        return kzr_ring_new_fusion(n, level, galois, out);
    }
};

std::string json_weight(const std::string& parts) {
    // "3,3,0" -> [3,3,0]
    std::ostringstream os;
    os << "[";
    std::istringstream ps(parts);
    std::string part;
    bool first = true;
    while (std::getline(ps, part, ',')) {
        if (!first) os << ",";
        os << part;
        first = false;
    }
    os << "]";
    return os.str();
}

std::string json_weight_list(const std::string& packed) {
    // "3,3,1;3,2,1" -> [[3,3,1],[3,2,1]]
    std::ostringstream os;
    os << "[";
    std::istringstream is(packed);
    std::string token;
    bool first = true;
    while (std::getline(is, token, ';')) {
        if (!first) os << ",";
        os << json_weight(token);
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact products in enriched representation and fusion rings of sl_n"};
    app.require_subcommand(1);

    // ---- mult ----
    auto* mult = app.add_subcommand("mult", "product of weight classes");
    ModeFlags mult_mode;
    mult_mode.attach(mult);
    std::string mult_weights, mult_nu;
    bool mult_bigraded = false;
    mult->add_option("--weights", mult_weights, "semicolon-separated partitions, e.g. 7,5;9,5")->required();
    mult->add_option("--nu", mult_nu, "read off the coefficient of this weight");
    mult->add_flag("--bigraded", mult_bigraded, "two-variable coefficients (fusion mode, two weights)");

    // ---- exponents ----
    auto* expo = app.add_subcommand("exponents", "local monodromy exponents at a coalescence");
    int expo_n = 2;
    std::string expo_kappa, expo_weights;
    expo->add_option("--n", expo_n, "rank of sl_n")->required();
    expo->add_option("--kappa", expo_kappa, "kappa as r or r/s")->required();
    expo->add_option("--weights", expo_weights, "coalescing weights")->required();

    // ---- pi ----
    auto* pic = app.add_subcommand("pi", "image in the fusion ring next to its conjectured value");
    int pi_n = 2, pi_level = 1, pi_galois = 1;
    std::string pi_weight;
    pic->add_option("--n", pi_n, "rank of sl_n")->required();
    pic->add_option("--level", pi_level, "fusion level")->required();
    pic->add_option("--galois", pi_galois, "Galois class");
    pic->add_option("--weight", pi_weight, "weight to map")->required();

    // ---- check ----
    auto* chk = app.add_subcommand("check", "run a named verification");
    std::string chk_name;
    ModeFlags chk_mode;
    chk->add_option("--check", chk_name,
                    "one of: assoc, classical, purity, kappa-shift, pi, hodge, weights-galois, bgg")
        ->required();
    chk_mode.attach(chk);
    int chk_samples = 50, chk_max_boxes = 4, chk_max = 30, chk_m = 1, chk_kmax = 4;
    unsigned long long chk_seed = 1;
    std::string chk_variant = "standard", chk_weights, chk_nu;
    chk->add_option("--samples", chk_samples, "sample count");
    chk->add_option("--seed", chk_seed, "RNG seed");
    chk->add_option("--max-boxes", chk_max_boxes, "box bound for sampled weights");
    chk->add_option("--max", chk_max, "weight bound for the pi check");
    chk->add_option("--m", chk_m, "kappa = 1/m for the purity check");
    chk->add_option("--kmax", chk_kmax, "filtration steps for the hodge check");
    chk->add_option("--variant", chk_variant, "standard or conjugate")
        ->check(CLI::IsMember({"standard", "conjugate"}));
    chk->add_option("--weights", chk_weights, "weights for hodge/weights-galois/bgg");
    chk->add_option("--nu", chk_nu, "weight at infinity for hodge/weights-galois/bgg");

    // ---- table ----
    auto* tab = app.add_subcommand("table", "compute or verify a persistent product table");
    ModeFlags tab_mode;
    tab_mode.attach(tab);
    int tab_max_boxes = 0;
    std::string tab_out;
    tab->add_option("--max-boxes", tab_max_boxes, "pairwise products up to this box count")->required();
    tab->add_option("--out", tab_out, "table path")->required();

    CLI11_PARSE(app, argc, argv);

    if (mult->parsed()) {
        RingHandle ring;
        kzr_status s = mult_mode.open(&ring.ring);
        if (s != KZR_OK) return fail(s);
        OwnedString out;
        if (mult_bigraded)
            s = kzr_mult_bigraded(ring.ring, mult_weights.c_str(), &out.s);
        else
            s = kzr_mult(ring.ring, mult_weights.c_str(), mult_nu.empty() ? nullptr : mult_nu.c_str(), &out.s);
        if (s != KZR_OK) return fail(s);
        std::printf("%s\n", out.s);
        return 0;
    }

    if (expo->parsed()) {
        OwnedString out;
        kzr_status s = kzr_local_exponents(expo_n, expo_kappa.c_str(), expo_weights.c_str(), &out.s);
        if (s != KZR_OK) return fail(s);
        std::printf("%s\n", out.s);
        return 0;
    }

    if (pic->parsed()) {
        OwnedString out;
        kzr_status s = kzr_pi(pi_n, pi_level, pi_galois, pi_weight.c_str(), &out.s);
        if (s != KZR_OK) return fail(s);
        std::printf("%s\n", out.s);
        return 0;
    }

    if (chk->parsed()) {
        std::ostringstream params;
        params << "{\"n\":" << chk_mode.n << ",\"mode\":\"" << chk_mode.mode << "\"";
        if (!chk_mode.kappa.empty()) params << ",\"kappa\":\"" << chk_mode.kappa << "\"";
        if (chk_mode.level >= 0) params << ",\"level\":" << chk_mode.level;
        params << ",\"galois\":" << chk_mode.galois;
        params << ",\"samples\":" << chk_samples << ",\"seed\":" << chk_seed
               << ",\"max_boxes\":" << chk_max_boxes << ",\"max\":" << chk_max << ",\"m\":" << chk_m
               << ",\"kmax\":" << chk_kmax << ",\"variant\":\"" << chk_variant << "\"";
        if (!chk_weights.empty()) params << ",\"weights\":" << json_weight_list(chk_weights);
        if (!chk_nu.empty()) params << ",\"nu\":" << json_weight(chk_nu);
        params << "}";
        std::string p = params.str();

        OwnedString report;
        int failed = 0;
        kzr_status s = kzr_check(chk_name.c_str(), p.c_str(), &report.s, &failed);
        if (s != KZR_OK) return fail(s);
        std::printf("%s\n", report.s);
        return failed ? 1 : 0;
    }

    if (tab->parsed()) {
        RingHandle ring;
        kzr_status s = tab_mode.open(&ring.ring);
        if (s != KZR_OK) return fail(s);
        OwnedString out;
        s = kzr_table(ring.ring, tab_max_boxes, tab_out.c_str(), &out.s);
        if (s != KZR_OK) return fail(s);
        std::printf("%s\n", out.s);
        return 0;
    }

    return 2;
}

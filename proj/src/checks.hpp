#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ring.hpp"

namespace kzr {

// Executable verifications of the ring identities at desk scale. Pass/fail
// checks are deterministic given (inputs, seed); report-only checks gather
// comparison data for identities that are conjectural and never fail.
struct CheckFailure {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    enum class Status { Pass, Fail, ReportOnly };

    std::string name;
    long cases_run = 0;
    std::vector<CheckFailure> failures;
    Status status = Status::Pass;
    std::uint64_t seed = 0;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    bool failed() const { return status == Status::Fail; }
    std::string to_json() const;
};

struct SampleSpec {
    int max_boxes = 4;
    int samples = 50;
    std::uint64_t seed = 1;
};

struct ModeSpec {
    int rank = 2;
    RingContext::Mode mode = RingContext::Mode::Rep;
    Rational kappa = 1;  // Rep
    int level = 1;       // Fusion
    int galois = 1;      // Fusion
    RingContext make() const;
    nlohmann::ordered_json describe() const;
};

// commutativity and associativity of sampled triples, plus the bigraded
// fusion product when in fusion mode
CheckReport check_associativity(const ModeSpec& mode, const SampleSpec& sample);

// eval at t=1 of every sampled product against the Littlewood-Richardson /
// Kac-Walton oracles
CheckReport check_classical_limit(const ModeSpec& mode, const SampleSpec& sample);

// kappa = 1/m: every coefficient is the constant classical multiplicity
CheckReport check_purity_integer_inverse(int n, int m, const SampleSpec& sample);

// products at kappa and kappa/(1+kappa) coincide
CheckReport check_kappa_shift(int n, const Rational& kappa, const SampleSpec& sample);

// pi against its conjectured value on all weights up to the bound;
// a theorem for n = 2 (pass/fail), report-only for n >= 3
CheckReport check_pi(int n, int ell, PiVariant variant, int max_boxes);

// partial coefficient sums of the KZ polynomial at kappa = ell + n against
// conformal-block ranks at levels ell+1, ell+2, ...; report-only
CheckReport check_hodge_filtration(int n, int ell, const std::vector<Weight>& lambdas, const Weight& nu,
                                   int kmax = 4);

// fusion product polynomials over all Galois classes b coprime to ell+n,
// monomial ("finite/scalar-compatible") detection, and weight windows from
// conjugate pairs of the representation-ring polynomials; report-only
CheckReport check_weight_bounds_galois(int n, int ell, const std::vector<Weight>& lambdas, const Weight& nu);

// Euler-characteristic sum over the affine orbit folding to dual(nu),
// emitted next to the conformal-block polynomial of the folded data;
// report-only by contract
CheckReport bgg_euler_report(int n, int ell, const std::vector<Weight>& gammas, const Weight& nu,
                             int max_boxes);

}  // namespace kzr

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "kzring.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { kzr_string_free(s); }
    std::string get() const { return s ? s : ""; }
};

struct Ring {
    kzr_ring* r = nullptr;
    ~Ring() { kzr_ring_free(r); }
};

}  // namespace

TEST_CASE("rep ring product through the C surface") {
    Ring ring;
    REQUIRE(kzr_ring_new_rep(3, "13", &ring.r) == KZR_OK);
    Str out;
    REQUIRE(kzr_mult(ring.r, "7,5;9,5", "8,6", &out.s) == KZR_OK);
    CHECK(out.get() == "{\"8\":2,\"7\":1}");

    Str full;
    REQUIRE(kzr_mult(ring.r, "7,5;9,5", nullptr, &full.s) == KZR_OK);
    CHECK(full.get().find("{\"nu\":[16,10],\"coeff\":{\"0\":1}}") != std::string::npos);
}

TEST_CASE("byte-identical output on identical invocations") {
    std::string first, second;
    for (std::string* target : {&first, &second}) {
        Ring ring;
        REQUIRE(kzr_ring_new_rep(3, "13/12", &ring.r) == KZR_OK);
        Str out;
        REQUIRE(kzr_mult(ring.r, "7,5;9,5", nullptr, &out.s) == KZR_OK);
        *target = out.get();
    }
    CHECK(first == second);
}

TEST_CASE("error codes map to failure kinds") {
    Ring ring;
    CHECK(kzr_ring_new_rep(3, "-2", &ring.r) == KZR_ERR_DOMAIN);
    CHECK(kzr_ring_new_rep(3, "x", &ring.r) == KZR_ERR_BAD_ARGUMENT);
    CHECK(kzr_ring_new_fusion(3, 2, 5, &ring.r) == KZR_ERR_DOMAIN);

    REQUIRE(kzr_ring_new_rep(3, "2", &ring.r) == KZR_OK);
    Str out;
    CHECK(kzr_mult(ring.r, "5,7", "5,7", &out.s) == KZR_ERR_BAD_ARGUMENT);
    CHECK(std::string(kzr_last_error()).find("weakly decreasing") != std::string::npos);

    Ring fus;
    REQUIRE(kzr_ring_new_fusion(3, 2, 1, &fus.r) == KZR_OK);
    Str out2;
    CHECK(kzr_mult(fus.r, "4,1;1,0", "2,0", &out2.s) == KZR_ERR_LEVEL);
}

TEST_CASE("fusion and bigraded products") {
    Ring fus;
    REQUIRE(kzr_ring_new_fusion(2, 3, 1, &fus.r) == KZR_OK);
    Str out;
    REQUIRE(kzr_mult(fus.r, "3;3", nullptr, &out.s) == KZR_OK);
    // untwisted coefficients are pure monomials r t^M
    CHECK(out.get().find("\"coeff\":{\"3\":1}") != std::string::npos);

    Str big;
    REQUIRE(kzr_mult_bigraded(fus.r, "3;3", &big.s) == KZR_OK);
    CHECK(big.get().find("\"3,0\":1") != std::string::npos);
}

TEST_CASE("local exponents through the C surface") {
    Str out;
    REQUIRE(kzr_local_exponents(4, "12", "5,2,2;1,0,0", &out.s) == KZR_OK);
    CHECK(out.get().find("\"exponent\":") != std::string::npos);
    CHECK(kzr_local_exponents(4, "0", "5,2,2;1,0,0", &out.s) == KZR_ERR_DOMAIN);
}

TEST_CASE("pi image endpoint") {
    Str out;
    REQUIRE(kzr_pi(2, 3, 1, "7", &out.s) == KZR_OK);
    std::string s = out.get();
    CHECK(s.find("\"image\":") != std::string::npos);
    CHECK(s.find("\"predicted\":") != std::string::npos);
    CHECK(s.find("\"fold\":") != std::string::npos);
}

TEST_CASE("checks through the C surface") {
    Str report;
    int failed = -1;
    REQUIRE(kzr_check("kappa-shift", "{\"n\":2,\"kappa\":\"3\",\"samples\":5,\"seed\":1}", &report.s,
                      &failed) == KZR_OK);
    CHECK(failed == 0);
    CHECK(report.get().find("\"status\":\"pass\"") != std::string::npos);

    Str bad;
    CHECK(kzr_check("nope", "{}", &bad.s, &failed) == KZR_ERR_BAD_ARGUMENT);
}

TEST_CASE("product table round trip") {
    std::string path = "capi_test_table.json";
    std::remove(path.c_str());
    Ring ring;
    REQUIRE(kzr_ring_new_rep(2, "3", &ring.r) == KZR_OK);
    Str first;
    REQUIRE(kzr_table(ring.r, 6, path.c_str(), &first.s) == KZR_OK);
    CHECK(first.get().find("\"verified_existing\":false") != std::string::npos);

    Str second;
    REQUIRE(kzr_table(ring.r, 6, path.c_str(), &second.s) == KZR_OK);
    CHECK(second.get().find("\"verified_existing\":true") != std::string::npos);
    CHECK(second.get().find("\"computed\":0") != std::string::npos);

    // identical checksums on reload
    auto checksum = [](const std::string& s) {
        auto pos = s.find("\"checksum\":\"");
        return s.substr(pos, s.find('"', pos + 13) - pos);
    };
    CHECK(checksum(first.get()) == checksum(second.get()));

    // a ring with different parameters must refuse the file
    Ring other;
    REQUIRE(kzr_ring_new_rep(2, "4", &other.r) == KZR_OK);
    Str fail;
    CHECK(kzr_table(other.r, 6, path.c_str(), &fail.s) == KZR_ERR_BAD_ARGUMENT);
    std::remove(path.c_str());
}

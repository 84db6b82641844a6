#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"
#include "ring.hpp"
#include "weight.hpp"

namespace kzr {

// Canonical textual forms. All writers are deterministic: polynomial keys in
// descending exponent order, expansion entries in descending (boxes, parts)
// order, no whitespace. Identical values always serialize to identical bytes.

// {"8":2,"7":1}; the zero polynomial is {}
std::string poly_to_json(const HodgePoly& p);
// {"27,0":4}, keys "u-exp,v-exp" descending by u then v
std::string bigraded_to_json(const BigradedPoly& p);
// [7,5]
std::string weight_to_json(const Weight& w);
// [{"nu":[8,6],"coeff":{"8":2,"7":1}}, ...]
std::string expansion_to_json(const Expansion& e);

HodgePoly poly_from_json_text(const std::string& text);
Weight weight_from_json_array(int rank, const std::vector<long long>& parts);

// FNV-1a 64-bit, hex encoded; used as the product-table integrity checksum
std::string fnv1a_hex(const std::string& data);

}  // namespace kzr

#include "jsonio.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace kzr {

std::string poly_to_json(const HodgePoly& p) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << ",";
        os << "\"" << it->first << "\":" << it->second.str();
        first = false;
    }
    os << "}";
    return os.str();
}

std::string bigraded_to_json(const BigradedPoly& p) {
    std::vector<std::pair<std::pair<int, int>, Int>> items(p.terms().begin(), p.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : items) {
        if (!first) os << ",";
        os << "\"" << k.first << "," << k.second << "\":" << c.str();
        first = false;
    }
    os << "}";
    return os.str();
}

std::string weight_to_json(const Weight& w) { return w.to_string(); }

std::string expansion_to_json(const Expansion& e) {
    std::vector<const std::pair<const Weight, HodgePoly>*> items;
    for (const auto& kv : e.terms) items.push_back(&kv);
    std::sort(items.begin(), items.end(),
              [](const auto* a, const auto* b) { return dominance_key(a->first) > dominance_key(b->first); });
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto* kv : items) {
        if (!first) os << ",";
        os << "{\"nu\":" << weight_to_json(kv->first) << ",\"coeff\":" << poly_to_json(kv->second) << "}";
        first = false;
    }
    os << "]";
    return os.str();
}

HodgePoly poly_from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw bad_argument("polynomial JSON must be an object");
    HodgePoly p;
    for (const auto& [key, value] : j.items()) {
        int exp = std::stoi(key);
        if (!value.is_number_integer())
            throw bad_argument("polynomial coefficient is not an exact integer");
        p.add_term(exp, Int(value.get<long long>()));
    }
    return p;
}

Weight weight_from_json_array(int rank, const std::vector<long long>& parts) {
    std::vector<int> p(parts.begin(), parts.end());
    return Weight(rank, std::move(p));
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace kzr

#include "poly.hpp"

#include <sstream>

#include "errors.hpp"

namespace kzr {

int HodgePoly::degree() const {
    if (terms_.empty()) throw domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

int HodgePoly::min_degree() const {
    if (terms_.empty()) throw domain_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

void HodgePoly::add_term(int exp, const Int& c) {
    if (c == 0) return;
    if (exp < 0) throw domain_error("negative exponent in Z[t] polynomial");
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HodgePoly& HodgePoly::operator+=(const HodgePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HodgePoly& HodgePoly::operator-=(const HodgePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HodgePoly HodgePoly::operator+(const HodgePoly& o) const {
    HodgePoly r = *this;
    r += o;
    return r;
}

HodgePoly HodgePoly::operator-(const HodgePoly& o) const {
    HodgePoly r = *this;
    r -= o;
    return r;
}

HodgePoly HodgePoly::operator*(const HodgePoly& o) const {
    HodgePoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

HodgePoly HodgePoly::operator*(const Int& c) const {
    HodgePoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

HodgePoly HodgePoly::divide_by_monomial(int exp) const {
    HodgePoly r;
    for (const auto& [e, c] : terms_) {
        if (e < exp)
            throw internal_error("inexact division by t^" + std::to_string(exp) + " of " + to_string());
        r.add_term(e - exp, c);
    }
    return r;
}

std::string HodgePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e > 0) {
            os << "t";
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

void BigradedPoly::add_term(int ue, int ve, const Int& c) {
    if (c == 0) return;
    if (ue < 0 || ve < 0) throw domain_error("negative exponent in Z[u,v] polynomial");
    auto key = std::make_pair(ue, ve);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigradedPoly& BigradedPoly::operator+=(const BigradedPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BigradedPoly BigradedPoly::operator*(const BigradedPoly& o) const {
    BigradedPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BigradedPoly BigradedPoly::swap_uv() const {
    BigradedPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
    return r;
}

HodgePoly BigradedPoly::at_v_one() const {
    HodgePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, c);
    return r;
}

Int BigradedPoly::eval_at_one_one() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

HodgePoly reciprocal(const HodgePoly& p, int M) {
    if (M < 0) throw domain_error("reciprocal with negative mirror degree");
    HodgePoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e > M)
            throw domain_error("reciprocal: degree " + std::to_string(e) + " exceeds M=" + std::to_string(M));
        r.add_term(M - e, c);
    }
    return r;
}

BigradedPoly homogenize(const HodgePoly& p, int w) {
    if (w < 0) throw domain_error("homogenize to negative weight");
    BigradedPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e > w)
            throw domain_error("homogenize: degree " + std::to_string(e) + " exceeds weight " + std::to_string(w));
        r.add_term(e, w - e, c);
    }
    return r;
}

}  // namespace kzr

#pragma once

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace kzr {

// Sparse polynomial in Z[t]. No zero coefficients are stored; the zero
// polynomial is the empty map. All arithmetic is exact.
class HodgePoly {
public:
    HodgePoly() = default;

    static HodgePoly constant(const Int& c) {
        HodgePoly p;
        p.add_term(0, c);
        return p;
    }
    static HodgePoly one() { return constant(1); }
    static HodgePoly monomial(int exp, const Int& c = Int(1)) {
        HodgePoly p;
        p.add_term(exp, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    // degree/min_degree require a nonzero polynomial
    int degree() const;
    int min_degree() const;

    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // sum of coefficients of t^p for p >= cutoff
    Int coeff_sum_from(int cutoff) const {
        Int s = 0;
        for (const auto& [e, c] : terms_)
            if (e >= cutoff) s += c;
        return s;
    }

    bool nonneg_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    void add_term(int exp, const Int& c);

    HodgePoly& operator+=(const HodgePoly& o);
    HodgePoly& operator-=(const HodgePoly& o);
    HodgePoly operator+(const HodgePoly& o) const;
    HodgePoly operator-(const HodgePoly& o) const;
    HodgePoly operator*(const HodgePoly& o) const;
    HodgePoly operator*(const Int& c) const;
    bool operator==(const HodgePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HodgePoly& o) const { return terms_ != o.terms_; }
    bool operator<(const HodgePoly& o) const { return terms_ < o.terms_; }

    // exact division by the unit monomial t^exp; throws internal_error if
    // any stored exponent is below exp
    HodgePoly divide_by_monomial(int exp) const;

    const std::map<int, Int>& terms() const { return terms_; }

    std::string to_string() const;  // human form, e.g. "2t^8+t^7"

private:
    std::map<int, Int> terms_;
};

// Sparse polynomial in Z[u,v], keyed by (u-exponent, v-exponent).
class BigradedPoly {
public:
    BigradedPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    void add_term(int ue, int ve, const Int& c);

    Int coeff(int ue, int ve) const {
        auto it = terms_.find({ue, ve});
        return it == terms_.end() ? Int(0) : it->second;
    }

    BigradedPoly& operator+=(const BigradedPoly& o);
    BigradedPoly operator*(const BigradedPoly& o) const;
    bool operator==(const BigradedPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BigradedPoly& o) const { return terms_ != o.terms_; }

    BigradedPoly swap_uv() const;
    HodgePoly at_v_one() const;  // collapse v -> 1
    Int eval_at_one_one() const;

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

private:
    std::map<std::pair<int, int>, Int> terms_;
};

// t^M * P(1/t): mirrors exponents p <-> M-p. Requires deg P <= M.
HodgePoly reciprocal(const HodgePoly& p, int M);

// c_p t^p -> c_p u^p v^(w-p). Requires deg P <= w; every output term then
// has total degree w.
BigradedPoly homogenize(const HodgePoly& p, int w);

}  // namespace kzr

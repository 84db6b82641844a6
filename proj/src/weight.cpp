#include "weight.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace kzr {

Weight::Weight(int n, std::vector<int> p) : rank(n), parts(std::move(p)) {
    if (n < 2) throw bad_argument("rank must be at least 2");
    if (static_cast<int>(parts.size()) != n - 1)
        throw bad_argument("expected " + std::to_string(n - 1) + " parts for sl_" + std::to_string(n));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw bad_argument("partition not weakly decreasing");
    if (!parts.empty() && parts.back() < 0) throw bad_argument("partition has a negative part");
}

Weight Weight::zero(int n) { return Weight(n, std::vector<int>(n - 1, 0)); }

Weight Weight::fundamental(int n, int k) {
    if (k < 1 || k > n - 1) throw bad_argument("fundamental weight index out of range");
    std::vector<int> p(n - 1, 0);
    for (int i = 0; i < k; ++i) p[i] = 1;
    return Weight(n, std::move(p));
}

Weight Weight::rho(int n) {
    std::vector<int> p(n - 1);
    for (int i = 0; i < n - 1; ++i) p[i] = n - 1 - i;
    return Weight(n, std::move(p));
}

Weight Weight::highest_root(int n) {
    std::vector<int> p(n - 1, 1);
    p[0] = 2;
    return Weight(n, std::move(p));
}

Weight Weight::from_lvec(int n, const std::vector<long long>& l) {
    if (static_cast<int>(l.size()) != n) throw bad_argument("L-vector has wrong size");
    std::vector<int> p(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        long long v = l[i] - l[n - 1];
        p[i] = static_cast<int>(v);
    }
    return Weight(n, std::move(p));
}

std::vector<long long> Weight::lvec() const {
    std::vector<long long> l(rank, 0);
    for (int i = 0; i < rank - 1; ++i) l[i] = parts[i];
    return l;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << "]";
    return os.str();
}

bool is_zero(const Weight& w) {
    return std::all_of(w.parts.begin(), w.parts.end(), [](int p) { return p == 0; });
}

Weight dual(const Weight& w) {
    int a1 = level(w);
    std::vector<int> p(w.rank - 1);
    // parts of the dual read the complement from the right: a_1 - a_n, ...
    p[0] = a1;  // a_n = 0
    for (int i = 1; i < w.rank - 1; ++i) p[i] = a1 - w.parts[w.rank - 1 - i];
    return Weight(w.rank, std::move(p));
}

Rational pairing(int n, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw bad_argument("pairing: rank mismatch");
    Rational dot = 0, sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        dot += x[i] * y[i];
        sx += x[i];
        sy += y[i];
    }
    return dot - sx * sy / n;
}

Rational pairing(const Weight& x, const Weight& y) {
    if (x.rank != y.rank) throw bad_argument("pairing: rank mismatch");
    std::vector<Rational> a(x.rank), b(x.rank);
    auto la = x.lvec(), lb = y.lvec();
    for (int i = 0; i < x.rank; ++i) {
        a[i] = la[i];
        b[i] = lb[i];
    }
    return pairing(x.rank, a, b);
}

Rational pairing_simple_root(const Weight& w, int i) {
    if (i < 1 || i > w.rank - 1) throw bad_argument("simple root index out of range");
    long long ai = w.parts[i - 1];
    long long an = (i == w.rank - 1) ? 0 : w.parts[i];
    return Rational(ai - an);
}

Rational casimir(const Weight& w) {
    auto l = w.lvec();
    auto r = Weight::rho(w.rank).lvec();
    std::vector<Rational> a(w.rank), b(w.rank);
    for (int i = 0; i < w.rank; ++i) {
        a[i] = l[i];
        b[i] = Rational(l[i]) + 2 * Rational(r[i]);
    }
    return pairing(w.rank, a, b);
}

bool RootVector::integral_nonneg() const {
    for (const auto& c : coeffs)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

RootVector root_span_decompose(int n, const std::vector<Rational>& lvec_diff) {
    if (static_cast<int>(lvec_diff.size()) != n) throw bad_argument("L-vector has wrong size");
    Rational mean = 0;
    for (const auto& v : lvec_diff) mean += v;
    mean /= n;
    RootVector rv;
    rv.rank = n;
    rv.coeffs.resize(n - 1);
    Rational partial = 0;
    for (int i = 0; i < n - 1; ++i) {
        partial += lvec_diff[i] - mean;
        rv.coeffs[i] = partial;
    }
    return rv;
}

std::optional<RootVector> root_decompose(const std::vector<Weight>& lambdas, const Weight& nu) {
    if (lambdas.empty()) throw bad_argument("root_decompose: no weights");
    int n = nu.rank;
    std::vector<Rational> d(n, Rational(0));
    for (const auto& lam : lambdas) {
        if (lam.rank != n) throw bad_argument("root_decompose: rank mismatch");
        auto l = lam.lvec();
        for (int i = 0; i < n; ++i) d[i] += Rational(l[i]);
    }
    auto lnu = nu.lvec();
    for (int i = 0; i < n; ++i) d[i] -= Rational(lnu[i]);
    RootVector rv = root_span_decompose(n, d);
    if (!rv.integral_nonneg()) return std::nullopt;
    return rv;
}

Rational s_value(const Weight& w1, const Weight& w2) {
    if (w1.rank != w2.rank) throw bad_argument("s_value: rank mismatch");
    int n = w1.rank;
    auto l1 = w1.lvec(), l2 = w2.lvec();
    std::vector<Rational> d(n);
    for (int i = 0; i < n; ++i) d[i] = Rational(l1[i] - l2[i]);
    return root_span_decompose(n, d).total();
}

std::vector<Weight> classical_pieri(const Weight& lambda, int k) {
    int n = lambda.rank;
    if (k < 1 || k > n - 1) throw bad_argument("Pieri index out of range");
    // mu = lambda + varpi_k - (L_1+...+L_k - sum_{i in K} L_i) over k-subsets K
    std::vector<Weight> out;
    auto l = lambda.lvec();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<long long> m(n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            m[i] = l[i] + ((mask >> i) & 1u);
            if (i > 0 && m[i] > m[i - 1]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(Weight::from_lvec(n, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PieriCombo> pieri_combo(const Weight& lambda, int k, const Weight& mu) {
    int n = lambda.rank;
    if (mu.rank != n) throw bad_argument("pieri_combo: rank mismatch");
    if (k < 1 || k > n - 1) throw bad_argument("Pieri index out of range");
    auto l = lambda.lvec(), m = mu.lvec();
    // d = lambda + varpi_k - mu in L-coordinates; shift so it sums to zero
    std::vector<long long> d(n);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        d[i] = l[i] + (i < k ? 1 : 0) - m[i];
        sum += d[i];
    }
    if (sum % n != 0) return std::nullopt;
    long long shift = sum / n;
    PieriCombo combo;
    combo.subset_mask.assign(n, 0);
    long long partial = 0;
    int M = 0;
    for (int i = 0; i < n; ++i) {
        long long c = d[i] - shift;
        long long e = (i < k ? 1 : 0) - c;  // 1 iff i+1 in K
        if (e != 0 && e != 1) return std::nullopt;
        combo.subset_mask[i] = static_cast<int>(e);
        partial += c;
        if (partial < 0) return std::nullopt;
        if (i < n - 1) M += static_cast<int>(partial);
    }
    if (partial != 0) return std::nullopt;
    int count = 0;
    for (int b : combo.subset_mask) count += b;
    if (count != k) return std::nullopt;
    combo.num_vars = M;
    return combo;
}

std::pair<long long, std::vector<int>> dominance_key(const Weight& w) {
    return {boxes(w), w.parts};
}

Int weyl_dim(const Weight& w) {
    auto x = w.lvec();
    auto r = Weight::rho(w.rank).lvec();
    Int num = 1, den = 1;
    for (int i = 0; i < w.rank; ++i)
        for (int j = i + 1; j < w.rank; ++j) {
            num *= Int((x[i] + r[i]) - (x[j] + r[j]));
            den *= Int(r[i] - r[j]);
        }
    return num / den;
}

std::vector<Weight> weights_up_to(int n, long long max_boxes, int max_level) {
    std::vector<Weight> out;
    std::vector<int> parts(n - 1, 0);
    std::function<void(int, int, long long)> rec = [&](int idx, int cap, long long remaining) {
        if (idx == n - 1) {
            out.emplace_back(n, parts);
            return;
        }
        int hi = static_cast<int>(std::min<long long>(cap, remaining));
        for (int v = 0; v <= hi; ++v) {
            parts[idx] = v;
            rec(idx + 1, v, remaining - v);
        }
    };
    int cap0 = max_level >= 0 ? max_level : static_cast<int>(max_boxes);
    rec(0, cap0, max_boxes);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kzr

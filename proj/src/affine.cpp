#include "affine.hpp"

#include <algorithm>

#include "errors.hpp"
#include "lr.hpp"

namespace kzr {

AlcoveFold affine_fold(int n, int ell, const Weight& lambda) {
    if (ell < 0) throw bad_argument("negative level");
    if (lambda.rank != n) throw bad_argument("affine_fold: rank mismatch");
    auto x = lambda.lvec();
    auto r = Weight::rho(n).lvec();
    for (int i = 0; i < n; ++i) x[i] += r[i];
    long long kappa = ell + n;  // alcove width (x, theta) < ell + n

    int sign = 1;
    long steps = 0;
    // Walk into the closed alcove: lowest-index violated simple reflection
    // first, the affine reflection last. Any wall contact kills the fold.
    const long step_cap = 1000000;
    while (true) {
        if (steps > step_cap) throw internal_error("affine_fold did not terminate");
        bool reflected = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (x[i] == x[i + 1]) return AlcoveFold{std::nullopt, sign, steps};
            if (x[i] < x[i + 1]) {
                std::swap(x[i], x[i + 1]);
                sign = -sign;
                ++steps;
                reflected = true;
                break;
            }
        }
        if (reflected) continue;
        long long theta_pair = x[0] - x[n - 1];
        if (theta_pair == kappa) return AlcoveFold{std::nullopt, sign, steps};
        if (theta_pair > kappa) {
            long long c = theta_pair - kappa;
            x[0] -= c;
            x[n - 1] += c;
            sign = -sign;
            ++steps;
            continue;
        }
        break;
    }
    for (int i = 0; i < n; ++i) x[i] -= r[i];
    Weight mu = Weight::from_lvec(n, x);
    // report the minimal length; the walk itself need not be geodesic but
    // its parity agrees with (-1)^{l(w)}
    long len = alcove_min_length(n, ell, lambda);
    return AlcoveFold{mu, sign, len};
}

long alcove_min_length(int n, int ell, const Weight& lambda) {
    auto x = lambda.lvec();
    auto r = Weight::rho(n).lvec();
    long long width = ell + n;
    long len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long pair = (x[i] + r[i]) - (x[j] + r[j]);
            len += static_cast<long>(pair / width);  // pair >= 0 for dominant lambda
        }
    return len;
}

std::map<Weight, long> fusion_tensor(int ell, const Weight& lambda, const Weight& mu) {
    if (level(lambda) > ell || level(mu) > ell) throw level_error("fusion_tensor: operand above level");
    std::map<Weight, long> out;
    for (const auto& [gamma, c] : lr_tensor(lambda, mu)) {
        AlcoveFold fold = affine_fold(lambda.rank, ell, gamma);
        if (!fold.result) continue;
        long& acc = out[*fold.result];
        acc += c * fold.sign;
        if (acc == 0) out.erase(*fold.result);
    }
    for (const auto& [nu, c] : out)
        if (c < 0) throw internal_error("negative fusion coefficient at " + nu.to_string());
    return out;
}

long fusion_npoint_rank(int ell, const std::vector<Weight>& lambdas, const Weight& nu) {
    if (lambdas.empty()) throw bad_argument("fusion_npoint_rank: no weights");
    if (level(nu) > ell) return 0;
    std::map<Weight, long> acc{{lambdas[0], 1}};
    if (level(lambdas[0]) > ell) throw level_error("fusion_npoint_rank: operand above level");
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        std::map<Weight, long> next;
        for (const auto& [w, c] : acc)
            for (const auto& [v, d] : fusion_tensor(ell, w, lambdas[i])) next[v] += c * d;
        acc = std::move(next);
    }
    auto it = acc.find(nu);
    return it == acc.end() ? 0 : it->second;
}

}  // namespace kzr

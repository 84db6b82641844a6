#include "lr.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace kzr {

namespace {

// Count Littlewood-Richardson tableaux of shape outer/inner with content mu:
// column-strict fillings whose reverse reading word (rows top to bottom, each
// row right to left) is a lattice word. Cells are visited in reverse reading
// order so all three constraints check incrementally.
long count_lr(const std::vector<int>& inner, const std::vector<int>& outer, const std::vector<int>& mu) {
    int rows = static_cast<int>(outer.size());
    int vals = static_cast<int>(mu.size());
    std::vector<int> remaining = mu;                       // content left to place per value
    std::vector<std::vector<int>> fill(rows);              // fill[r][c - inner[r]]
    for (int r = 0; r < rows; ++r) fill[r].assign(std::max(0, outer[r] - inner[r]), 0);

    long count = 0;
    // position list in reverse reading order
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = outer[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1, hi = vals;
        // within a row, entries weakly increase left to right; the cell to
        // the right was placed just before this one
        if (c + 1 < outer[r]) hi = std::min(hi, fill[r][c + 1 - inner[r]]);
        // column strict against the cell above (when that cell is in the skew shape)
        if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = std::max(lo, fill[r - 1][c - inner[r - 1]] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice: value v may appear only if strictly fewer v than v-1
            // have been placed so far
            if (v > 1 && mu[v - 2] - remaining[v - 2] <= mu[v - 1] - remaining[v - 1]) continue;
            remaining[v - 1]--;
            fill[r][c - inner[r]] = v;
            rec(idx + 1);
            remaining[v - 1]++;
        }
    };
    rec(0);
    return count;
}

}  // namespace

std::map<Weight, long> lr_tensor(const Weight& lambda, const Weight& mu) {
    if (lambda.rank != mu.rank) throw bad_argument("lr_tensor: rank mismatch");
    int n = lambda.rank;
    std::vector<int> lam(lambda.parts);
    lam.push_back(0);
    std::vector<int> muv(mu.parts);
    muv.push_back(0);
    long long total = boxes(lambda) + boxes(mu);

    std::map<Weight, long> out;
    // enumerate outer shapes nu >= lam with |nu| = |lam| + |mu|, at most n rows
    std::vector<int> nu(n, 0);
    std::function<void(int, int, long long)> enumerate = [&](int row, int cap, long long remaining) {
        if (row == n) {
            if (remaining != 0) return;
            long c = count_lr(lam, nu, muv);
            if (c > 0) {
                std::vector<long long> l(nu.begin(), nu.end());
                out[Weight::from_lvec(n, l)] += c;
            }
            return;
        }
        int lo = lam[row];
        int hi = static_cast<int>(std::min<long long>(cap, lo + remaining));
        for (int v = lo; v <= hi; ++v) {
            nu[row] = v;
            enumerate(row + 1, v, remaining - (v - lo));
        }
    };
    enumerate(0, static_cast<int>(total), boxes(mu));
    return out;
}

}  // namespace kzr

#include "rho/linalg.hpp"

#include <unordered_map>
#include <unordered_set>

namespace rho {

namespace {

// Gaussian elimination with local Markowitz-style pivoting: repeatedly
// take the sparsest active column and eliminate at its entry whose row
// touches the fewest other columns. On boundary-operator matrices this
// keeps fill near zero where pivot-by-position echelon forms explode.
template <class K>
int rank_pivoting(int rows, const std::vector<SVec<int>>& cols) {
    int ncols = static_cast<int>(cols.size());
    std::vector<std::unordered_map<int, K>> col(ncols);
    std::vector<std::unordered_set<int>> row_cols(rows);
    for (int j = 0; j < ncols; ++j) {
        for (auto& [i, x] : cols[j]) {
            if (x == 0) continue;
            col[j].emplace(i, K(x));
            row_cols[i].insert(j);
        }
    }

    // bucket queue of active columns keyed by current size; entries go
    // stale after updates, so sizes are re-checked on pop and the scan
    // cursor backtracks whenever a column shrinks below it
    std::vector<std::vector<int>> bucket(size_t(rows) + 2);
    std::vector<char> done(ncols, 0);
    size_t cursor = 1;
    auto push = [&](int j) {
        size_t s = std::min(col[j].size(), bucket.size() - 1);
        if (s == 0) return;
        bucket[s].push_back(j);
        if (s < cursor) cursor = s;
    };
    for (int j = 0; j < ncols; ++j) push(j);

    int rank = 0;
    while (cursor < bucket.size()) {
        if (bucket[cursor].empty()) {
            ++cursor;
            continue;
        }
        int pc = bucket[cursor].back();
        bucket[cursor].pop_back();
        if (done[pc] || col[pc].empty()) continue;
        if (std::min(col[pc].size(), bucket.size() - 1) != cursor) {
            push(pc);
            continue;
        }
        int pr = -1;
        size_t best = SIZE_MAX;
        for (auto& [i, x] : col[pc]) {
            size_t c = row_cols[i].size();
            if (c < best) { best = c; pr = i; }
        }
        done[pc] = 1;
        ++rank;
        K pivot = col[pc].at(pr);
        std::vector<int> touched(row_cols[pr].begin(), row_cols[pr].end());
        for (int j : touched) {
            if (j == pc) continue;
            K f = col[j].at(pr) / pivot;
            for (auto& [i, x] : col[pc]) {
                auto it = col[j].find(i);
                if (it == col[j].end()) {
                    col[j].emplace(i, -(f * x));
                    row_cols[i].insert(j);
                } else {
                    it->second += -(f * x);
                    if (is_zero_scalar(it->second)) {
                        col[j].erase(it);
                        row_cols[i].erase(j);
                    }
                }
            }
            push(j);
        }
        for (auto& [i, x] : col[pc]) row_cols[i].erase(pc);
        col[pc].clear();
    }
    return rank;
}

}  // namespace

int rank_int_matrix(int rows, const std::vector<SVec<int>>& cols) {
    try {
        return rank_pivoting<Frac64>(rows, cols);
    } catch (const FracOverflow&) {
        return rank_pivoting<Rat>(rows, cols);
    }
}

}  // namespace rho

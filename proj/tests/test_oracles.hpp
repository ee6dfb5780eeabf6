#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// straight recursive enumeration and corner-peeling counts.

#include "skewtab/numeric.hpp"
#include "skewtab/partition.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// Every U/D/L string of length n that stays nonnegative and ends at 0.
inline std::vector<std::string> motzkin_paths(int n) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int h, int rem) -> void {
        if (rem == 0) {
            if (h == 0) out.push_back(cur);
            return;
        }
        cur.push_back('U');
        self(self, h + 1, rem - 1);
        cur.pop_back();
        if (h > 0) {
            cur.push_back('D');
            self(self, h - 1, rem - 1);
            cur.pop_back();
        }
        cur.push_back('L');
        self(self, h, rem - 1);
        cur.pop_back();
    };
    rec(rec, 0, n);
    return out;
}

// Number of standard fillings of a shape, by peeling the largest entry off a
// corner; no hook products involved.
inline skewtab::BigInt syt_count(const std::vector<int>& shape,
                                 std::map<std::vector<int>, skewtab::BigInt>& memo) {
    bool empty = true;
    for (int p : shape)
        if (p > 0) { empty = false; break; }
    if (empty) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    skewtab::BigInt total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] == 0) continue;
        if (r + 1 < shape.size() && shape[r + 1] == shape[r]) continue;  // not a corner
        std::vector<int> next = shape;
        --next[r];
        total += syt_count(next, memo);
    }
    memo.emplace(shape, total);
    return total;
}

inline skewtab::BigInt syt_count(const skewtab::Partition& mu) {
    std::map<std::vector<int>, skewtab::BigInt> memo;
    return syt_count(mu.parts(), memo);
}

// All standard Young tableaux with n entries and at most max_rows rows,
// built by appending each entry in turn to a row end that keeps the row
// lengths weakly decreasing.
inline std::vector<std::vector<std::vector<int>>> all_syt(int n, int max_rows) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(rows);
            return;
        }
        const int limit = std::min(max_rows, static_cast<int>(rows.size()) + 1);
        for (int r = 0; r < limit; ++r) {
            const bool new_row = r == static_cast<int>(rows.size());
            if (!new_row && r > 0 && rows[r].size() + 1 > rows[r - 1].size()) continue;
            if (new_row) rows.emplace_back();
            rows[r].push_back(next);
            self(self, next + 1);
            rows[r].pop_back();
            if (new_row) rows.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace oracle

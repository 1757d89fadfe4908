#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "rbsym/partitions.hpp"
#include "rbsym/set_partition.hpp"

namespace rbsym {

// All exhaustive listings below run in a fixed deterministic order
// (lexicographic on a canonical integer encoding).

// Set partitions of [n] in lexicographic order of restricted growth strings.
inline std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back(SetPartition(0, {}));
        return out;
    }
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            out.push_back(SetPartition::from_rgs(rgs));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

// Integer partitions of n, parts descending, in reverse-lex order starting at (n).
inline std::vector<IntPartition> all_int_partitions(int n) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(IntPartition(cur));
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Compositions of n ordered by their subset encoding.
inline std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    unsigned top = (n >= 1) ? (1u << (n - 1)) : 1u;
    for (unsigned m = 0; m < top; ++m)
        out.push_back(Composition::from_subset(PositionSubset(n, m)));
    return out;
}

// Permutations of [n] as 1-based words, lexicographic.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline BigInt bell_number(int n) {
    // Bell triangle
    std::vector<BigInt> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next = {row.back()};
        for (auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace rbsym

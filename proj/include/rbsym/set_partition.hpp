#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbsym/partitions.hpp"
#include "rbsym/rational.hpp"

namespace rbsym {

// Set partition of [n] in canonical form: blocks sorted by minimum element,
// elements ascending inside each block. Equality is structural.
class SetPartition {
public:
    SetPartition() : n_(0) {}

    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        canonicalize();
        std::vector<bool> seen(n + 1, false);
        int total = 0;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("empty block");
            for (int x : b) {
                if (x < 1 || x > n || seen[x])
                    throw std::invalid_argument("blocks must partition [n]");
                seen[x] = true;
                ++total;
            }
        }
        if (total != n) throw std::invalid_argument("blocks must cover [n]");
    }

    // Build from a restricted growth string rgs[i] = block index of i+1.
    static SetPartition from_rgs(const std::vector<int>& rgs) {
        int n = static_cast<int>(rgs.size());
        int k = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(k);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        return SetPartition(n, std::move(blocks));
    }

    static SetPartition bottom(int n) {
        std::vector<std::vector<int>> b;
        for (int i = 1; i <= n; ++i) b.push_back({i});
        return SetPartition(n, std::move(b));
    }

    static SetPartition top(int n) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        return SetPartition(n, {all});
    }

    int n() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int block_index_of(int x) const {
        for (size_t i = 0; i < blocks_.size(); ++i)
            if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
                return static_cast<int>(i);
        throw std::invalid_argument("element outside [n]");
    }

    const std::vector<int>& block_of(int x) const { return blocks_[block_index_of(x)]; }

    bool same_block(int x, int y) const { return block_index_of(x) == block_index_of(y); }

    std::vector<int> rgs() const {
        std::vector<int> r(n_);
        for (size_t i = 0; i < blocks_.size(); ++i)
            for (int x : blocks_[i]) r[x - 1] = static_cast<int>(i);
        return r;
    }

    // lambda(pi): block sizes as a partition of n.
    IntPartition type() const {
        std::vector<int> sizes;
        for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
        return IntPartition(std::move(sizes));
    }

    // |pi| = r_1! r_2! ... r_n!  for lambda(pi) = (1^{r_1} 2^{r_2} ...)
    BigInt type_multiplicity() const { return type().multiplicity_factorial(); }

    // pi! = 1!^{r_1} 2!^{r_2} ... n!^{r_n}
    BigInt block_factorial() const {
        BigInt r = 1;
        for (const auto& b : blocks_) r *= factorial(static_cast<int>(b.size()));
        return r;
    }

    // Refinement order: every block of *this contained in some block of sigma.
    bool leq(const SetPartition& sigma) const {
        require_same_ambient(sigma);
        for (const auto& b : blocks_) {
            int j = sigma.block_index_of(b[0]);
            for (int x : b)
                if (sigma.block_index_of(x) != j) return false;
        }
        return true;
    }

    SetPartition meet(const SetPartition& sigma) const {
        require_same_ambient(sigma);
        std::map<std::pair<int, int>, std::vector<int>> cells;
        for (int x = 1; x <= n_; ++x)
            cells[{block_index_of(x), sigma.block_index_of(x)}].push_back(x);
        std::vector<std::vector<int>> blocks;
        for (auto& [k, v] : cells) blocks.push_back(std::move(v));
        return SetPartition(n_, std::move(blocks));
    }

    SetPartition join(const SetPartition& sigma) const {
        require_same_ambient(sigma);
        std::vector<int> parent(n_ + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto* part : {this, &sigma})
            for (const auto& b : part->blocks_)
                for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
        std::map<int, std::vector<int>> comp;
        for (int x = 1; x <= n_; ++x) comp[find(x)].push_back(x);
        std::vector<std::vector<int>> blocks;
        for (auto& [k, v] : comp) blocks.push_back(std::move(v));
        return SetPartition(n_, std::move(blocks));
    }

    // pi + (n+1): insert n+1 into the block containing n.
    SetPartition plus() const {
        auto blocks = blocks_;
        blocks[block_index_of(n_)].push_back(n_ + 1);
        return SetPartition(n_ + 1, std::move(blocks));
    }

    // pi / n+1: append {n+1} as a singleton block.
    SetPartition slash() const {
        auto blocks = blocks_;
        blocks.push_back({n_ + 1});
        return SetPartition(n_ + 1, std::move(blocks));
    }

    // Apply a permutation of [n] to every element. perm[i-1] = image of i.
    SetPartition relabel(const std::vector<int>& perm) const {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : blocks_) {
            std::vector<int> nb;
            for (int x : b) nb.push_back(perm[x - 1]);
            blocks.push_back(std::move(nb));
        }
        return SetPartition(n_, std::move(blocks));
    }

    // Restriction to {lo..hi}, relabeled to [hi-lo+1].
    SetPartition restrict_range(int lo, int hi) const {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : blocks_) {
            std::vector<int> nb;
            for (int x : b)
                if (x >= lo && x <= hi) nb.push_back(x - lo + 1);
            if (!nb.empty()) blocks.push_back(std::move(nb));
        }
        return SetPartition(hi - lo + 1, std::move(blocks));
    }

    std::string to_string() const {
        auto elem = [&](int x) {
            return n_ <= 9 ? std::to_string(x) : std::to_string(x) + ".";
        };
        std::string s;
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += "/";
            for (int x : blocks_[i]) s += elem(x);
        }
        return s;
    }

    // Parses "12/3/4" (single-digit elements) with ambient inferred.
    static SetPartition parse(const std::string& s) {
        std::vector<std::vector<int>> blocks;
        std::stringstream ss(s);
        std::string tok;
        int n = 0;
        while (std::getline(ss, tok, '/')) {
            std::vector<int> b;
            for (char c : tok) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad set partition: " + s);
                b.push_back(c - '0');
                n = std::max(n, c - '0');
            }
            blocks.push_back(std::move(b));
        }
        return SetPartition(n, std::move(blocks));
    }

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator<(const SetPartition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return rgs() < o.rgs();
    }

private:
    void canonicalize() {
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
    }

    void require_same_ambient(const SetPartition& o) const {
        if (n_ != o.n_) throw std::invalid_argument("set partitions of different ambients");
    }

    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Moebius function of Pi_n by the product formula: for sigma <= pi,
// mu(sigma,pi) = prod over blocks B of pi of (-1)^{b-1} (b-1)!,
// b = number of blocks of sigma inside B.
inline BigInt mobius(const SetPartition& sigma, const SetPartition& pi) {
    if (!sigma.leq(pi)) throw std::invalid_argument("mobius requires sigma <= pi");
    BigInt r = 1;
    for (const auto& B : pi.blocks()) {
        std::set<int> inner;
        for (int x : B) inner.insert(sigma.block_index_of(x));
        int b = static_cast<int>(inner.size());
        BigInt f = factorial(b - 1);
        r *= (b % 2 == 1) ? f : -f;
    }
    return r;
}

// |mu(0hat, pi)| = prod over blocks (|B|-1)!
inline BigInt mobius_zero_abs(const SetPartition& pi) {
    BigInt r = 1;
    for (const auto& B : pi.blocks()) r *= factorial(static_cast<int>(B.size()) - 1);
    return r;
}

}  // namespace rbsym

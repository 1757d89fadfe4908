#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbsym/rational.hpp"

namespace rbsym {

// Integer partition: weakly decreasing list of positive parts.
class IntPartition {
public:
    IntPartition() = default;

    explicit IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }

    // lambda'_i = #{j : lambda_j >= i}
    IntPartition conjugate() const {
        std::vector<int> c;
        for (int i = 1; parts_.empty() ? false : i <= parts_[0]; ++i) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= i) ++cnt;
            c.push_back(cnt);
        }
        return IntPartition(std::move(c));
    }

    // Multiplicity of part value v.
    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    // prod_v r_v!  where r_v is the multiplicity of part v.
    BigInt multiplicity_factorial() const {
        BigInt r = 1;
        int i = 0;
        while (i < length()) {
            int j = i;
            while (j < length() && parts_[j] == parts_[i]) ++j;
            r *= factorial(j - i);
            i = j;
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static IntPartition parse(const std::string& s) {
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) parts.push_back(std::stoi(tok));
        return IntPartition(std::move(parts));
    }

    auto operator<=>(const IntPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Subset I of [n-1] with ambient weight n; bit i-1 of mask() represents element i.
class PositionSubset {
public:
    PositionSubset() : ambient_(1), mask_(0) {}

    PositionSubset(int ambient, unsigned mask) : ambient_(ambient), mask_(mask) {
        if (ambient < 1) throw std::invalid_argument("ambient must be >= 1");
        if (ambient <= 31 && (mask >> (ambient - 1)) != 0)
            throw std::invalid_argument("subset element outside [n-1]");
    }

    static PositionSubset of(int ambient, const std::vector<int>& elements) {
        unsigned m = 0;
        for (int e : elements) {
            if (e < 1 || e > ambient - 1)
                throw std::invalid_argument("subset element outside [n-1]");
            m |= 1u << (e - 1);
        }
        return PositionSubset(ambient, m);
    }

    int ambient() const { return ambient_; }
    unsigned mask() const { return mask_; }
    bool contains(int i) const { return i >= 1 && i < ambient_ && (mask_ >> (i - 1)) & 1u; }
    int size() const { return __builtin_popcount(mask_); }

    std::vector<int> elements() const {
        std::vector<int> e;
        for (int i = 1; i < ambient_; ++i)
            if (contains(i)) e.push_back(i);
        return e;
    }

    PositionSubset complement() const {
        unsigned full = (ambient_ >= 2) ? ((1u << (ambient_ - 1)) - 1) : 0u;
        return PositionSubset(ambient_, full & ~mask_);
    }

    // { n - i | i in I }
    PositionSubset opposite() const {
        unsigned m = 0;
        for (int i = 1; i < ambient_; ++i)
            if (contains(i)) m |= 1u << (ambient_ - i - 1);
        return PositionSubset(ambient_, m);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        s += "}@n=" + std::to_string(ambient_);
        return s;
    }

    auto operator<=>(const PositionSubset&) const = default;

private:
    int ambient_;
    unsigned mask_;
};

// Composition of n: ordered list of positive parts.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }

    // set(alpha) = {a1, a1+a2, ...} inside [n-1]
    PositionSubset to_subset() const {
        std::vector<int> e;
        int acc = 0;
        for (size_t i = 0; i + 1 < parts_.size(); ++i) {
            acc += parts_[i];
            e.push_back(acc);
        }
        return PositionSubset::of(weight(), e);
    }

    static Composition from_subset(const PositionSubset& I) {
        std::vector<int> parts;
        int prev = 0;
        for (int e : I.elements()) {
            parts.push_back(e - prev);
            prev = e;
        }
        parts.push_back(I.ambient() - prev);
        return Composition(std::move(parts));
    }

    Composition opposite() const {
        std::vector<int> p(parts_.rbegin(), parts_.rend());
        return Composition(std::move(p));
    }

    IntPartition sorted() const { return IntPartition(parts_); }

    // alpha finer than beta: set(beta) subseteq set(alpha). Requires equal weights.
    bool is_finer_than(const Composition& beta) const {
        if (weight() != beta.weight())
            throw std::invalid_argument("refinement compares compositions of equal weight");
        unsigned a = to_subset().mask(), b = beta.to_subset().mask();
        return (b & ~a) == 0;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += "|";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    static Composition parse(const std::string& str) {
        std::string s = str;
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '|'))
            if (!tok.empty()) parts.push_back(std::stoi(tok));
        return Composition(std::move(parts));
    }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

}  // namespace rbsym

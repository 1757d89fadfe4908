#pragma once

#include <string>
#include <vector>

#include "rbsym/rational.hpp"

namespace rbsym {

// Dense exact-rational polynomial in one formal variable m.
class UniPolynomial {
public:
    UniPolynomial() = default;
    explicit UniPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPolynomial zero() { return UniPolynomial(); }
    static UniPolynomial constant(const Rational& r) { return UniPolynomial({r}); }
    static UniPolynomial variable() { return UniPolynomial({0, 1}); }

    // m(m-1)...(m-k+1)
    static UniPolynomial falling_factorial(int k) {
        UniPolynomial p = constant(1);
        for (int j = 0; j < k; ++j) p = p * UniPolynomial({Rational(-j), 1});
        return p;
    }

    // m(m+1)...(m+k-1)
    static UniPolynomial rising_factorial(int k) {
        UniPolynomial p = constant(1);
        for (int j = 0; j < k; ++j) p = p * UniPolynomial({Rational(j), 1});
        return p;
    }

    // binomial(m, k) as a polynomial in m
    static UniPolynomial binomial_poly(int k) {
        UniPolynomial p = falling_factorial(k);
        Rational inv(1, factorial(k));
        return p * inv;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // p(-m)
    UniPolynomial substitute_negated() const {
        auto c = c_;
        for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return UniPolynomial(std::move(c));
    }

    UniPolynomial operator+(const UniPolynomial& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return UniPolynomial(std::move(c));
    }

    UniPolynomial operator-(const UniPolynomial& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
        return UniPolynomial(std::move(c));
    }

    UniPolynomial operator*(const UniPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return UniPolynomial(std::move(c));
    }

    UniPolynomial operator*(const Rational& r) const {
        auto c = c_;
        for (auto& x : c) x *= r;
        return UniPolynomial(std::move(c));
    }

    bool operator==(const UniPolynomial& o) const { return c_ == o.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            if (!s.empty()) {
                s += (a > 0) ? " + " : " - ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            bool show_coeff = (a != 1 || i == 0);
            if (show_coeff) s += rational_to_string(a);
            if (i >= 1) {
                if (show_coeff) s += "*";
                s += "m";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace rbsym

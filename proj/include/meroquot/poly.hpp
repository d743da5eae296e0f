#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "meroquot/errors.hpp"
#include "meroquot/scalars.hpp"

namespace meroquot {

// Dense univariate polynomial with exact coefficients, stored ascending.
// The representation is unique: the highest stored coefficient is nonzero,
// and the zero polynomial stores nothing (degree() == nullopt, never -1
// fed into arithmetic). The indeterminate has no intrinsic name; renderers
// attach one (t for Betti polynomials, z for divisors, u for zeta
// numerators, w in the chart at infinity).
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(const T& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    Poly(int constant) : Poly(T(constant)) {}
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t k, const T& coeff = T(1)) {
        if (coeff == 0) return Poly{};
        std::vector<T> c(k + 1);
        c[k] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree with a distinguished sentinel for the zero polynomial.
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<long>(c_.size()) - 1;
    }

    // Number of stored coefficients (degree + 1, or 0 for the zero poly).
    std::size_t size() const { return c_.size(); }

    const std::vector<T>& coeffs() const { return c_; }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& leading() const { return c_.back(); }  // pre: nonzero

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    // Exact convolution product.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const T& s) const {
        if (s == 0) return Poly{};
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    // Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<T> c(c_.size() + k, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    // Exact Horner evaluation.
    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly pow(unsigned long e) const {
        Poly acc(T(1));
        Poly b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IPoly = Poly<Int>;
using QPoly = Poly<Rat>;

inline QPoly to_rational(const IPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

// p(x) written in x^2: requires every odd coefficient to vanish.
template <class T>
Poly<T> compress_even(const Poly<T>& p) {
    std::vector<T> c;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k % 2 == 0)
            c.push_back(p.coeff(k));
        else if (p.coeff(k) != 0)
            throw Error("compress_even: nonzero odd coefficient");
    }
    return Poly<T>(std::move(c));
}

template <class T>
bool is_palindromic(const Poly<T>& p) {
    const std::size_t n = p.size();
    for (std::size_t k = 0; k < n; ++k)
        if (p.coeff(k) != p.coeff(n - 1 - k)) return false;
    return true;
}

// ---- field-coefficient algorithms (rational coefficients) ----

inline QPoly make_monic(const QPoly& p) {
    if (p.is_zero() || p.is_monic()) return p;
    return p.scaled(Rat(1) / p.leading());
}

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw ZeroFunction("division by the zero polynomial");
    if (a.size() < b.size()) return {QPoly{}, a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quo(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.leading();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        Rat q = rem[k] / lead;
        if (q != 0) {
            quo[k - b.size() + 1] = q;
            for (std::size_t j = 0; j < b.size(); ++j) rem[k - b.size() + 1 + j] -= q * b.coeffs()[j];
        }
        if (k == 0) break;
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

inline QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

// Quotient of an exact division (throws if the remainder is nonzero).
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("exact_div: inexact polynomial division");
    return q;
}

// Monic gcd.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
        // keep coefficient growth in check
        b = make_monic(b);
    }
    return make_monic(a);
}

inline QPoly poly_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    return make_monic(exact_div(a * b, poly_gcd(a, b)));
}

inline QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return QPoly{};
    std::vector<Rat> c(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) c[k - 1] = p.coeffs()[k] * Rat(Int(k));
    return QPoly(std::move(c));
}

}  // namespace meroquot

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "q3fold/rational.hpp"

namespace q3fold {

/// Dense univariate polynomial over an exact field. coeffs[i] is the
/// coefficient of x^i; the zero polynomial has an empty coefficient list and
/// degree -1.
template <typename T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const T& a) { return UPoly(std::vector<T>{a}); }
    static UPoly x(const T& like) {
        return UPoly(std::vector<T>{scalar_traits<T>::zero(like), scalar_traits<T>::one(like)});
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const {
        if (c_.empty()) throw std::domain_error("UPoly: leading coefficient of zero");
        return c_.back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size()) r.push_back(a.c_[i]);
            else r.push_back(b.c_[i]);
        }
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a) {
        std::vector<T> r;
        r.reserve(a.c_.size());
        for (const auto& x : a.c_) r.push_back(-x);
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        const T z = scalar_traits<T>::zero(a.c_[0]);
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, z);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_traits<T>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return UPoly(std::move(r));
    }

    UPoly scaled(const T& s) const {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * s);
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    T eval(const T& x) const {
        if (c_.empty()) throw std::domain_error("UPoly::eval on zero polynomial needs context");
        T acc = scalar_traits<T>::zero(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
        if (a.degree() < b.degree()) return {UPoly(), a};
        const T z = scalar_traits<T>::zero(b.c_.back());
        std::vector<T> rem = a.c_;
        std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), z);
        const T lead_inv = scalar_traits<T>::one(b.c_.back()) / b.c_.back();
        for (long k = a.degree() - b.degree(); k >= 0; --k) {
            const std::size_t top = static_cast<std::size_t>(k + b.degree());
            if (scalar_traits<T>::is_zero(rem[top])) continue;
            const T q = rem[top] * lead_inv;
            quot[static_cast<std::size_t>(k)] = q;
            for (long i = 0; i <= b.degree(); ++i) {
                rem[static_cast<std::size_t>(k + i)] = rem[static_cast<std::size_t>(k + i)] - q * b.c_[static_cast<std::size_t>(i)];
            }
        }
        return {UPoly(std::move(quot)), UPoly(std::move(rem))};
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(scalar_traits<T>::one(c_.back()) / c_.back());
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<T> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            r.push_back(c_[i] * scalar_traits<T>::from_int(static_cast<long>(i), c_[i]));
        }
        return UPoly(std::move(r));
    }

private:
    void normalize() {
        while (!c_.empty() && scalar_traits<T>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <typename T>
UPoly<T> upoly_gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// a^e mod m by binary exponentiation.
template <typename T, typename BigExp>
UPoly<T> upoly_powmod(UPoly<T> a, BigExp e, const UPoly<T>& m) {
    if (m.degree() < 1) throw std::domain_error("upoly_powmod: modulus must have positive degree");
    const T like = m.leading();
    UPoly<T> r = UPoly<T>::constant(scalar_traits<T>::one(like));
    a = a % m;
    while (e != 0) {
        if ((e & 1) != 0) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace q3fold

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "q3fold/rational.hpp"

namespace q3fold {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Element of the prime field F_p. Carries its modulus; mixing moduli throws.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    static Fp of(long long value, std::uint64_t prime) {
        long long r = value % static_cast<long long>(prime);
        if (r < 0) r += static_cast<long long>(prime);
        return Fp(static_cast<std::uint64_t>(r), prime);
    }

    friend void check_same_field(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p) + " and " + std::to_string(b.p));
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp(s, a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
        return Fp(s, a.p);
    }
    friend Fp operator-(const Fp& a) { return Fp(a.v == 0 ? 0 : a.p - a.v, a.p); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return Fp(detail::mulmod_u64(a.v, b.v, a.p), a.p);
    }
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: division by zero");
        // Fermat: p is prime by construction of the field.
        return Fp(detail::powmod_u64(v, p - 2, p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return a * b.inv();
    }
    friend bool operator==(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

/// The field F_p itself; validates primality once and mints elements.
class FpField {
public:
    explicit FpField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FpField: " + std::to_string(p) + " is not prime");
    }
    std::uint64_t modulus() const { return p_; }
    Fp elem(long long v) const { return Fp::of(v, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

private:
    std::uint64_t p_;
};

template <>
struct scalar_traits<Fp> {
    static constexpr bool is_field = true;
    static Fp zero(const Fp& like) { return Fp(0, like.p); }
    static Fp one(const Fp& like) { return Fp(1, like.p); }
    static Fp from_int(long v, const Fp& like) { return Fp::of(v, like.p); }
    static bool is_zero(const Fp& x) { return x.v == 0; }
    static std::string str(const Fp& x) { return std::to_string(x.v); }
};

}  // namespace q3fold

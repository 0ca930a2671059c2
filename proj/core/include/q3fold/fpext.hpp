#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "q3fold/fp.hpp"
#include "q3fold/rng.hpp"
#include "q3fold/upoly.hpp"

namespace q3fold {

class FpExtField;

/// Element of an extension field F_{p^k}, represented as a residue modulo a
/// fixed irreducible polynomial. Elements carry their field handle.
struct FExt {
    std::shared_ptr<const FpExtField> F;
    UPoly<Fp> r;

    friend FExt operator+(const FExt& a, const FExt& b);
    friend FExt operator-(const FExt& a, const FExt& b);
    friend FExt operator-(const FExt& a);
    friend FExt operator*(const FExt& a, const FExt& b);
    friend FExt operator/(const FExt& a, const FExt& b);
    friend bool operator==(const FExt& a, const FExt& b);
    friend bool operator!=(const FExt& a, const FExt& b) { return !(a == b); }
    FExt inv() const;
    bool is_zero() const { return r.is_zero(); }
};

/// F_{p^k} = F_p[x]/(m) for a deterministic irreducible m of degree k.
class FpExtField : public std::enable_shared_from_this<FpExtField> {
public:
    static std::shared_ptr<const FpExtField> make(std::uint64_t p, int k);

    std::uint64_t p() const { return p_; }
    int k() const { return k_; }
    const UPoly<Fp>& modulus() const { return mod_; }

    FExt embed(Fp a) const {
        if (a.p != p_) throw std::invalid_argument("FpExtField::embed: wrong characteristic");
        return FExt{shared_from_this(), UPoly<Fp>(std::vector<Fp>{a})};
    }
    FExt from_int(long v) const { return embed(Fp::of(v, p_)); }
    FExt zero() const { return FExt{shared_from_this(), UPoly<Fp>()}; }
    FExt one() const { return from_int(1); }
    FExt generator() const { return FExt{shared_from_this(), UPoly<Fp>::x(Fp(0, p_))}; }

    FExt reduce(const UPoly<Fp>& u) const { return FExt{shared_from_this(), u % mod_}; }

    /// Field order p^k as a multi-limb exponent is unnecessary at desk scale;
    /// callers get it as unsigned 128-bit.
    unsigned __int128 order() const {
        unsigned __int128 n = 1;
        for (int i = 0; i < k_; ++i) n *= p_;
        return n;
    }

    bool same(const FpExtField& o) const { return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_; }

private:
    FpExtField(std::uint64_t p, int k, UPoly<Fp> mod) : p_(p), k_(k), mod_(std::move(mod)) {}

    std::uint64_t p_;
    int k_;
    UPoly<Fp> mod_;
};

inline void check_same_ext(const FExt& a, const FExt& b) {
    if (!a.F || !b.F) throw std::invalid_argument("FExt: missing field handle");
    if (a.F.get() != b.F.get() && !a.F->same(*b.F)) throw std::invalid_argument("FExt: mixed extension fields");
}

inline FExt operator+(const FExt& a, const FExt& b) {
    check_same_ext(a, b);
    return FExt{a.F, a.r + b.r};
}
inline FExt operator-(const FExt& a, const FExt& b) {
    check_same_ext(a, b);
    return FExt{a.F, a.r - b.r};
}
inline FExt operator-(const FExt& a) { return FExt{a.F, -a.r}; }
inline FExt operator*(const FExt& a, const FExt& b) {
    check_same_ext(a, b);
    return FExt{a.F, (a.r * b.r) % a.F->modulus()};
}

inline FExt FExt::inv() const {
    if (r.is_zero()) throw std::domain_error("FExt: division by zero");
    // Extended Euclid on (r, modulus).
    UPoly<Fp> a = r, b = F->modulus();
    const Fp one_c(1, F->p());
    UPoly<Fp> s0 = UPoly<Fp>::constant(one_c), s1;
    while (!b.is_zero()) {
        auto [q, rem] = divmod(a, b);
        a = b;
        b = rem;
        UPoly<Fp> s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    // a = gcd = unit scalar (modulus irreducible, r nonzero of lower degree)
    if (a.degree() != 0) throw std::logic_error("FExt::inv: modulus not irreducible?");
    const Fp scale = one_c / a.leading();
    return FExt{F, s0.scaled(scale) % F->modulus()};
}

inline FExt operator/(const FExt& a, const FExt& b) {
    check_same_ext(a, b);
    return a * b.inv();
}
inline bool operator==(const FExt& a, const FExt& b) {
    check_same_ext(a, b);
    return a.r == b.r;
}

template <>
struct scalar_traits<FExt> {
    static constexpr bool is_field = true;
    static FExt zero(const FExt& like) { return like.F->zero(); }
    static FExt one(const FExt& like) { return like.F->one(); }
    static FExt from_int(long v, const FExt& like) { return like.F->from_int(v); }
    static bool is_zero(const FExt& x) { return x.is_zero(); }
    static std::string str(const FExt& x) {
        std::string out = "[";
        for (int i = 0; i < x.F->k(); ++i) {
            if (i) out += ",";
            out += (i <= x.r.degree()) ? std::to_string(x.r[static_cast<std::size_t>(i)].v) : "0";
        }
        return out + "]";
    }
};

namespace detail {

inline UPoly<Fp> frobenius_power(const UPoly<Fp>& base, std::uint64_t p, int times, const UPoly<Fp>& mod) {
    UPoly<Fp> x = base;
    for (int i = 0; i < times; ++i) x = upoly_powmod(x, p, mod);
    return x;
}

}  // namespace detail

/// Deterministic irreducibility test: x^(p^k) == x (mod f) and
/// gcd(x^(p^(k/q)) - x, f) = 1 for every prime q | k.
inline bool upoly_is_irreducible(const UPoly<Fp>& f, std::uint64_t p) {
    const int k = static_cast<int>(f.degree());
    if (k < 1) return false;
    const UPoly<Fp> x = UPoly<Fp>::x(Fp(0, p));
    if (!(detail::frobenius_power(x, p, k, f) == x % f)) return false;
    for (int q : {2, 3, 5}) {
        if (k % q != 0) continue;
        UPoly<Fp> g = detail::frobenius_power(x, p, k / q, f) - x;
        if (upoly_gcd(g, f).degree() != 0) return false;
    }
    return true;
}

inline std::shared_ptr<const FpExtField> FpExtField::make(std::uint64_t p, int k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FpExtField: characteristic not prime");
    if (k < 1 || k > 12) throw std::invalid_argument("FpExtField: degree out of range");
    if (k == 1) {
        UPoly<Fp> m(std::vector<Fp>{Fp(0, p), Fp(1, p)});
        return std::shared_ptr<const FpExtField>(new FpExtField(p, 1, std::move(m)));
    }
    // Deterministic search for a monic irreducible of degree k.
    CounterRng rng(0x9c7f11e5u ^ p ^ (static_cast<std::uint64_t>(k) << 32));
    for (std::uint64_t trial = 0;; ++trial) {
        std::vector<Fp> c(static_cast<std::size_t>(k + 1), Fp(0, p));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = Fp(rng.below(trial * 16 + static_cast<std::uint64_t>(i), p), p);
        c[static_cast<std::size_t>(k)] = Fp(1, p);
        UPoly<Fp> f(std::move(c));
        if (f.degree() == k && upoly_is_irreducible(f, p)) {
            return std::shared_ptr<const FpExtField>(new FpExtField(p, k, std::move(f)));
        }
        if (trial > 4096) throw std::runtime_error("FpExtField: irreducible search exhausted");
    }
}

/// All roots of f lying in the coefficient field, by repeated gcd with
/// x^|K| - x and seeded Cantor-Zassenhaus splitting. Multiplicities ignored.
inline std::vector<FExt> roots_in_field(const UPoly<FExt>& f, std::uint64_t cz_seed = 0x1234abcdu) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
    const auto F = f.leading().F;
    std::vector<FExt> out;
    if (f.degree() == 0) return out;
    // Restrict to the product of distinct linear factors over K.
    const unsigned __int128 q = F->order();
    UPoly<FExt> x = UPoly<FExt>::x(F->zero());
    UPoly<FExt> xq = upoly_powmod(x, q, f.monic());
    UPoly<FExt> lin = upoly_gcd(xq - x, f.monic());
    RngStream rng(cz_seed ^ F->p());
    // Split lin into linear factors.
    std::vector<UPoly<FExt>> stack{lin};
    while (!stack.empty()) {
        UPoly<FExt> g = stack.back();
        stack.pop_back();
        if (g.degree() <= 0) continue;
        if (g.degree() == 1) {
            // root of c1 x + c0
            out.push_back(-(g[0] / g[1]));
            continue;
        }
        // Random a: gcd((x+a)^((q-1)/2) - 1, g) splits g with probability ~1/2.
        std::vector<Fp> coeffs;
        for (int i = 0; i < F->k(); ++i) coeffs.push_back(Fp(rng.below(F->p()), F->p()));
        FExt a = F->reduce(UPoly<Fp>(std::move(coeffs)));
        UPoly<FExt> shifted(std::vector<FExt>{a, F->one()});
        UPoly<FExt> h = upoly_powmod(shifted, (q - 1) / 2, g) - UPoly<FExt>::constant(F->one());
        UPoly<FExt> d = upoly_gcd(h, g);
        if (d.degree() <= 0 || d.degree() == g.degree()) {
            stack.push_back(g);  // unlucky split, retry with fresh randomness
        } else {
            stack.push_back(d);
            stack.push_back(g / d);
        }
    }
    return out;
}

}  // namespace q3fold

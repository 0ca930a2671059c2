#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "q3fold/rational.hpp"

namespace q3fold {

using Expo = std::vector<std::uint32_t>;

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// lexicographic. Fixed once so that printing and equality are canonical.
struct GrLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        std::uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with exact coefficients. No zero terms are
/// ever stored; equality is term-map equality.
template <typename T>
class MPoly {
public:
    using TermMap = std::map<Expo, T, GrLexLess>;

    explicit MPoly(int arity) : arity_(arity) {}

    static MPoly zero(int arity) { return MPoly(arity); }

    static MPoly constant(int arity, const T& c) {
        MPoly p(arity);
        p.add_term(Expo(static_cast<std::size_t>(arity), 0), c);
        return p;
    }

    /// The monomial c * x_i.
    static MPoly variable(int arity, int i, const T& c) {
        if (i < 0 || i >= arity) throw std::out_of_range("MPoly::variable: index");
        MPoly p(arity);
        Expo e(static_cast<std::size_t>(arity), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, c);
        return p;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const {
        if (terms_.empty()) return -1;
        std::uint64_t d = 0;
        for (auto e : terms_.rbegin()->first) d += e;
        return static_cast<long>(d);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (auto x : e) t += x;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    std::optional<T> coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        if (it == terms_.end()) return std::nullopt;
        return it->second;
    }

    void add_term(const Expo& e, const T& c) {
        if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("MPoly::add_term: exponent arity");
        if (scalar_traits<T>::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (scalar_traits<T>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_compatible(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.arity_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_compatible(a, b);
        MPoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly scaled(const T& c) const {
        MPoly r(arity_);
        if (scalar_traits<T>::is_zero(c)) return r;
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }

    MPoly pow(unsigned n) const {
        if (n == 0) {
            if (terms_.empty()) throw std::domain_error("MPoly::pow: 0^0 with no unit context");
            return constant(arity_, scalar_traits<T>::one(terms_.begin()->second));
        }
        MPoly r = *this;
        for (unsigned i = 1; i < n; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Pointwise evaluation. The point also supplies the scalar context, so it
    /// must be nonempty; constants with arity 0 are not used in this project.
    T eval(std::span<const T> point) const {
        if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("MPoly::eval: point arity");
        if (arity_ == 0) throw std::invalid_argument("MPoly::eval: arity 0");
        T acc = scalar_traits<T>::zero(point[0]);
        for (const auto& [e, c] : terms_) {
            T term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::uint32_t k = 0; k < e[i]; ++k) term = term * point[i];
            }
            acc = acc + term;
        }
        return acc;
    }

    T eval(const std::vector<T>& point) const { return eval(std::span<const T>(point)); }

    /// Substitute images[i] for variable i and expand. All images must share
    /// one arity, which becomes the arity of the result.
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (static_cast<int>(images.size()) != arity_) throw std::invalid_argument("MPoly::substitute: image count");
        int out_arity = images.empty() ? 0 : images[0].arity();
        for (const auto& im : images) {
            if (im.arity() != out_arity) throw std::invalid_argument("MPoly::substitute: image arity mismatch");
        }
        // Memoize powers of each image as needed.
        std::vector<std::vector<MPoly>> powers(images.size());
        auto power = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MPoly(out_arity));  // placeholder for k = 0, unused
            while (cache.size() <= k) {
                if (cache.size() == 1) cache.push_back(images[i]);
                else cache.push_back(cache.back() * images[i]);
            }
            return cache[k];
        };
        MPoly r(out_arity);
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(out_arity, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] > 0) term = term * power(i, e[i]);
            }
            r = r + term;
        }
        return r;
    }

    /// Render with the given variable names, graded-lex from the top.
    std::string str(const std::vector<std::string>& names) const {
        if (static_cast<int>(names.size()) != arity_) throw std::invalid_argument("MPoly::str: name count");
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = scalar_traits<T>::str(it->second);
            bool negative = !c.empty() && c[0] == '-';
            if (first) {
                if (negative) { os << '-'; c = c.substr(1); }
            } else {
                os << (negative ? " - " : " + ");
                if (negative) c = c.substr(1);
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                std::uint32_t e = it->first[i];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                os << c;
            } else if (c == "1") {
                os << mono;
            } else {
                os << c << "*" << mono;
            }
        }
        return os.str();
    }

private:
    static void check_compatible(const MPoly& a, const MPoly& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("MPoly: arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

/// Decide p == c*q term by term and return c. Returns nothing when supports
/// differ, ratios disagree, or exactly one side is zero. Both sides zero is
/// ambiguous and throws.
template <typename T>
std::optional<T> poly_proportionality(const MPoly<T>& p, const MPoly<T>& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("poly_proportionality: arity mismatch");
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_proportionality: both inputs zero");
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.term_count() != q.term_count()) return std::nullopt;
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    std::optional<T> c;
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (ip->first != iq->first) return std::nullopt;
        T ratio = ip->second / iq->second;
        if (!c) c = ratio;
        else if (!(*c == ratio)) return std::nullopt;
    }
    return c;
}

}  // namespace q3fold

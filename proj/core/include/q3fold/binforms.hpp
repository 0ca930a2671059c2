#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "q3fold/matrix.hpp"
#include "q3fold/rational.hpp"
#include "q3fold/upoly.hpp"

namespace q3fold {

/// Homogeneous binary form of fixed degree in (s, t). coeffs[j] is the
/// coefficient of s^(deg-j) t^j. The zero form of any degree is allowed and
/// absorbs into sums of other degrees.
template <typename T>
class BinForm {
public:
    BinForm(int deg, const T& like)
        : deg_(deg), c_(static_cast<std::size_t>(deg + 1), scalar_traits<T>::zero(like)) {
        if (deg < 0) throw std::invalid_argument("BinForm: negative degree");
    }
    BinForm(int deg, std::vector<T> coeffs) : deg_(deg), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != deg + 1) throw std::invalid_argument("BinForm: coefficient count");
    }

    int deg() const { return deg_; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t j) const { return c_[j]; }
    T& operator[](std::size_t j) { return c_[j]; }

    bool is_zero() const {
        for (const auto& x : c_) {
            if (!scalar_traits<T>::is_zero(x)) return false;
        }
        return true;
    }

    const T& context() const { return c_[0]; }

    friend BinForm operator+(const BinForm& a, const BinForm& b) {
        if (a.is_zero() && a.deg_ != b.deg_) return b;
        if (b.is_zero() && a.deg_ != b.deg_) return a;
        if (a.deg_ != b.deg_) throw std::invalid_argument("BinForm: degree mismatch in sum");
        BinForm r = a;
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = r.c_[j] + b.c_[j];
        return r;
    }

    friend BinForm operator-(const BinForm& a) {
        BinForm r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend BinForm operator-(const BinForm& a, const BinForm& b) { return a + (-b); }

    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        BinForm r(a.deg_ + b.deg_, a.context());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_traits<T>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    BinForm scaled(const T& s) const {
        BinForm r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const BinForm& a, const BinForm& b) {
        if (a.deg_ != b.deg_) return a.is_zero() && b.is_zero();
        for (std::size_t j = 0; j < a.c_.size(); ++j)
            if (!(a.c_[j] == b.c_[j])) return false;
        return true;
    }

    T eval(const T& s, const T& t) const {
        // Horner in two stages: powers of s descending, t ascending.
        T acc = scalar_traits<T>::zero(s);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            T term = c_[j];
            for (int k = 0; k < deg_ - static_cast<int>(j); ++k) term = term * s;
            for (std::size_t k = 0; k < j; ++k) term = term * t;
            acc = acc + term;
        }
        return acc;
    }

    BinForm derivative_s() const {
        if (deg_ == 0) return BinForm(0, context());
        BinForm r(deg_ - 1, context());
        for (int j = 0; j < deg_; ++j) {
            r.c_[static_cast<std::size_t>(j)] =
                c_[static_cast<std::size_t>(j)] * scalar_traits<T>::from_int(deg_ - j, context());
        }
        return r;
    }

    BinForm derivative_t() const {
        if (deg_ == 0) return BinForm(0, context());
        BinForm r(deg_ - 1, context());
        for (int j = 1; j <= deg_; ++j) {
            r.c_[static_cast<std::size_t>(j - 1)] =
                c_[static_cast<std::size_t>(j)] * scalar_traits<T>::from_int(j, context());
        }
        return r;
    }

    /// Substitute (s, t) -> (a s + b t, c s + d t).
    BinForm substituted(const T& a, const T& b, const T& c, const T& d) const {
        BinForm r(deg_, context());
        BinForm ls(1, std::vector<T>{a, b});
        BinForm lt(1, std::vector<T>{c, d});
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (scalar_traits<T>::is_zero(c_[j])) continue;
            BinForm term(0, std::vector<T>{c_[j]});
            for (int k = 0; k < deg_ - static_cast<int>(j); ++k) term = term * ls;
            for (std::size_t k = 0; k < j; ++k) term = term * lt;
            r = r + term;
        }
        return r;
    }

    /// Multiplicity of the root [1:0], i.e. the exponent of the t factor.
    int t_multiplicity() const {
        int m = 0;
        while (m <= deg_ && scalar_traits<T>::is_zero(c_[static_cast<std::size_t>(m)])) ++m;
        return m;  // deg+1 for the zero form
    }

    /// Dehomogenization f(x, 1) as a univariate polynomial (degree drops by
    /// the t-multiplicity).
    UPoly<T> dehomogenized() const {
        std::vector<T> u(c_.rbegin(), c_.rend());  // u[i] = coeff of x^i = c[deg-i]
        return UPoly<T>(std::move(u));
    }

    /// Inverse of dehomogenized: binary form of the given degree with
    /// f(x,1) = u, absorbing the degree surplus into t powers.
    static BinForm homogenized(const UPoly<T>& u, int deg, const T& like) {
        if (u.degree() > deg) throw std::invalid_argument("BinForm::homogenized: degree too small");
        BinForm r(deg, like);
        for (long i = 0; i <= u.degree(); ++i) {
            r.c_[static_cast<std::size_t>(deg - i)] = u[static_cast<std::size_t>(i)];
        }
        return r;
    }

    std::string str(const std::string& s = "s", const std::string& t = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (scalar_traits<T>::is_zero(c_[j])) continue;
            std::string coeff = scalar_traits<T>::str(c_[j]);
            bool neg = !coeff.empty() && coeff[0] == '-';
            if (out.empty()) {
                if (neg) { out += "-"; coeff = coeff.substr(1); }
            } else {
                out += neg ? " - " : " + ";
                if (neg) coeff = coeff.substr(1);
            }
            std::string mono;
            int es = deg_ - static_cast<int>(j);
            int et = static_cast<int>(j);
            if (es > 0) mono += s + (es > 1 ? "^" + std::to_string(es) : "");
            if (et > 0) {
                if (!mono.empty()) mono += "*";
                mono += t + (et > 1 ? "^" + std::to_string(et) : "");
            }
            if (mono.empty()) out += coeff;
            else if (coeff == "1") out += mono;
            else out += coeff + "*" + mono;
        }
        return out;
    }

private:
    int deg_;
    std::vector<T> c_;
};

template <typename S>
struct scalar_traits<BinForm<S>> {
    static constexpr bool is_field = false;
    static BinForm<S> zero(const BinForm<S>& like) { return BinForm<S>(like.deg(), like.context()); }
    static BinForm<S> one(const BinForm<S>& like) {
        return BinForm<S>(0, std::vector<S>{scalar_traits<S>::one(like.context())});
    }
    static BinForm<S> from_int(long v, const BinForm<S>& like) {
        return BinForm<S>(0, std::vector<S>{scalar_traits<S>::from_int(v, like.context())});
    }
    static bool is_zero(const BinForm<S>& x) { return x.is_zero(); }
    static std::string str(const BinForm<S>& x) { return x.str(); }
};

/// Gcd of two binary forms: common t-power times the homogenized univariate
/// gcd of the dehomogenizations. Monic normalization.
template <typename T>
BinForm<T> binform_gcd(const BinForm<T>& f, const BinForm<T>& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const int tm = std::min(f.t_multiplicity(), g.t_multiplicity());
    UPoly<T> u = upoly_gcd(f.dehomogenized(), g.dehomogenized());
    return BinForm<T>::homogenized(u, static_cast<int>(u.degree()) + tm, f.context());
}

/// Exact division f / g; throws if not divisible.
template <typename T>
BinForm<T> binform_exact_div(const BinForm<T>& f, const BinForm<T>& g) {
    if (g.is_zero()) throw std::domain_error("binform_exact_div: division by zero form");
    if (f.is_zero()) return BinForm<T>(0, f.context());
    const int tf = f.t_multiplicity(), tg = g.t_multiplicity();
    if (tf < tg) throw std::domain_error("binform_exact_div: not divisible (t factor)");
    auto [q, r] = divmod(f.dehomogenized(), g.dehomogenized());
    if (!r.is_zero()) throw std::domain_error("binform_exact_div: not divisible");
    return BinForm<T>::homogenized(q, f.deg() - g.deg(), f.context());
}

/// Sylvester matrix of two binary forms with their declared degrees.
template <typename T>
Mat<T> sylvester_matrix(const BinForm<T>& f, const BinForm<T>& g) {
    const int m = f.deg(), n = g.deg();
    const T z = scalar_traits<T>::zero(f.context());
    Mat<T> s(m + n, m + n, z);
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j <= m; ++j) s.at(row, row + j) = f[static_cast<std::size_t>(j)];
    }
    for (int row = 0; row < m; ++row) {
        for (int j = 0; j <= n; ++j) s.at(n + row, row + j) = g[static_cast<std::size_t>(j)];
    }
    return s;
}

/// Resultant of two binary forms (determinant of the Sylvester matrix of the
/// declared degrees). For field scalars the exact eliminations apply; ring
/// scalars (e.g. forms of forms) go through division-free Laplace expansion.
template <typename T>
T binform_resultant(const BinForm<T>& f, const BinForm<T>& g) {
    if (f.deg() + g.deg() == 0) return scalar_traits<T>::one(f.context());
    Mat<T> s = sylvester_matrix(f, g);
    if constexpr (scalar_traits<T>::is_field) {
        if (s.rows() <= 6) return mat_det(s);
        return detail::det_bareiss(s);
    } else {
        return det_laplace(s);
    }
}

/// Discriminant of a binary form of degree 2 or 3, up to the conventional
/// normalization: zero iff the form has a repeated projective root. Computed
/// as Res(f, df/ds)/lc after a unimodular shear making the s-leading
/// coefficient nonzero; the shear leaves the vanishing verdict unchanged.
template <typename T>
T binform_discriminant(const BinForm<T>& f) {
    const int d = f.deg();
    if (d != 2 && d != 3) throw std::invalid_argument("binform_discriminant: degree must be 2 or 3");
    if (f.is_zero()) throw std::invalid_argument("binform_discriminant: zero form");
    const T zero = scalar_traits<T>::zero(f.context());
    const T one = scalar_traits<T>::one(f.context());
    BinForm<T> g = f;
    if (scalar_traits<T>::is_zero(g[0])) {
        // Shear t -> t + k*s until f(1, k) != 0; at most deg+1 tries needed.
        bool done = false;
        for (int k = 1; k <= d + 1; ++k) {
            const T kk = scalar_traits<T>::from_int(k, f.context());
            BinForm<T> cand = f.substituted(one, zero, kk, one);
            if (!scalar_traits<T>::is_zero(cand[0])) { g = cand; done = true; break; }
        }
        if (!done) throw std::domain_error("binform_discriminant: field too small for shear");
    }
    BinForm<T> gs = g.derivative_s();
    if (gs.is_zero()) return zero;  // only in small characteristic; repeated root regardless
    T res = binform_resultant(g, gs);
    return res / g[0];
}

}  // namespace q3fold

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "q3fold/binforms.hpp"
#include "q3fold/fp.hpp"
#include "q3fold/fpext.hpp"
#include "q3fold/matrix.hpp"
#include "q3fold/rational.hpp"

namespace q3fold {

/// Value of the fixed quadric x0 x1 - x2 x3 + x4^2 at a point.
template <typename T>
T quadric_value(const std::array<T, 5>& x) {
    return x[0] * x[1] - x[2] * x[3] + x[4] * x[4];
}

/// Integral polar form: B(x,y) = Q(x+y) - Q(x) - Q(y).
template <typename T>
T quadric_polar(const std::array<T, 5>& x, const std::array<T, 5>& y) {
    return x[0] * y[1] + y[0] * x[1] - x[2] * y[3] - y[2] * x[3] + (x[4] * y[4] + x[4] * y[4]);
}

/// Parametrized twisted cubic on the fixed quadric: five binary cubics whose
/// image lies on the quadric and spans a hyperplane.
template <typename T>
struct CubicParam {
    std::array<BinForm<T>, 5> coords;

    std::array<T, 5> eval(const T& s, const T& t) const {
        return {coords[0].eval(s, t), coords[1].eval(s, t), coords[2].eval(s, t),
                coords[3].eval(s, t), coords[4].eval(s, t)};
    }

    /// The sextic obstruction: identically zero iff the image lies on the
    /// quadric.
    BinForm<T> quadric_pullback() const {
        return coords[0] * coords[1] - coords[2] * coords[3] + coords[4] * coords[4];
    }

    Mat<T> coefficient_matrix() const {
        Mat<T> m(5, 4, scalar_traits<T>::zero(coords[0].context()));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return m;
    }

    bool on_quadric() const { return quadric_pullback().is_zero(); }
    bool spans_hyperplane() const { return mat_rank(coefficient_matrix()) == 4; }

    CubicParam reparametrized(const T& a, const T& b, const T& c, const T& d) const {
        CubicParam out = *this;
        for (auto& f : out.coords) f = f.substituted(a, b, c, d);
        return out;
    }
};

/// Normalized generator of the hyperplane spanned by the curve: the left
/// kernel of the 5x4 coefficient matrix, first nonzero coordinate 1.
template <typename T>
std::array<T, 5> hyperplane_of(const CubicParam<T>& g) {
    auto kernel = mat_left_kernel(g.coefficient_matrix());
    if (kernel.size() != 1) {
        throw std::invalid_argument("hyperplane_of: coefficient rank below 4 (degenerate curve)");
    }
    auto& v = kernel[0];
    const T one = scalar_traits<T>::one(g.coords[0].context());
    T scale = one;
    for (const auto& x : v) {
        if (!scalar_traits<T>::is_zero(x)) { scale = one / x; break; }
    }
    return {v[0] * scale, v[1] * scale, v[2] * scale, v[3] * scale, v[4] * scale};
}

template <typename T>
struct PairConfig {
    CubicParam<T> gamma1, gamma2;
    std::array<T, 5> h1, h2;

    static PairConfig make(CubicParam<T> g1, CubicParam<T> g2) {
        PairConfig pc{std::move(g1), std::move(g2), {}, {}};
        if (!pc.gamma1.on_quadric() || !pc.gamma2.on_quadric()) {
            throw std::invalid_argument("PairConfig: a curve does not lie on the quadric");
        }
        pc.h1 = hyperplane_of(pc.gamma1);
        pc.h2 = hyperplane_of(pc.gamma2);
        return pc;
    }
};

enum class CheckStatus { Pass, Fail, Undetermined };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Undetermined: return "undetermined";
    }
    return "?";
}

struct GeneralityCheck {
    std::string id;           // "i", "ii", "iii", "iv"
    std::string description;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

/// The four generality conditions on a pair of twisted cubics:
///  (i)   both hyperplane sections are smooth quadric surfaces (rank 4),
///  (ii)  the base conic is smooth (rank 3 on the intersection),
///  (iii) each curve meets the other hyperplane transversally in three
///        distinct points and the two curves are disjoint,
///  (iv)  the secant rulings through those points are nowhere tangent to the
///        other curve (checked over a degree-6 splitting extension for prime
///        fields; undetermined over the rationals).
std::vector<GeneralityCheck> check_generality(const PairConfig<Fp>& pc);
std::vector<GeneralityCheck> check_generality(const PairConfig<Rat>& pc);

inline bool generality_passes(const std::vector<GeneralityCheck>& checks) {
    for (const auto& c : checks) {
        if (c.status != CheckStatus::Pass) return false;
    }
    return true;
}

struct PairSearchResult {
    PairConfig<Fp> pair;
    std::uint64_t trials = 0;
};

/// Seeded rejection sampling for a pair passing (i)-(iv): sample a smooth
/// split hyperplane section, parametrize a curve of type (1,2) on it through
/// a point projection, and repeat for the second curve. Deterministic given
/// the seed. Throws when the trial budget is exhausted.
PairSearchResult random_general_pair(std::uint64_t p, std::uint64_t seed, std::uint64_t budget = 2000);

struct ModuliDimension {
    int hyperplane_pencil = 4;      // hyperplane sections through a fixed ruling datum
    int linear_system = 5;          // curves of type (1,2) on the fixed surface
    int dim_hilb3 = 9;              // 4 + 5
    int dim_aut = 10;               // the special orthogonal group of the quadric
    int total = 8;                  // 2*9 - 10
    int alternative_hilb3 = 11;     // projectivized rank-6 bundle count
    std::string note;
};

/// The dimension bookkeeping for the moduli count 2*9 - 10 = 8, with the
/// recorded discrepancy against the projectivized-bundle count.
ModuliDimension moduli_dimension();

/// Cubic-pair input file: header "prime p" or "rationals", then ten lines of
/// four integers (coefficients of s^3, s^2 t, s t^2, t^3 for the five
/// coordinates of each curve).
struct PairFile {
    std::optional<std::uint64_t> prime;
    std::array<std::array<long long, 4>, 10> coeffs{};
};

PairFile parse_pair_file(const std::string& text);
std::string pair_file_text(const PairFile& f);
PairFile pair_file_of(const PairConfig<Fp>& pc, std::uint64_t p);

PairConfig<Fp> pair_from_file_fp(const PairFile& f, std::uint64_t p);
PairConfig<Rat> pair_from_file_rat(const PairFile& f);

}  // namespace q3fold

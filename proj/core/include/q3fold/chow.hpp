#pragma once

#include <string>
#include <vector>

#include "q3fold/rational.hpp"

namespace q3fold {

/// Divisor class on the blow-up W of the ambient threefold, coordinates in
/// the basis (H, E1, E2).
struct Div {
    Rat h, e1, e2;

    friend Div operator+(const Div& a, const Div& b) { return {a.h + b.h, a.e1 + b.e1, a.e2 + b.e2}; }
    friend Div operator-(const Div& a, const Div& b) { return {a.h - b.h, a.e1 - b.e1, a.e2 - b.e2}; }
    friend Div operator*(const Rat& s, const Div& a) { return {s * a.h, s * a.e1, s * a.e2}; }
    friend bool operator==(const Div& a, const Div& b) { return a.h == b.h && a.e1 == b.e1 && a.e2 == b.e2; }
    std::string str() const;
};

/// Curve class on W, coordinates in the basis (h, f1, f2).
struct Cur {
    Rat h, f1, f2;

    friend Cur operator+(const Cur& a, const Cur& b) { return {a.h + b.h, a.f1 + b.f1, a.f2 + b.f2}; }
    friend Cur operator-(const Cur& a, const Cur& b) { return {a.h - b.h, a.f1 - b.f1, a.f2 - b.f2}; }
    friend Cur operator*(const Rat& s, const Cur& a) { return {s * a.h, s * a.f1, s * a.f2}; }
    friend bool operator==(const Cur& a, const Cur& b) { return a.h == b.h && a.f1 == b.f1 && a.f2 == b.f2; }
    std::string str() const;
};

/// Numerical Chow data of the blow-up of a threefold of degree H^3 along two
/// disjoint smooth rational curves. The triple-product tensor is determined
/// by the ambient degree, the canonical coefficient kappa (K = kappa*H) and
/// the curve degrees/genera:
///   H^2 Ei = 0,  H Ei^2 = -d_i,  Ei^3 = 2 - 2g_i + kappa d_i,
/// mixed products of distinct exceptionals vanish.
struct BlowupModel {
    Rat ambient_degree = Rat(2);
    Rat kappa = Rat(-3);
    struct CurveData { Rat degree; Rat genus; };
    std::vector<CurveData> curves{{Rat(3), Rat(0)}, {Rat(3), Rat(0)}};
    bool disjoint = true;

    static BlowupModel default_genus8();

    Rat e_cubed(int i) const;
    Rat h_e_squared(int i) const;
    /// deg N_{curve/ambient} = 2g - 2 - kappa*d (= -Ei^3).
    Rat normal_bundle_degree(int i) const;
    Div minus_canonical() const { return {-kappa, Rat(-1), Rat(-1)}; }
};

/// Exact symmetric trilinear product of divisor classes.
Rat triple_product(const BlowupModel& m, const Div& d1, const Div& d2, const Div& d3);

/// Divisor-curve pairing: H.h = 1, H.fi = 0, Ei.h = 0, Ei.fj = -delta_ij.
Rat pair(const BlowupModel& m, const Div& d, const Cur& c);

/// Cube of the strict transform after flopping the listed K-trivial curves:
/// D^3 - sum (D.c)^3. Throws if a listed class is not K-trivial.
Rat flop_cubed_correction(const BlowupModel& m, const Div& d, const std::vector<Cur>& flopped);

struct NumerologyCheck {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// The full numeric chain of the construction: exceptional cubes, the
/// anticanonical cube, K-triviality of the seven flopping curves, the conic
/// decomposition, the big divisor cube before and after the flops, the
/// eighth of the post-flop cube, the linear identities and the post-flop
/// pairings.
std::vector<NumerologyCheck> verify_construction_numerology(const BlowupModel& m);

}  // namespace q3fold

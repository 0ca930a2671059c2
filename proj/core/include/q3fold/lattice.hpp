#pragma once

#include <string>
#include <vector>

#include "q3fold/matrix.hpp"
#include "q3fold/rational.hpp"

namespace q3fold {

/// Integer divisor class on a surface lattice, coordinates over the basis.
struct LatClass {
    std::vector<Int> coords;

    friend LatClass operator+(const LatClass& a, const LatClass& b);
    friend LatClass operator-(const LatClass& a, const LatClass& b);
    friend LatClass operator*(const Int& s, const LatClass& a);
    friend bool operator==(const LatClass& a, const LatClass& b) { return a.coords == b.coords; }
    bool is_zero() const;
    std::string str(const std::vector<std::string>& basis) const;
};

/// Picard lattice of a surface: labeled basis, integer Gram matrix and the
/// canonical class.
struct Lattice {
    std::vector<std::string> basis;
    std::vector<std::vector<Int>> gram;
    LatClass canonical;

    int rank() const { return static_cast<int>(basis.size()); }
    Int dot(const LatClass& a, const LatClass& b) const;
    Mat<Rat> gram_rational() const;

    /// Bl_3 (P1 x P1): basis (l1, l2, e1, e2, e3), K = -2l1 - 2l2 + e1 + e2 + e3.
    static Lattice quadric_surface();
    static Lattice p2();
};

LatClass lat_class(std::vector<long> v);

/// Append r exceptional classes: ei^2 = -1, orthogonal to everything else;
/// K picks up + sum ei.
Lattice blow_up_lattice(const Lattice& l, int r);

/// c^2 = -1 and K.c = -1.
bool is_minus_one_curve(const Lattice& l, const LatClass& c);

/// The polarization of the contraction of the given (-1)-classes: the unique
/// integral class h with h.c = 0 for all contracted c, h^2 = 1 and K.h = -3.
/// Throws when the data does not contract to the projective plane.
LatClass contraction_polarization(const Lattice& l, const std::vector<LatClass>& contracted);

struct PushforwardReport {
    Int degree;
    std::vector<Int> multiplicities;
};

/// Degree c.h and multiplicities c.c_i at the contracted centers.
PushforwardReport pushforward_report(const Lattice& l, const LatClass& c, const LatClass& h,
                                     const std::vector<LatClass>& contracted);

struct SurfaceCheck {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// The surface side of the construction on the strict transform of a
/// hyperplane quadric: blow up the three points, contract the three rulings
/// through them together with the strict transform of the base conic, land
/// on P^2, and verify the pushforward degrees, the canonical discrepancy
/// identity and the restriction chain.
std::vector<SurfaceCheck> verify_surface_claims();

}  // namespace q3fold

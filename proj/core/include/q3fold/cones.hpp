#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q3fold/chow.hpp"
#include "q3fold/rational.hpp"

namespace q3fold {

/// Rational polyhedral cone given by generators.
struct Cone {
    int dim = 0;
    std::vector<std::vector<Rat>> generators;

    static Cone of(int dim, std::vector<std::vector<Rat>> gens);
};

/// Exact nonnegative-combination certificate; recombines to the query.
struct DecompositionWitness {
    std::vector<Rat> coefficients;
};

struct MembershipResult {
    std::optional<DecompositionWitness> witness;
    /// When not a member: w with w.gen >= 0 for every generator and
    /// w.target < 0.
    std::optional<std::vector<Rat>> separator;
    bool member() const { return witness.has_value(); }
};

/// Exact LP membership test with certificate either way.
MembershipResult cone_member(const Cone& k, const std::vector<Rat>& v);

/// Indices of generators that are not in the cone of the others; verified to
/// generate the same cone.
std::vector<std::size_t> extremal_ray_indices(const Cone& k);

struct NefReport {
    bool nef = false;
    std::vector<Rat> pairings;
};

/// Pair a divisor against every generator of a cone of curve classes.
NefReport is_nef(const BlowupModel& m, const Div& d, const std::vector<Cur>& rays);

/// The cone of curves of the blow-up: the six listed generators
/// h1, h2, f1, f2, h-2f1-f2, h-f1-2f2 (h_i = 3h - 4f_i).
const std::vector<Cur>& mori_generators();
const std::vector<std::string>& mori_generator_names();
Cone mori_cone();

/// The effective cone generators E1, E2, H-E1, H-E2.
const std::vector<Div>& eff_generators();
const std::vector<std::string>& eff_generator_names();
Cone eff_cone();

/// Decomposition of an integral curve class over the six generators,
/// following the constructive case split: fiber/section multiples pass
/// through, the base-conic multiples split into the two secant classes, the
/// m_i <= d case uses the displayed three-term expansion with the two
/// rewritings, and remaining curve-on-quadric cases fall back to the exact
/// LP. Throws for classes outside every case.
DecompositionWitness mori_decompose(const Cur& c);

/// Decomposition of an integral divisor class dH - m1 E1 - m2 E2 (d >= 0)
/// over {E1, E2, H-E1, H-E2}: strict-transform peeling while d - 2 m_i < 0,
/// then the doubled-and-halved explicit combination.
DecompositionWitness eff_decompose(const Div& d);

/// Facet description {c : c.x >= 0} of the cone by Fourier-Motzkin
/// elimination with exact redundancy pruning; desk scale only.
std::vector<std::vector<Rat>> dual_inequalities(const Cone& k);

std::vector<Rat> cur_vec(const Cur& c);
std::vector<Rat> div_vec(const Div& d);

}  // namespace q3fold

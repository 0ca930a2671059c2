#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "q3fold/fp.hpp"
#include "q3fold/matrix.hpp"
#include "q3fold/mpoly.hpp"
#include "q3fold/rational.hpp"

namespace q3fold {

template <typename T>
struct scalar_traits<MPoly<T>> {
    static constexpr bool is_field = false;
    static MPoly<T> zero(const MPoly<T>& like) { return MPoly<T>::zero(like.arity()); }
    static MPoly<T> one(const MPoly<T>& like) {
        return MPoly<T>::constant(like.arity(), scalar_traits<T>::one(T()));
    }
    static MPoly<T> from_int(long v, const MPoly<T>& like) {
        return MPoly<T>::constant(like.arity(), scalar_traits<T>::from_int(v, T()));
    }
    static bool is_zero(const MPoly<T>& x) { return x.is_zero(); }
    static std::string str(const MPoly<T>& x) {
        std::vector<std::string> names;
        for (int i = 0; i < x.arity(); ++i) names.push_back("v" + std::to_string(i));
        return x.str(names);
    }
};

/// Affine chart of Gr(3,5): the plane in P^4 cut out by
///   x4 = a0 x0 + a1 x1 + a2 x2,   x3 = b0 x0 + b1 x1 + b2 x2.
template <typename T>
struct PlaneChart {
    T a0, a1, a2, b0, b1, b2;

    std::vector<T> as_vector() const { return {a0, a1, a2, b0, b1, b2}; }
};

/// Names for the chart variables in the fixed symbolic order.
inline const std::vector<std::string>& chart_var_names() {
    static const std::vector<std::string> names{"a0", "a1", "a2", "b0", "b1", "b2"};
    return names;
}

/// Symbolic chart whose entries are the six chart variables over Q.
inline PlaneChart<MPoly<Rat>> symbolic_chart() {
    auto v = [](int i) { return MPoly<Rat>::variable(6, i, Rat(1)); };
    return PlaneChart<MPoly<Rat>>{v(0), v(1), v(2), v(3), v(4), v(5)};
}

/// Row-span matrix of the chart plane:
///   [ 1 0 0 b0 a0 ; 0 1 0 b1 a1 ; 0 0 1 b2 a2 ].
template <typename T>
Mat<T> plane_span_matrix(const PlaneChart<T>& c) {
    const T zero = scalar_traits<T>::zero(c.a0);
    const T one = scalar_traits<T>::one(c.a0);
    Mat<T> m(3, 5, zero);
    m.at(0, 0) = one; m.at(0, 3) = c.b0; m.at(0, 4) = c.a0;
    m.at(1, 1) = one; m.at(1, 3) = c.b1; m.at(1, 4) = c.a1;
    m.at(2, 2) = one; m.at(2, 3) = c.b2; m.at(2, 4) = c.a2;
    return m;
}

/// Fixed ordering of column triples whose 3x3 minors of the span matrix give
/// the ten Plucker coordinates, frozen once against the embedding display; a
/// mismatch makes verify_pluecker_convention fail loudly.
struct MinorTriple { int c0, c1, c2; };
inline const std::array<MinorTriple, 10>& pluecker_minor_table() {
    static const std::array<MinorTriple, 10> table{{
        {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
        {1, 2, 3}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4},
    }};
    return table;
}

/// The Plucker embedding of the chart, coordinates in the frozen order:
///   (1, b2, a2, -b1, -a1, b0, a0, b1 a2 - a1 b2, a0 b2 - a2 b0, b0 a1 - a0 b1).
template <typename T>
std::array<T, 10> pluecker_embed(const PlaneChart<T>& c) {
    const T one = scalar_traits<T>::one(c.a0);
    return {
        one,
        c.b2,
        c.a2,
        -c.b1,
        -c.a1,
        c.b0,
        c.a0,
        c.b1 * c.a2 - c.a1 * c.b2,
        c.a0 * c.b2 - c.a2 * c.b0,
        c.b0 * c.a1 - c.a0 * c.b1,
    };
}

/// The same coordinates computed independently as the 3x3 minors of the span
/// matrix in the frozen triple order.
template <typename T>
std::array<T, 10> pluecker_minors(const PlaneChart<T>& c) {
    Mat<T> span = plane_span_matrix(c);
    const T zero = scalar_traits<T>::zero(c.a0);
    std::array<T, 10> out{zero, zero, zero, zero, zero, zero, zero, zero, zero, zero};
    const auto& table = pluecker_minor_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        Mat<T> sub(3, 3, zero);
        const int cols[3] = {table[i].c0, table[i].c1, table[i].c2};
        for (int r = 0; r < 3; ++r)
            for (int j = 0; j < 3; ++j) sub.at(r, j) = span.at(r, cols[j]);
        out[i] = mat_det(sub);
    }
    return out;
}

/// Startup self-check: the symbolic embedding agrees with the frozen minor
/// table entry for entry.
bool verify_pluecker_convention();

/// Gram matrix (symmetric 5x5, rational) of the fixed smooth quadric
///   x0 x1 - x2 x3 + x4^2.
Mat<Rat> default_quadric_form();

/// The same form over F_p.
Mat<Fp> default_quadric_form_mod(std::uint64_t p);

/// Restrict a symmetric quadratic form on P^4 to the chart plane: substitute
/// the two chart equations and collect the symmetric 3x3 matrix in
/// (x0, x1, x2).
template <typename T>
Mat<T> conic_restriction(const PlaneChart<T>& c, const Mat<T>& q) {
    if (q.rows() != 5 || q.cols() != 5) throw std::invalid_argument("conic_restriction: form must be 5x5");
    if (!q.is_symmetric()) throw std::invalid_argument("conic_restriction: form must be symmetric");
    const T zero = scalar_traits<T>::zero(c.a0);
    const T one = scalar_traits<T>::one(c.a0);
    Mat<T> sub(5, 3, zero);  // columns: coordinates on the plane
    sub.at(0, 0) = one;
    sub.at(1, 1) = one;
    sub.at(2, 2) = one;
    sub.at(3, 0) = c.b0; sub.at(3, 1) = c.b1; sub.at(3, 2) = c.b2;
    sub.at(4, 0) = c.a0; sub.at(4, 1) = c.a1; sub.at(4, 2) = c.a2;
    return sub.transposed() * q * sub;
}

/// Symbolic restricted-conic matrix for the default quadric.
Mat<MPoly<Rat>> conic_restriction_symbolic();

/// The frozen display form of the restricted-conic matrix (the (2,2) entry
/// carries the -b2 diagonal contribution of the x2*x3 cross term).
Mat<MPoly<Rat>> conic_matrix_display();

enum class ConicClass { Smooth, LinePair, DoubleLine };

inline const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::Smooth: return "Smooth";
        case ConicClass::LinePair: return "LinePair";
        case ConicClass::DoubleLine: return "DoubleLine";
    }
    return "?";
}

/// Classify a restricted conic by the rank of its symmetric matrix.
template <typename T>
ConicClass conic_classify(const Mat<T>& m) {
    if (m.rows() != 3 || m.cols() != 3 || !m.is_symmetric()) {
        throw std::invalid_argument("conic_classify: need symmetric 3x3");
    }
    switch (mat_rank(m)) {
        case 3: return ConicClass::Smooth;
        case 2: return ConicClass::LinePair;
        case 1: return ConicClass::DoubleLine;
        default: throw std::domain_error("conic_classify: zero matrix (plane contained in the quadric)");
    }
}

/// The degree-5 tangency hypersurface on P^9, loaded from the shipped data
/// text (13 terms, total degree 5) and checksum-verified.
const MPoly<Rat>& fq_quintic();

/// Raw data text of the quintic, exactly as shipped in data/fq_quintic.txt.
const std::string& fq_quintic_text();

/// Parse a quintic data text (header, terms, checksum); throws on mismatch.
MPoly<Rat> parse_quintic_text(const std::string& text);

/// The quintic with coefficients reduced mod p.
MPoly<Fp> fq_quintic_mod(std::uint64_t p);

struct QuinticIdentity {
    std::optional<Rat> constant;    // c with quintic(pl) = c * det
    std::string counterexample;     // first differing monomial when no c exists
    bool pass = false;
};

/// The central polynomial identity: quintic composed with the Plucker
/// embedding is proportional to det of the restricted-conic matrix, as exact
/// polynomials in the six chart variables.
QuinticIdentity verify_quintic_identity();

/// Degree of Gr(k,n) in its Plucker embedding: the number of standard Young
/// tableaux on the k x (n-k) rectangle, by the hook length formula.
Int grassmann_degree(int k, int n);

/// Degree of the tangency divisor: 5 * deg Gr(3,5).
Int deg_fq();

/// Exhaustive standard-tableau count, used as the independent oracle for
/// grassmann_degree in the test suites.
Int count_standard_tableaux_rectangle(int rows, int cols);

struct ConicSampleStats {
    std::uint64_t trials = 0;
    std::uint64_t smooth = 0;
    std::uint64_t line_pair = 0;
    std::uint64_t double_line = 0;
    std::uint64_t det_zero = 0;
    std::uint64_t quintic_zero = 0;
    std::uint64_t disagreements = 0;  // charts with det = 0 xor quintic = 0
};

/// Sample uniform charts over F_p; deterministic given the seed and
/// order-independent across trial indices.
ConicSampleStats sample_conic_statistics(std::uint64_t p, std::uint64_t trials, std::uint64_t seed);

/// Visit all p^6 charts over F_p.
ConicSampleStats exhaustive_conic_census(std::uint64_t p);

}  // namespace q3fold

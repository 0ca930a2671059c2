#include "q3fold/construction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "q3fold/rng.hpp"

namespace q3fold {

namespace {

/// 5x5 integral Gram matrix of twice the quadric (char != 2 keeps ranks).
template <typename T>
Mat<T> gram2_matrix(const T& like) {
    const T zero = scalar_traits<T>::zero(like);
    Mat<T> g(5, 5, zero);
    g.at(0, 1) = scalar_traits<T>::one(like);
    g.at(1, 0) = scalar_traits<T>::one(like);
    g.at(2, 3) = -scalar_traits<T>::one(like);
    g.at(3, 2) = -scalar_traits<T>::one(like);
    g.at(4, 4) = scalar_traits<T>::from_int(2, like);
    return g;
}

/// Rank of the quadric restricted to the common kernel of the given linear
/// forms.
template <typename T>
int restricted_rank(const std::vector<std::array<T, 5>>& forms, const T& like) {
    Mat<T> rows(static_cast<int>(forms.size()), 5, scalar_traits<T>::zero(like));
    for (int r = 0; r < static_cast<int>(forms.size()); ++r)
        for (int c = 0; c < 5; ++c) rows.at(r, c) = forms[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    auto kernel = mat_kernel(rows);
    if (kernel.empty()) return 0;
    Mat<T> basis(5, static_cast<int>(kernel.size()), scalar_traits<T>::zero(like));
    for (int j = 0; j < static_cast<int>(kernel.size()); ++j)
        for (int i = 0; i < 5; ++i) basis.at(i, j) = kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    Mat<T> restricted = basis.transposed() * gram2_matrix(like) * basis;
    return mat_rank(restricted);
}

template <typename T>
BinForm<T> compose_hyperplane(const std::array<T, 5>& h, const CubicParam<T>& g) {
    BinForm<T> acc(3, g.coords[0].context());
    for (std::size_t k = 0; k < 5; ++k) acc = acc + g.coords[k].scaled(h[k]);
    return acc;
}

/// Bidegree (3,3) minor gamma1_a(s,t) gamma2_b(u,v) - gamma1_b(s,t) gamma2_a(u,v),
/// stored as a form in (s,t) whose coefficients are forms in (u,v).
template <typename T>
BinForm<BinForm<T>> stacked_minor(const CubicParam<T>& g1, const CubicParam<T>& g2,
                                  std::size_t a, std::size_t b) {
    const BinForm<T> zero_uv(3, g2.coords[0].context());
    BinForm<BinForm<T>> m(3, zero_uv);
    for (std::size_t k = 0; k < 4; ++k) {
        m[k] = g2.coords[b].scaled(g1.coords[a][k]) - g2.coords[a].scaled(g1.coords[b][k]);
    }
    return m;
}

struct DisjointnessVerdict {
    bool conclusive = false;
    bool disjoint = false;
    std::string detail;
};

/// Disjointness of the two curves over the algebraic closure: iterated
/// resultants certify emptiness; a vanishing certificate falls back to a
/// direct rational search (prime fields only) which can certify
/// intersection.
template <typename T>
DisjointnessVerdict disjointness_certificate(const PairConfig<T>& pc) {
    DisjointnessVerdict v;
    std::vector<BinForm<BinForm<T>>> minors;
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) {
            auto m = stacked_minor(pc.gamma1, pc.gamma2, a, b);
            bool zero = true;
            for (std::size_t k = 0; k < 4 && zero; ++k) zero = m[k].is_zero();
            if (!zero) minors.push_back(std::move(m));
        }
    }
    if (minors.empty()) {
        v.conclusive = true;
        v.disjoint = false;
        v.detail = "all stacked minors vanish identically";
        return v;
    }
    // Eliminate (s,t): resultants in (u,v) of pairs of minors.
    std::vector<BinForm<T>> eliminants;
    for (std::size_t i = 0; i + 1 < minors.size() && eliminants.size() < 6; i += 2) {
        BinForm<T> r = binform_resultant(minors[i], minors[i + 1]);
        if (!r.is_zero()) eliminants.push_back(std::move(r));
    }
    for (std::size_t i = 1; i + 1 < minors.size() && eliminants.size() < 6; i += 2) {
        BinForm<T> r = binform_resultant(minors[i], minors[i + 1]);
        if (!r.is_zero()) eliminants.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < eliminants.size(); ++i) {
        for (std::size_t j = i + 1; j < eliminants.size(); ++j) {
            const T fin = binform_resultant(eliminants[i], eliminants[j]);
            if (!scalar_traits<T>::is_zero(fin)) {
                v.conclusive = true;
                v.disjoint = true;
                v.detail = "nonzero iterated resultant";
                return v;
            }
        }
    }
    v.detail = "iterated resultants vanish";
    return v;
}

/// Rational sweep over [u:v] in P^1(F_p): detects any intersection point
/// whose second-curve parameter is rational (closure points in the first
/// parameter included via the gcd).
bool rational_intersection_found(const PairConfig<Fp>& pc, std::uint64_t p) {
    auto probe = [&](const std::array<Fp, 5>& point) {
        BinForm<Fp> g(0, Fp(0, p));
        bool first = true;
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = a + 1; b < 5; ++b) {
                BinForm<Fp> delta = pc.gamma1.coords[a].scaled(point[b]) - pc.gamma1.coords[b].scaled(point[a]);
                if (delta.is_zero()) continue;
                g = first ? delta : binform_gcd(g, delta);
                first = false;
                if (!first && g.deg() == 0) return false;
            }
        }
        return !first && g.deg() >= 1;
    };
    for (std::uint64_t u = 0; u <= p; ++u) {
        const Fp su = (u == p) ? Fp(1, p) : Fp(u, p);
        const Fp tv = (u == p) ? Fp(0, p) : Fp(1, p);
        if (probe(pc.gamma2.eval(su, tv))) return true;
    }
    return false;
}

template <typename T>
void append_common_checks(const PairConfig<T>& pc, std::vector<GeneralityCheck>& out,
                          bool* iii_clean) {
    const T like = pc.gamma1.coords[0].context();
    *iii_clean = false;

    GeneralityCheck i;
    i.id = "i";
    i.description = "both hyperplane sections are smooth quadric surfaces";
    const int r1 = restricted_rank<T>({pc.h1}, like);
    const int r2 = restricted_rank<T>({pc.h2}, like);
    i.status = (r1 == 4 && r2 == 4) ? CheckStatus::Pass : CheckStatus::Fail;
    i.detail = "ranks " + std::to_string(r1) + "," + std::to_string(r2);
    out.push_back(i);

    GeneralityCheck ii;
    ii.id = "ii";
    ii.description = "the base conic is smooth";
    Mat<T> span(2, 5, scalar_traits<T>::zero(like));
    for (int c = 0; c < 5; ++c) {
        span.at(0, c) = pc.h1[static_cast<std::size_t>(c)];
        span.at(1, c) = pc.h2[static_cast<std::size_t>(c)];
    }
    if (mat_rank(span) != 2) {
        ii.status = CheckStatus::Fail;
        ii.detail = "the two hyperplanes coincide";
    } else {
        const int rc = restricted_rank<T>({pc.h1, pc.h2}, like);
        ii.status = (rc == 3) ? CheckStatus::Pass : CheckStatus::Fail;
        ii.detail = "rank " + std::to_string(rc);
    }
    out.push_back(ii);

    GeneralityCheck iii;
    iii.id = "iii";
    iii.description = "each curve meets the other hyperplane in three distinct points and the curves are disjoint";
    iii.status = CheckStatus::Pass;
    const BinForm<T> c12 = compose_hyperplane(pc.h2, pc.gamma1);
    const BinForm<T> c21 = compose_hyperplane(pc.h1, pc.gamma2);
    if (c12.is_zero() || c21.is_zero()) {
        iii.status = CheckStatus::Fail;
        iii.detail = "a curve lies inside the other hyperplane";
    } else {
        const bool d12 = !scalar_traits<T>::is_zero(binform_discriminant(c12));
        const bool d21 = !scalar_traits<T>::is_zero(binform_discriminant(c21));
        if (!d12 || !d21) {
            iii.status = CheckStatus::Fail;
            iii.detail = "intersection points collide (vanishing discriminant)";
        } else {
            auto dj = disjointness_certificate(pc);
            if (dj.conclusive && dj.disjoint) {
                iii.detail = "three distinct points on each side; curves disjoint (" + dj.detail + ")";
            } else if (dj.conclusive) {
                iii.status = CheckStatus::Fail;
                iii.detail = "curves intersect (" + dj.detail + ")";
            } else {
                iii.status = CheckStatus::Fail;
                iii.detail = "disjointness certificate inconclusive (" + dj.detail + "), failing closed";
            }
        }
    }
    *iii_clean = iii.status == CheckStatus::Pass;
    out.push_back(iii);
}

/// Condition (iv) over F_p: work in F_{p^6}, where every root of a cubic
/// over F_p lives; for each intersection point the polar cubic cut by the
/// tangent cone splits off the two secant-line points, so a nonzero
/// discriminant is exactly non-tangency once (iii) holds.
GeneralityCheck check_iv_fp(const PairConfig<Fp>& pc, std::uint64_t p) {
    GeneralityCheck iv;
    iv.id = "iv";
    iv.description = "the secant rulings through the intersection points are not tangent to the other curve";

    auto field = FpExtField::make(p, 6);
    auto lift_form = [&](const BinForm<Fp>& f) {
        BinForm<FExt> out(f.deg(), field->zero());
        for (std::size_t j = 0; j <= static_cast<std::size_t>(f.deg()); ++j) out[j] = field->embed(f[j]);
        return out;
    };
    auto lift_cubic = [&](const CubicParam<Fp>& g) {
        CubicParam<FExt> out{{lift_form(g.coords[0]), lift_form(g.coords[1]), lift_form(g.coords[2]),
                              lift_form(g.coords[3]), lift_form(g.coords[4])}};
        return out;
    };
    const CubicParam<FExt> g1 = lift_cubic(pc.gamma1);
    const CubicParam<FExt> g2 = lift_cubic(pc.gamma2);

    auto side = [&](const CubicParam<Fp>& gam_base, const CubicParam<FExt>& gam,
                    const CubicParam<FExt>& other, const std::array<Fp, 5>& other_h,
                    std::string& detail) -> CheckStatus {
        const BinForm<Fp> cut = compose_hyperplane(other_h, gam_base);
        if (cut.is_zero()) { detail = "degenerate hyperplane cut"; return CheckStatus::Fail; }
        // Projective roots of the cut cubic in the splitting field.
        std::vector<std::pair<FExt, FExt>> roots;
        const BinForm<FExt> cut_k = lift_form(cut);
        UPoly<FExt> dehom = cut_k.dehomogenized();
        if (dehom.degree() >= 1) {
            for (const auto& r : roots_in_field(dehom)) roots.emplace_back(r, field->one());
        }
        if (scalar_traits<Fp>::is_zero(cut[0])) roots.emplace_back(field->one(), field->zero());
        if (roots.size() != 3) {
            detail = "expected three distinct intersection points, found " + std::to_string(roots.size());
            return CheckStatus::Fail;
        }
        for (const auto& [rs, rt] : roots) {
            const std::array<FExt, 5> point = gam.eval(rs, rt);
            // Polar cubic of the point against the other curve.
            BinForm<FExt> polar_cubic(3, field->zero());
            const std::array<int, 5> partner{1, 0, 3, 2, 4};
            const std::array<int, 5> sign{1, 1, -1, -1, 2};
            for (std::size_t k = 0; k < 5; ++k) {
                FExt coeff = point[static_cast<std::size_t>(partner[k])] * field->from_int(sign[k]);
                polar_cubic = polar_cubic + other.coords[k].scaled(coeff);
            }
            if (polar_cubic.is_zero()) {
                detail = "polar cubic vanishes identically (curve inside a tangent cone)";
                return CheckStatus::Fail;
            }
            if (scalar_traits<FExt>::is_zero(binform_discriminant(polar_cubic))) {
                detail = "a secant ruling is tangent";
                return CheckStatus::Fail;
            }
        }
        return CheckStatus::Pass;
    };

    std::string d1, d2;
    const CheckStatus s1 = side(pc.gamma1, g1, g2, pc.h2, d1);
    const CheckStatus s2 = side(pc.gamma2, g2, g1, pc.h1, d2);
    if (s1 == CheckStatus::Pass && s2 == CheckStatus::Pass) {
        iv.status = CheckStatus::Pass;
        iv.detail = "checked over the degree-6 extension";
    } else {
        iv.status = CheckStatus::Fail;
        iv.detail = d1.empty() ? d2 : d1;
    }
    return iv;
}

}  // namespace

std::vector<GeneralityCheck> check_generality(const PairConfig<Fp>& pc) {
    std::vector<GeneralityCheck> out;
    bool iii_ok = false;
    append_common_checks(pc, out, &iii_ok);
    if (iii_ok) {
        out.push_back(check_iv_fp(pc, pc.gamma1.coords[0].context().p));
    } else {
        GeneralityCheck iv;
        iv.id = "iv";
        iv.description = "the secant rulings through the intersection points are not tangent to the other curve";
        iv.status = CheckStatus::Undetermined;
        iv.detail = "prerequisite (iii) did not pass";
        out.push_back(iv);
    }
    return out;
}

std::vector<GeneralityCheck> check_generality(const PairConfig<Rat>& pc) {
    std::vector<GeneralityCheck> out;
    bool iii_ok = false;
    append_common_checks(pc, out, &iii_ok);
    GeneralityCheck iv;
    iv.id = "iv";
    iv.description = "the secant rulings through the intersection points are not tangent to the other curve";
    iv.status = CheckStatus::Undetermined;
    iv.detail = "no splitting-field machinery over the rationals; rerun over a prime field";
    out.push_back(iv);
    return out;
}

namespace {

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (detail::powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return detail::powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = 2;
    while (detail::powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = detail::powmod_u64(z, q, p);
    std::uint64_t t = detail::powmod_u64(a, q, p);
    std::uint64_t r = detail::powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = detail::mulmod_u64(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = detail::mulmod_u64(b, b, p);
        m = i;
        c = detail::mulmod_u64(b, b, p);
        t = detail::mulmod_u64(t, c, p);
        r = detail::mulmod_u64(r, b, p);
    }
    return r;
}

using Vec4 = std::array<Fp, 4>;

struct HyperplaneFrame {
    std::array<Fp, 5> h;
    Mat<Fp> basis;       // 5x4 embedding of the hyperplane
    Mat<Fp> gram;        // 4x4 restriction of the doubled quadric
};

Fp qform(const Mat<Fp>& g, const Vec4& x) {
    Fp acc(0, x[0].p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc = acc + x[static_cast<std::size_t>(i)] * g.at(i, j) * x[static_cast<std::size_t>(j)];
    return acc;
}

Fp bform(const Mat<Fp>& g, const Vec4& x, const Vec4& y) {
    Fp acc(0, x[0].p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc = acc + x[static_cast<std::size_t>(i)] * g.at(i, j) * y[static_cast<std::size_t>(j)];
    return acc;
}

std::optional<HyperplaneFrame> sample_frame(const FpField& f, RngStream& rng) {
    const std::uint64_t p = f.modulus();
    std::array<Fp, 5> h{f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
    bool nonzero = false;
    for (auto& x : h) {
        x = Fp(rng.below(p), p);
        nonzero = nonzero || x.v != 0;
    }
    if (!nonzero) return std::nullopt;
    Mat<Fp> row(1, 5, f.zero());
    for (int c = 0; c < 5; ++c) row.at(0, c) = h[static_cast<std::size_t>(c)];
    auto kernel = mat_kernel(row);
    if (kernel.size() != 4) return std::nullopt;
    Mat<Fp> basis(5, 4, f.zero());
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 5; ++i) basis.at(i, j) = kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    Mat<Fp> gram = basis.transposed() * gram2_matrix(f.zero()) * basis;
    if (mat_rank(gram) != 4) return std::nullopt;
    HyperplaneFrame frame{h, std::move(basis), std::move(gram)};
    return frame;
}

std::optional<Vec4> find_point_on_quadric(const FpField& f, const Mat<Fp>& gram, RngStream& rng) {
    const std::uint64_t p = f.modulus();
    for (int attempt = 0; attempt < 24; ++attempt) {
        Vec4 y, z;
        for (auto& x : y) x = Fp(rng.below(p), p);
        for (auto& x : z) x = Fp(rng.below(p), p);
        const Fp a = qform(gram, z);
        const Fp b = bform(gram, y, z) + bform(gram, z, y);
        const Fp c = qform(gram, y);
        auto nonzero4 = [](const Vec4& v) {
            return v[0].v || v[1].v || v[2].v || v[3].v;
        };
        if (a.v == 0) {
            if (nonzero4(z)) return z;
            continue;
        }
        // a t^2 + b t + c = 0
        const Fp disc = b * b - Fp(4, p) * a * c;
        auto root = sqrt_mod(disc.v, p);
        if (!root) continue;
        const Fp t = (Fp(*root, p) - b) / (Fp(2, p) * a);
        Vec4 x;
        for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] + t * z[static_cast<std::size_t>(i)];
        if (nonzero4(x)) return x;
    }
    return std::nullopt;
}

int rank_with(const std::vector<Vec4>& vs, const FpField& f) {
    Mat<Fp> m(static_cast<int>(vs.size()), 4, f.zero());
    for (int r = 0; r < static_cast<int>(vs.size()); ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = vs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return mat_rank(m);
}

struct CurveAttempt {
    CubicParam<Fp> gamma;
};

std::optional<CurveAttempt> sample_curve_on_frame(const FpField& f, const HyperplaneFrame& frame, RngStream& rng) {
    const std::uint64_t p = f.modulus();
    auto x0 = find_point_on_quadric(f, frame.gram, rng);
    if (!x0) return std::nullopt;

    // A plane in the hyperplane avoiding x0: three unit vectors completing x0.
    std::vector<Vec4> plane;
    {
        std::vector<Vec4> acc{*x0};
        for (int i = 0; i < 4 && plane.size() < 3; ++i) {
            Vec4 e{f.zero(), f.zero(), f.zero(), f.zero()};
            e[static_cast<std::size_t>(i)] = f.one();
            acc.push_back(e);
            if (rank_with(acc, f) == static_cast<int>(acc.size())) plane.push_back(e);
            else acc.pop_back();
        }
        if (plane.size() != 3) return std::nullopt;
    }

    // The polar line of x0 inside the plane.
    std::array<Fp, 3> alpha{};
    for (int i = 0; i < 3; ++i) alpha[static_cast<std::size_t>(i)] = bform(frame.gram, *x0, plane[static_cast<std::size_t>(i)]);
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
        if (alpha[static_cast<std::size_t>(i)].v != 0) { pivot = i; break; }
    }
    if (pivot < 0) return std::nullopt;
    std::vector<Vec4> line;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        // plane[i] - (alpha_i / alpha_pivot) plane[pivot]
        const Fp coef = alpha[static_cast<std::size_t>(i)] / alpha[static_cast<std::size_t>(pivot)];
        Vec4 w;
        for (int k = 0; k < 4; ++k) {
            w[static_cast<std::size_t>(k)] = plane[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                             coef * plane[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(k)];
        }
        line.push_back(w);
    }

    // Base points: the two rational roots of the quadric on that line.
    const Fp qu = qform(frame.gram, line[0]);
    const Fp qv = qform(frame.gram, line[1]);
    const Fp buv = bform(frame.gram, line[0], line[1]) + bform(frame.gram, line[1], line[0]);
    // qu m^2 + buv m n + qv n^2 = 0
    std::optional<std::pair<Fp, Fp>> root1, root2;
    if (qu.v == 0) {
        root1 = {f.one(), f.zero()};
        if (buv.v != 0) root2 = {-(qv / buv), f.one()};
    } else {
        const Fp disc = buv * buv - Fp(4, p) * qu * qv;
        if (disc.v == 0) return std::nullopt;
        auto rt = sqrt_mod(disc.v, p);
        if (!rt) return std::nullopt;
        root1 = {(Fp(*rt, p) - buv) / (Fp(2, p) * qu), f.one()};
        root2 = {(-Fp(*rt, p) - buv) / (Fp(2, p) * qu), f.one()};
    }
    if (!root1 || !root2) return std::nullopt;
    auto on_line = [&](const std::pair<Fp, Fp>& mn) {
        Vec4 w;
        for (int k = 0; k < 4; ++k) {
            w[static_cast<std::size_t>(k)] = mn.first * line[0][static_cast<std::size_t>(k)] +
                                             mn.second * line[1][static_cast<std::size_t>(k)];
        }
        return w;
    };
    const Vec4 za = on_line(*root1);
    const Vec4 zb = on_line(*root2);
    if (rank_with({za, zb}, f) != 2) return std::nullopt;

    // A third plane direction completing the two base points.
    Vec4 n{};
    {
        bool found = false;
        for (const auto& w : plane) {
            if (rank_with({za, zb, w}, f) == 3) { n = w; found = true; break; }
        }
        if (!found) return std::nullopt;
    }

    // Rational plane cubic with a double point at zb, passing through za at
    // the parameter (1:0).
    auto rand_fp = [&]() { return Fp(rng.below(p), p); };
    BinForm<Fp> pi(2, std::vector<Fp>{Fp(1 + rng.below(p - 1), p), rand_fp(), rand_fp()});
    BinForm<Fp> acubic(3, std::vector<Fp>{f.zero(), rand_fp(), rand_fp(), rand_fp()});
    BinForm<Fp> lb(1, std::vector<Fp>{Fp(1 + rng.below(p - 1), p), rand_fp()});
    BinForm<Fp> lc(1, std::vector<Fp>{f.zero(), Fp(1 + rng.below(p - 1), p)});
    const BinForm<Fp> pb = pi * lb;
    const BinForm<Fp> pn = pi * lc;

    std::array<BinForm<Fp>, 4> plane_cubic{BinForm<Fp>(3, f.zero()), BinForm<Fp>(3, f.zero()),
                                           BinForm<Fp>(3, f.zero()), BinForm<Fp>(3, f.zero())};
    for (int k = 0; k < 4; ++k) {
        plane_cubic[static_cast<std::size_t>(k)] =
            acubic.scaled(zb[static_cast<std::size_t>(k)]) +
            pb.scaled(za[static_cast<std::size_t>(k)]) +
            pn.scaled(n[static_cast<std::size_t>(k)]);
    }

    // Second-intersection map from the projection point: q(c) x0 - b(x0,c) c.
    BinForm<Fp> qc(6, f.zero());
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (frame.gram.at(i, j).v == 0) continue;
            qc = qc + (plane_cubic[static_cast<std::size_t>(i)] * plane_cubic[static_cast<std::size_t>(j)]).scaled(frame.gram.at(i, j));
        }
    }
    BinForm<Fp> bc(3, f.zero());
    for (int j = 0; j < 4; ++j) {
        Fp coef = f.zero();
        for (int i = 0; i < 4; ++i) {
            coef = coef + ((*x0)[static_cast<std::size_t>(i)] * frame.gram.at(i, j) + frame.gram.at(j, i) * (*x0)[static_cast<std::size_t>(i)]);
        }
        bc = bc + plane_cubic[static_cast<std::size_t>(j)].scaled(coef);
    }
    std::array<BinForm<Fp>, 4> sextics{BinForm<Fp>(6, f.zero()), BinForm<Fp>(6, f.zero()),
                                       BinForm<Fp>(6, f.zero()), BinForm<Fp>(6, f.zero())};
    for (int k = 0; k < 4; ++k) {
        sextics[static_cast<std::size_t>(k)] =
            qc.scaled((*x0)[static_cast<std::size_t>(k)]) - bc * plane_cubic[static_cast<std::size_t>(k)];
    }

    // Divide out the base-point contribution: the common cubic factor.
    BinForm<Fp> g(0, f.zero());
    bool first = true;
    for (const auto& s : sextics) {
        if (s.is_zero()) continue;
        g = first ? s : binform_gcd(g, s);
        first = false;
    }
    if (first || g.deg() != 3) return std::nullopt;
    CubicParam<Fp> curve{{BinForm<Fp>(3, f.zero()), BinForm<Fp>(3, f.zero()), BinForm<Fp>(3, f.zero()),
                          BinForm<Fp>(3, f.zero()), BinForm<Fp>(3, f.zero())}};
    std::array<BinForm<Fp>, 4> reduced{BinForm<Fp>(0, f.zero()), BinForm<Fp>(0, f.zero()),
                                       BinForm<Fp>(0, f.zero()), BinForm<Fp>(0, f.zero())};
    for (int k = 0; k < 4; ++k) {
        if (sextics[static_cast<std::size_t>(k)].is_zero()) {
            reduced[static_cast<std::size_t>(k)] = BinForm<Fp>(3, f.zero());
        } else {
            reduced[static_cast<std::size_t>(k)] = binform_exact_div(sextics[static_cast<std::size_t>(k)], g);
        }
    }
    // Embed the hyperplane coordinates back into P^4.
    for (int i = 0; i < 5; ++i) {
        BinForm<Fp> acc(3, f.zero());
        for (int j = 0; j < 4; ++j) {
            if (frame.basis.at(i, j).v == 0) continue;
            acc = acc + reduced[static_cast<std::size_t>(j)].scaled(frame.basis.at(i, j));
        }
        curve.coords[static_cast<std::size_t>(i)] = acc;
    }
    if (!curve.on_quadric() || !curve.spans_hyperplane()) return std::nullopt;
    return CurveAttempt{std::move(curve)};
}

}  // namespace

PairSearchResult random_general_pair(std::uint64_t p, std::uint64_t seed, std::uint64_t budget) {
    if (p < 11) throw std::invalid_argument("random_general_pair: need p >= 11");
    if (budget == 0) throw std::invalid_argument("random_general_pair: zero trial budget");
    FpField f(p);
    RngStream rng(seed);
    for (std::uint64_t trial = 1; trial <= budget; ++trial) {
        auto frame1 = sample_frame(f, rng);
        if (!frame1) continue;
        auto c1 = sample_curve_on_frame(f, *frame1, rng);
        if (!c1) continue;
        auto frame2 = sample_frame(f, rng);
        if (!frame2) continue;
        auto c2 = sample_curve_on_frame(f, *frame2, rng);
        if (!c2) continue;
        try {
            PairConfig<Fp> pc = PairConfig<Fp>::make(c1->gamma, c2->gamma);
            if (generality_passes(check_generality(pc))) {
                return PairSearchResult{std::move(pc), trial};
            }
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("random_general_pair: trial budget exhausted");
}

ModuliDimension moduli_dimension() {
    ModuliDimension d;
    d.note =
        "dimension of the space of twisted cubics on the quadric threefold taken as 4 + 5 = 9 "
        "(hyperplane section choice plus the five-dimensional linear system on it); the "
        "projectivized rank-6 bundle description over the conic Hilbert scheme would give "
        "6 + 5 = 11, which is inconsistent with the count 2*9 - 10 = 8; the total uses 9";
    return d;
}

PairFile parse_pair_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    PairFile f;
    if (!std::getline(in, line)) throw std::runtime_error("pair file: empty");
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    if (kind == "prime") {
        std::uint64_t p = 0;
        if (!(header >> p) || !is_prime_u64(p)) throw std::runtime_error("pair file: bad prime header");
        f.prime = p;
    } else if (kind != "rationals") {
        throw std::runtime_error("pair file: header must be 'prime p' or 'rationals'");
    }
    for (int r = 0; r < 10; ++r) {
        if (!std::getline(in, line)) throw std::runtime_error("pair file: expected ten coefficient lines");
        std::istringstream row(line);
        for (int c = 0; c < 4; ++c) {
            if (!(row >> f.coeffs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
                throw std::runtime_error("pair file: bad coefficient line " + std::to_string(r + 2));
            }
        }
    }
    return f;
}

std::string pair_file_text(const PairFile& f) {
    std::ostringstream out;
    if (f.prime) out << "prime " << *f.prime << "\n";
    else out << "rationals\n";
    for (const auto& row : f.coeffs) {
        out << row[0] << " " << row[1] << " " << row[2] << " " << row[3] << "\n";
    }
    return out.str();
}

PairFile pair_file_of(const PairConfig<Fp>& pc, std::uint64_t p) {
    PairFile f;
    f.prime = p;
    for (int curve = 0; curve < 2; ++curve) {
        const auto& g = curve == 0 ? pc.gamma1 : pc.gamma2;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 4; ++j) {
                f.coeffs[static_cast<std::size_t>(curve * 5 + i)][static_cast<std::size_t>(j)] =
                    static_cast<long long>(g.coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].v);
            }
        }
    }
    return f;
}

namespace {

template <typename T, typename Maker>
PairConfig<T> pair_from_rows(const PairFile& f, Maker make) {
    auto cubic = [&](int base) {
        std::array<BinForm<T>, 5> coords{BinForm<T>(3, make(0)), BinForm<T>(3, make(0)), BinForm<T>(3, make(0)),
                                         BinForm<T>(3, make(0)), BinForm<T>(3, make(0))};
        for (int i = 0; i < 5; ++i) {
            std::vector<T> cs;
            for (int j = 0; j < 4; ++j) cs.push_back(make(f.coeffs[static_cast<std::size_t>(base + i)][static_cast<std::size_t>(j)]));
            coords[static_cast<std::size_t>(i)] = BinForm<T>(3, std::move(cs));
        }
        CubicParam<T> g{std::move(coords)};
        if (!g.spans_hyperplane()) throw std::runtime_error("pair file: a curve does not span a hyperplane");
        return g;
    };
    return PairConfig<T>::make(cubic(0), cubic(5));
}

}  // namespace

PairConfig<Fp> pair_from_file_fp(const PairFile& f, std::uint64_t p) {
    FpField field(p);
    return pair_from_rows<Fp>(f, [&](long long v) { return Fp::of(v, p); });
}

PairConfig<Rat> pair_from_file_rat(const PairFile& f) {
    return pair_from_rows<Rat>(f, [](long long v) { return Rat(v); });
}

}  // namespace q3fold

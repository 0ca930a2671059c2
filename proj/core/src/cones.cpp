#include "q3fold/cones.hpp"

#include <algorithm>
#include <stdexcept>

#include "q3fold/exact_lp.hpp"

namespace q3fold {

Cone Cone::of(int dim, std::vector<std::vector<Rat>> gens) {
    Cone k;
    k.dim = dim;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("Cone: generator dimension");
        bool zero = std::all_of(g.begin(), g.end(), [](const Rat& x) { return x.is_zero(); });
        if (zero) throw std::invalid_argument("Cone: zero generator");
    }
    k.generators = std::move(gens);
    return k;
}

std::vector<Rat> cur_vec(const Cur& c) { return {c.h, c.f1, c.f2}; }
std::vector<Rat> div_vec(const Div& d) { return {d.h, d.e1, d.e2}; }

MembershipResult cone_member(const Cone& k, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != k.dim) throw std::invalid_argument("cone_member: dimension mismatch");
    if (k.generators.size() > 20 || k.dim > 10) throw std::invalid_argument("cone_member: desk-scale limits exceeded");
    auto r = exact_lp_feasible(k.generators, v);
    MembershipResult out;
    if (r.solution) {
        // Soundness: the witness must recombine exactly.
        for (int i = 0; i < k.dim; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < k.generators.size(); ++j) {
                acc += (*r.solution)[j] * k.generators[j][static_cast<std::size_t>(i)];
            }
            if (acc != v[static_cast<std::size_t>(i)]) throw std::logic_error("cone_member: witness does not recombine");
        }
        for (const auto& c : *r.solution) {
            if (c < 0) throw std::logic_error("cone_member: negative witness coefficient");
        }
        out.witness = DecompositionWitness{std::move(*r.solution)};
        return out;
    }
    // Farkas y has y.gen <= 0 and y.v > 0; the separating functional is -y.
    std::vector<Rat> w = std::move(*r.farkas);
    for (auto& x : w) x = -x;
    Rat wv(0);
    for (int i = 0; i < k.dim; ++i) wv += w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    if (!(wv < 0)) throw std::logic_error("cone_member: separator fails on target");
    for (const auto& g : k.generators) {
        Rat wg(0);
        for (int i = 0; i < k.dim; ++i) wg += w[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
        if (wg < 0) throw std::logic_error("cone_member: separator fails on generator");
    }
    out.separator = std::move(w);
    return out;
}

std::vector<std::size_t> extremal_ray_indices(const Cone& k) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k.generators.size(); ++i) {
        Cone others;
        others.dim = k.dim;
        for (std::size_t j = 0; j < k.generators.size(); ++j) {
            if (j != i) others.generators.push_back(k.generators[j]);
        }
        if (others.generators.empty() || !cone_member(others, k.generators[i]).member()) {
            kept.push_back(i);
        }
    }
    // The kept rays must still generate every original generator.
    Cone reduced;
    reduced.dim = k.dim;
    for (auto i : kept) reduced.generators.push_back(k.generators[i]);
    for (const auto& g : k.generators) {
        if (!cone_member(reduced, g).member()) {
            throw std::domain_error("extremal_ray_indices: reduction lost the cone (mutually redundant generators)");
        }
    }
    return kept;
}

NefReport is_nef(const BlowupModel& m, const Div& d, const std::vector<Cur>& rays) {
    NefReport r;
    r.nef = true;
    for (const auto& c : rays) {
        const Rat p = pair(m, d, c);
        if (p < 0) r.nef = false;
        r.pairings.push_back(p);
    }
    return r;
}

const std::vector<Cur>& mori_generators() {
    static const std::vector<Cur> gens{
        Cur{Rat(3), Rat(-4), Rat(0)},   // h1, the (-1)-section of the first exceptional surface
        Cur{Rat(3), Rat(0), Rat(-4)},   // h2
        Cur{Rat(0), Rat(1), Rat(0)},    // f1
        Cur{Rat(0), Rat(0), Rat(1)},    // f2
        Cur{Rat(1), Rat(-2), Rat(-1)},  // h - 2f1 - f2
        Cur{Rat(1), Rat(-1), Rat(-2)},  // h - f1 - 2f2
    };
    return gens;
}

const std::vector<std::string>& mori_generator_names() {
    static const std::vector<std::string> names{"h1", "h2", "f1", "f2", "h-2f1-f2", "h-f1-2f2"};
    return names;
}

Cone mori_cone() {
    std::vector<std::vector<Rat>> gens;
    for (const auto& c : mori_generators()) gens.push_back(cur_vec(c));
    return Cone::of(3, std::move(gens));
}

const std::vector<Div>& eff_generators() {
    static const std::vector<Div> gens{
        Div{Rat(0), Rat(1), Rat(0)},    // E1
        Div{Rat(0), Rat(0), Rat(1)},    // E2
        Div{Rat(1), Rat(-1), Rat(0)},   // H - E1, strict transform of the first quadric
        Div{Rat(1), Rat(0), Rat(-1)},   // H - E2
    };
    return gens;
}

const std::vector<std::string>& eff_generator_names() {
    static const std::vector<std::string> names{"E1", "E2", "H-E1", "H-E2"};
    return names;
}

Cone eff_cone() {
    std::vector<std::vector<Rat>> gens;
    for (const auto& d : eff_generators()) gens.push_back(div_vec(d));
    return Cone::of(3, std::move(gens));
}

namespace {

Int as_int(const Rat& x, const char* what) {
    if (denominator(x) != 1) throw std::invalid_argument(std::string(what) + ": class must be integral");
    return numerator(x);
}

void verify_mori_witness(const Cur& c, const DecompositionWitness& w) {
    const auto& gens = mori_generators();
    Cur acc{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (w.coefficients[i] < 0) throw std::logic_error("mori_decompose: negative coefficient");
        acc = acc + w.coefficients[i] * gens[i];
    }
    if (!(acc == c)) throw std::logic_error("mori_decompose: witness does not recombine");
}

}  // namespace

DecompositionWitness mori_decompose(const Cur& c) {
    const auto& gens = mori_generators();
    DecompositionWitness w;
    w.coefficients.assign(gens.size(), Rat(0));

    const Int d = as_int(c.h, "mori_decompose");
    const Int m1 = -as_int(c.f1, "mori_decompose");
    const Int m2 = -as_int(c.f2, "mori_decompose");

    // Nonnegative multiple of a single generator.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Cur& g = gens[i];
        // c = t*g with t >= 0?
        Rat t(0);
        bool ok = true;
        auto fit = [&](const Rat& cv, const Rat& gv) {
            if (gv.is_zero()) { if (!cv.is_zero()) ok = false; return; }
            Rat ratio = cv / gv;
            if (t.is_zero()) t = ratio;
            else if (t != ratio) ok = false;
        };
        fit(c.h, g.h); fit(c.f1, g.f1); fit(c.f2, g.f2);
        if (ok && t > 0) {
            w.coefficients[i] = t;
            verify_mori_witness(c, w);
            return w;
        }
    }

    if (d < 0) throw std::invalid_argument("mori_decompose: negative degree is outside the case split");

    // Multiple of the base conic 2h - 3f1 - 3f2: the displayed split into the
    // two secant classes.
    if (d % 2 == 0 && m1 == m2 && m1 * 2 == d * 3 && d > 0) {
        const Rat k(d / 2);
        w.coefficients[4] = k;
        w.coefficients[5] = k;
        verify_mori_witness(c, w);
        return w;
    }

    if (m1 >= 0 && m2 >= 0 && m1 <= d && m2 <= d) {
        // (d - mi) h + (mi - mj)(h - fi) + mj (h - fi - fj), then
        //   h          = (h - 2f1 - f2) + 2f1 + f2,
        //   h - fi     = (h - 2fi - fj) + fi + fj,
        //   h - fi - fj= (h - 2fi - fj) + fi.
        const bool first = m1 >= m2;
        const Int mi = first ? m1 : m2;
        const Int mj = first ? m2 : m1;
        const std::size_t fi = first ? 2 : 3;
        const std::size_t fj = first ? 3 : 2;
        const std::size_t secant_i = first ? 4 : 5;  // h - 2fi - fj
        const Rat a(d - mi), b(mi - mj), g(mj);
        // a * h
        w.coefficients[4] += a;
        w.coefficients[2] += Rat(2) * a;
        w.coefficients[3] += a;
        // b * (h - fi)
        w.coefficients[secant_i] += b;
        w.coefficients[fi] += b;
        w.coefficients[fj] += b;
        // g * (h - fi - fj)
        w.coefficients[secant_i] += g;
        w.coefficients[fi] += g;
        verify_mori_witness(c, w);
        return w;
    }

    // Remaining curve-on-quadric cases: exact LP certificate.
    auto r = cone_member(mori_cone(), cur_vec(c));
    if (!r.member()) {
        throw std::invalid_argument("mori_decompose: class " + c.str() + " is outside the case split");
    }
    w.coefficients = r.witness->coefficients;
    verify_mori_witness(c, w);
    return w;
}

DecompositionWitness eff_decompose(const Div& dv) {
    DecompositionWitness w;
    w.coefficients.assign(4, Rat(0));
    Int d = as_int(dv.h, "eff_decompose");
    Int m1 = -as_int(dv.e1, "eff_decompose");
    Int m2 = -as_int(dv.e2, "eff_decompose");
    if (d < 0) throw std::invalid_argument("eff_decompose: negative degree is outside the case split");

    // While some d - 2 m_i < 0 the class can only be effective through the
    // strict transform of the corresponding quadric; peel it off.
    while (d - 2 * m1 < 0 || d - 2 * m2 < 0) {
        if (d - 2 * m1 < 0) {
            const Int k = 2 * m1 - d;
            w.coefficients[2] += Rat(k);
            d -= k;
            m1 -= k;
        } else {
            const Int k = 2 * m2 - d;
            w.coefficients[3] += Rat(k);
            d -= k;
            m2 -= k;
        }
        if (d < 0) throw std::invalid_argument("eff_decompose: class " + dv.str() + " is outside the case split");
    }

    // Double, apply the even-degree combination, halve:
    //   2D = (2d - 2m2) Q1 + (2d - 2m1 - 2m2) E1 + 2m2 Q2   (with H = Q1 + E1)
    const Rat q1 = Rat(2 * d - 2 * m2) / 2;
    const Rat e1 = Rat(2 * d - 2 * m1 - 2 * m2) / 2;
    const Rat q2 = Rat(2 * m2) / 2;
    if (q1 < 0 || e1 < 0 || q2 < 0) {
        throw std::invalid_argument("eff_decompose: class " + dv.str() + " is outside the case split");
    }
    w.coefficients[0] += e1;
    w.coefficients[2] += q1;
    w.coefficients[3] += q2;

    // Exact recombination check.
    const auto& gens = eff_generators();
    Div acc{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < 4; ++i) {
        if (w.coefficients[i] < 0) throw std::logic_error("eff_decompose: negative coefficient");
        acc = acc + w.coefficients[i] * gens[i];
    }
    if (!(acc == dv)) throw std::logic_error("eff_decompose: witness does not recombine");
    return w;
}

namespace {

/// Normalize an inequality row to a primitive integer vector with positive
/// leading entry magnitude removed; exact duplicates then collapse.
std::vector<Rat> normalize_row(std::vector<Rat> row) {
    Int lcm = 1;
    for (const auto& x : row) {
        const Int den = denominator(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    Int content = 0;
    std::vector<Int> ints;
    for (const auto& x : row) {
        Int v = numerator(x * Rat(lcm));
        content = boost::multiprecision::gcd(content, v);
        ints.push_back(v);
    }
    if (content == 0) return std::vector<Rat>(row.size(), Rat(0));
    std::vector<Rat> out;
    for (const auto& v : ints) out.emplace_back(Rat(v / content));
    return out;
}

}  // namespace

std::vector<std::vector<Rat>> dual_inequalities(const Cone& k) {
    if (k.generators.size() > 20 || k.dim > 10) throw std::invalid_argument("dual_inequalities: desk-scale limits exceeded");
    const int n = static_cast<int>(k.generators.size());
    const int d = k.dim;
    // Inequalities over (lambda_1..lambda_n, x_1..x_d):
    //   lambda_i >= 0, and the equalities x - G lambda = 0 as two inequalities.
    std::vector<std::vector<Rat>> ineqs;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(static_cast<std::size_t>(n + d), Rat(0));
        row[static_cast<std::size_t>(i)] = Rat(1);
        ineqs.push_back(std::move(row));
    }
    for (int r = 0; r < d; ++r) {
        std::vector<Rat> row(static_cast<std::size_t>(n + d), Rat(0));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = -k.generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        row[static_cast<std::size_t>(n + r)] = Rat(1);
        ineqs.push_back(row);
        for (auto& x : row) x = -x;
        ineqs.push_back(std::move(row));
    }
    // Eliminate the lambda variables.
    for (int var = 0; var < n; ++var) {
        std::vector<std::vector<Rat>> pos, neg, zero;
        for (auto& row : ineqs) {
            const Rat& c = row[static_cast<std::size_t>(var)];
            if (c > 0) pos.push_back(row);
            else if (c < 0) neg.push_back(row);
            else zero.push_back(row);
        }
        std::vector<std::vector<Rat>> next = zero;
        for (const auto& p : pos) {
            for (const auto& nrow : neg) {
                std::vector<Rat> comb(p.size());
                const Rat cp = p[static_cast<std::size_t>(var)];
                const Rat cn = -nrow[static_cast<std::size_t>(var)];
                for (std::size_t j = 0; j < p.size(); ++j) comb[j] = p[j] * cn + nrow[j] * cp;
                comb = normalize_row(std::move(comb));
                bool zero_row = std::all_of(comb.begin(), comb.end(), [](const Rat& x) { return x.is_zero(); });
                if (!zero_row) next.push_back(std::move(comb));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() > 4096) throw std::runtime_error("dual_inequalities: intermediate blow-up");
        ineqs = std::move(next);
    }
    // Restrict to the x block and prune rows that are nonnegative
    // combinations of the others.
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : ineqs) {
        std::vector<Rat> x(row.begin() + n, row.end());
        x = normalize_row(std::move(x));
        if (std::all_of(x.begin(), x.end(), [](const Rat& v) { return v.is_zero(); })) continue;
        rows.push_back(std::move(x));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    // Drop one redundant row at a time so mutually-redundant pairs cannot
    // erase each other.
    bool removed = true;
    while (removed && rows.size() > 1) {
        removed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Cone others;
            others.dim = d;
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (j != i) others.generators.push_back(rows[j]);
            }
            if (others.generators.size() <= 20 && cone_member(others, rows[i]).member()) {
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }
    return rows;
}

}  // namespace q3fold

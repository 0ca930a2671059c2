#include "q3fold/grassmann.hpp"

#include <stdexcept>
#include <vector>

#include "q3fold/rng.hpp"

namespace q3fold {

bool verify_pluecker_convention() {
    const auto chart = symbolic_chart();
    const auto embedded = pluecker_embed(chart);
    const auto minors = pluecker_minors(chart);
    for (int i = 0; i < 10; ++i) {
        if (!(embedded[static_cast<std::size_t>(i)] == minors[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

Mat<Rat> default_quadric_form() {
    Mat<Rat> q(5, 5, Rat(0));
    const Rat half(1, 2);
    q.at(0, 1) = half; q.at(1, 0) = half;    // x0 x1
    q.at(2, 3) = -half; q.at(3, 2) = -half;  // -x2 x3
    q.at(4, 4) = Rat(1);                     // x4^2
    return q;
}

Mat<Fp> default_quadric_form_mod(std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("default_quadric_form_mod: characteristic 2 not supported");
    FpField f(p);
    const Fp half = f.one() / f.elem(2);
    Mat<Fp> q(5, 5, f.zero());
    q.at(0, 1) = half; q.at(1, 0) = half;
    q.at(2, 3) = -half; q.at(3, 2) = -half;
    q.at(4, 4) = f.one();
    return q;
}

Mat<MPoly<Rat>> conic_restriction_symbolic() {
    const auto chart = symbolic_chart();
    const MPoly<Rat> zero = MPoly<Rat>::zero(6);
    Mat<MPoly<Rat>> q(5, 5, zero);
    auto c = [](long num, long den) { return MPoly<Rat>::constant(6, Rat(num, den)); };
    q.at(0, 1) = c(1, 2); q.at(1, 0) = c(1, 2);
    q.at(2, 3) = c(-1, 2); q.at(3, 2) = c(-1, 2);
    q.at(4, 4) = c(1, 1);
    return conic_restriction(chart, q);
}

Mat<MPoly<Rat>> conic_matrix_display() {
    auto v = [](int i) { return MPoly<Rat>::variable(6, i, Rat(1)); };
    auto c = [](long num, long den) { return MPoly<Rat>::constant(6, Rat(num, den)); };
    const MPoly<Rat> a0 = v(0), a1 = v(1), a2 = v(2), b0 = v(3), b1 = v(4), b2 = v(5);
    Mat<MPoly<Rat>> m(3, 3, MPoly<Rat>::zero(6));
    m.at(0, 0) = a0 * a0;
    m.at(1, 1) = a1 * a1;
    // The source display shows a2^2 here; the x2*x3 cross term contributes
    // the extra -b2, which the composed quintic confirms.
    m.at(2, 2) = a2 * a2 - b2;
    m.at(0, 1) = a0 * a1 + c(1, 2);
    m.at(0, 2) = a0 * a2 - b0.scaled(Rat(1, 2));
    m.at(1, 2) = a1 * a2 - b1.scaled(Rat(1, 2));
    m.at(1, 0) = m.at(0, 1);
    m.at(2, 0) = m.at(0, 2);
    m.at(2, 1) = m.at(1, 2);
    return m;
}

QuinticIdentity verify_quintic_identity() {
    QuinticIdentity out;
    const auto pl = pluecker_embed(symbolic_chart());
    std::vector<MPoly<Rat>> images(pl.begin(), pl.end());
    const MPoly<Rat> composed = fq_quintic().substitute(images);
    const MPoly<Rat> det = mat_det(conic_restriction_symbolic());
    std::optional<Rat> c;
    try {
        c = poly_proportionality(composed, det);
    } catch (const std::domain_error&) {
        out.counterexample = "both sides vanish identically";
        return out;
    }
    if (!c || c->is_zero()) {
        // Report the first monomial where the two sides are not proportional.
        for (const auto& [e, coeff] : composed.terms()) {
            (void)coeff;
            if (!det.coefficient(e)) {
                std::string mono;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (!mono.empty()) mono += "*";
                    mono += chart_var_names()[i];
                    if (e[i] > 1) mono += "^" + std::to_string(e[i]);
                }
                out.counterexample = "monomial " + mono + " appears only in the composition";
                return out;
            }
        }
        out.counterexample = "supports agree but coefficient ratios differ";
        return out;
    }
    out.constant = *c;
    out.pass = true;
    return out;
}

Int count_standard_tableaux_rectangle(int rows, int cols) {
    // Backtracking enumeration: place 1..rows*cols so rows and columns
    // increase. Independent of the hook-length route.
    const int total = rows * cols;
    std::vector<int> heights(static_cast<std::size_t>(cols), 0);  // filled cells per column
    Int count = 0;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == total) {
            ++count;
            return;
        }
        for (int col = 0; col < cols; ++col) {
            if (heights[static_cast<std::size_t>(col)] >= rows) continue;
            if (col > 0 && heights[static_cast<std::size_t>(col - 1)] <= heights[static_cast<std::size_t>(col)]) continue;
            ++heights[static_cast<std::size_t>(col)];
            self(self, placed + 1);
            --heights[static_cast<std::size_t>(col)];
        }
    };
    rec(rec, 0);
    return count;
}

Int grassmann_degree(int k, int n) {
    if (k < 1 || k >= n || n > 8) throw std::invalid_argument("grassmann_degree: need 1 <= k < n <= 8");
    const int rows = k, cols = n - k;
    Int numerator = 1;
    for (int i = 2; i <= rows * cols; ++i) numerator *= i;
    Int hooks = 1;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            hooks *= (rows - i) + (cols - j) - 1;
        }
    }
    return numerator / hooks;
}

Int deg_fq() { return 5 * grassmann_degree(3, 5); }

namespace {

void record_chart(const PlaneChart<Fp>& chart, const Mat<Fp>& q5, const MPoly<Fp>& quintic, ConicSampleStats& stats) {
    const Mat<Fp> m = conic_restriction(chart, q5);
    const Fp det = mat_det(m);
    const auto pl = pluecker_embed(chart);
    const std::vector<Fp> point(pl.begin(), pl.end());
    const Fp qval = quintic.eval(point);
    const bool det_zero = det.v == 0;
    const bool q_zero = qval.v == 0;
    ++stats.trials;
    if (det_zero) ++stats.det_zero;
    if (q_zero) ++stats.quintic_zero;
    if (det_zero != q_zero) ++stats.disagreements;
    if (!det_zero) {
        ++stats.smooth;
    } else {
        switch (conic_classify(m)) {
            case ConicClass::Smooth: ++stats.smooth; break;  // unreachable
            case ConicClass::LinePair: ++stats.line_pair; break;
            case ConicClass::DoubleLine: ++stats.double_line; break;
        }
    }
}

}  // namespace

ConicSampleStats sample_conic_statistics(std::uint64_t p, std::uint64_t trials, std::uint64_t seed) {
    FpField field(p);
    if (p < 3) throw std::invalid_argument("sample_conic_statistics: need p >= 3");
    ConicSampleStats stats;
    if (trials == 0) return stats;
    const Mat<Fp> q5 = default_quadric_form_mod(p);
    const MPoly<Fp> quintic = fq_quintic_mod(p);
    CounterRng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto coord = [&](int i) { return Fp(rng.below(6 * t + static_cast<std::uint64_t>(i), p), p); };
        PlaneChart<Fp> chart{coord(0), coord(1), coord(2), coord(3), coord(4), coord(5)};
        record_chart(chart, q5, quintic, stats);
    }
    return stats;
}

ConicSampleStats exhaustive_conic_census(std::uint64_t p) {
    FpField field(p);
    if (p < 3) throw std::invalid_argument("exhaustive_conic_census: need p >= 3");
    const Mat<Fp> q5 = default_quadric_form_mod(p);
    const MPoly<Fp> quintic = fq_quintic_mod(p);
    ConicSampleStats stats;
    std::array<std::uint64_t, 6> v{0, 0, 0, 0, 0, 0};
    while (true) {
        PlaneChart<Fp> chart{Fp(v[0], p), Fp(v[1], p), Fp(v[2], p), Fp(v[3], p), Fp(v[4], p), Fp(v[5], p)};
        record_chart(chart, q5, quintic, stats);
        int i = 0;
        while (i < 6) {
            if (++v[static_cast<std::size_t>(i)] < p) break;
            v[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == 6) break;
    }
    return stats;
}

}  // namespace q3fold

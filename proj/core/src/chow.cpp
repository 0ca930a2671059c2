#include "q3fold/chow.hpp"

#include <array>
#include <stdexcept>

namespace q3fold {

namespace {

std::string class_str(const Rat& c0, const Rat& c1, const Rat& c2,
                      const char* n0, const char* n1, const char* n2) {
    auto piece = [](const Rat& c, const char* name, bool first) -> std::string {
        if (c.is_zero()) return "";
        std::string s = to_canonical_string(c);
        std::string out;
        if (!first && s[0] != '-') out += "+";
        if (s == "1") out += name;
        else if (s == "-1") out += std::string("-") + name;
        else out += s + name;
        return out;
    };
    std::string out = piece(c0, n0, true);
    out += piece(c1, n1, out.empty());
    out += piece(c2, n2, out.empty());
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Div::str() const { return class_str(h, e1, e2, "H", "E1", "E2"); }
std::string Cur::str() const { return class_str(h, f1, f2, "h", "f1", "f2"); }

BlowupModel BlowupModel::default_genus8() { return BlowupModel{}; }

Rat BlowupModel::e_cubed(int i) const {
    const auto& c = curves.at(static_cast<std::size_t>(i));
    return Rat(2) - Rat(2) * c.genus + kappa * c.degree;
}

Rat BlowupModel::h_e_squared(int i) const { return -curves.at(static_cast<std::size_t>(i)).degree; }

Rat BlowupModel::normal_bundle_degree(int i) const { return -e_cubed(i); }

Rat triple_product(const BlowupModel& m, const Div& d1, const Div& d2, const Div& d3) {
    if (m.curves.size() != 2) throw std::invalid_argument("triple_product: model needs two curves");
    if (!m.disjoint) throw std::invalid_argument("triple_product: tensor only modeled for disjoint centers");
    // tensor entries T[i][j][k] over the basis (H, E1, E2)
    std::array<std::array<std::array<Rat, 3>, 3>, 3> t{};
    t[0][0][0] = m.ambient_degree;
    for (int i = 1; i <= 2; ++i) {
        t[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = m.h_e_squared(i - 1);
        t[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(i)] = m.h_e_squared(i - 1);
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][0] = m.h_e_squared(i - 1);
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = m.e_cubed(i - 1);
    }
    const std::array<Rat, 3> a{d1.h, d1.e1, d1.e2};
    const std::array<Rat, 3> b{d2.h, d2.e1, d2.e2};
    const std::array<Rat, 3> c{d3.h, d3.e1, d3.e2};
    Rat acc(0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                if (t[i][j][k].is_zero()) continue;
                acc += a[i] * b[j] * c[k] * t[i][j][k];
            }
    return acc;
}

Rat pair(const BlowupModel&, const Div& d, const Cur& c) {
    // H.h = 1, H.fi = 0, Ei.h = 0, Ei.fj = -delta_ij
    return d.h * c.h - d.e1 * c.f1 - d.e2 * c.f2;
}

Rat flop_cubed_correction(const BlowupModel& m, const Div& d, const std::vector<Cur>& flopped) {
    const Div mk = m.minus_canonical();
    Rat acc = triple_product(m, d, d, d);
    for (const auto& c : flopped) {
        if (!pair(m, mk, c).is_zero()) {
            throw std::invalid_argument("flop_cubed_correction: class " + c.str() + " is not canonical-trivial");
        }
        const Rat dc = pair(m, d, c);
        acc -= dc * dc * dc;
    }
    return acc;
}

namespace {

NumerologyCheck make_check(std::string id, std::string description, const Rat& expected, const Rat& computed) {
    NumerologyCheck c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.expected = to_canonical_string(expected);
    c.computed = to_canonical_string(computed);
    c.pass = c.expected == c.computed;
    return c;
}

NumerologyCheck make_check_str(std::string id, std::string description, std::string expected, std::string computed) {
    NumerologyCheck c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.pass = c.expected == c.computed;
    return c;
}

}  // namespace

std::vector<NumerologyCheck> verify_construction_numerology(const BlowupModel& m) {
    std::vector<NumerologyCheck> out;
    const Div h{Rat(1), Rat(0), Rat(0)};
    const Div e1{Rat(0), Rat(1), Rat(0)};
    const Div e2{Rat(0), Rat(0), Rat(1)};
    const Div mk = m.minus_canonical();                  // 3H - E1 - E2 on the default model
    const Div big{Rat(8), Rat(-3), Rat(-3)};             // 8H - 3E1 - 3E2
    const Cur l{Rat(1), Rat(-2), Rat(-1)};               // secant class h - 2f1 - f2
    const Cur r{Rat(1), Rat(-1), Rat(-2)};               // secant class h - f1 - 2f2
    const Cur conic{Rat(2), Rat(-3), Rat(-3)};           // strict transform of the base conic

    out.push_back(make_check("e1_cubed", "E1^3 on the blow-up", Rat(-7), m.e_cubed(0)));
    out.push_back(make_check("e2_cubed", "E2^3 on the blow-up", Rat(-7), m.e_cubed(1)));
    out.push_back(make_check("h_e1_squared", "H.E1^2", Rat(-3), m.h_e_squared(0)));
    out.push_back(make_check("h_e2_squared", "H.E2^2", Rat(-3), m.h_e_squared(1)));
    out.push_back(make_check("normal_bundle", "degree of the normal bundle of each blown-up curve, 4+3",
                             Rat(7), m.normal_bundle_degree(0)));
    out.push_back(make_check("minus_k_cubed", "(-K_W)^3", Rat(14), triple_product(m, mk, mk, mk)));

    Rat nontrivial(0);
    for (const Cur& c : {l, r, conic}) {
        if (!pair(m, mk, c).is_zero()) nontrivial = Rat(1);
    }
    out.push_back(make_check("flopping_k_trivial",
                             "-K_W pairs to zero with h-2f1-f2, h-f1-2f2 and 2h-3f1-3f2",
                             Rat(0), nontrivial));

    out.push_back(make_check_str("conic_split", "2h-3f1-3f2 = (h-2f1-f2) + (h-f1-2f2)",
                                 conic.str(), (l + r).str()));

    out.push_back(make_check("big_cubed", "(8H-3E1-3E2)^3 before the flops", Rat(106),
                             triple_product(m, big, big, big)));

    const std::vector<Cur> flopped{l, l, l, r, r, r, conic};
    out.push_back(make_check("post_flop_cubed",
                             "(8H-3E1-3E2)^3 after flopping the seven curves: 106 - (6(-1)^3 + (-2)^3)",
                             Rat(120), flop_cubed_correction(m, big, flopped)));
    out.push_back(make_check("minus_kx_cubed", "(-K_X)^3 = (post-flop cube)/8", Rat(15),
                             flop_cubed_correction(m, big, flopped) / Rat(8)));

    out.push_back(make_check_str("h_decomposition", "H = (H-E1) + E1",
                                 h.str(), ((h - e1) + e1).str()));
    out.push_back(make_check_str("anticanonical_double",
                                 "2(3H-E1-E2) + (H-E1) + (H-E2) = 8H-3E1-3E2",
                                 big.str(), (Rat(2) * mk + (h - e1) + (h - e2)).str()));

    // Pairings against the flopped curves change sign across the flop.
    const Rat pl = -pair(m, big, l);
    const Rat pr = -pair(m, big, r);
    const Rat pc = -pair(m, big, conic);
    out.push_back(make_check_str("post_flop_pairings",
                                 "pairings of 8H-3E1-3E2 with the three flopped classes on the flopped side",
                                 "(1,1,2)",
                                 "(" + to_canonical_string(pl) + "," + to_canonical_string(pr) + "," + to_canonical_string(pc) + ")"));
    return out;
}

}  // namespace q3fold

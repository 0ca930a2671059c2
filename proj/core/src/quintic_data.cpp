#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "q3fold/grassmann.hpp"

namespace q3fold {

namespace {

// Exact copy of data/fq_quintic.txt: the tangency quintic on P^9 in the
// frozen Plucker coordinate order,
//   -x0^4 x1 + x0^3 x2^2 - 2 x0^3 x2 x9 + x0^3 x3 x5 + 4 x0^3 x4 x8 + x0^3 x9^2.
// This is the unique polynomial supported on the monomials of the source
// display (plus the forced x0^4 x1, the only monomial restricting to the
// pure b2 chart term) whose pullback along the chart embedding equals
// -4 det of the restricted-conic matrix; the composition map is injective
// on that support, so the coefficients are pinned exactly.
constexpr const char* kQuinticText =
    "terms 6 degree 5\n"
    "-1 4 1 0 0 0 0 0 0 0 0\n"
    "1 3 0 2 0 0 0 0 0 0 0\n"
    "-2 3 0 1 0 0 0 0 0 0 1\n"
    "1 3 0 0 1 0 1 0 0 0 0\n"
    "4 3 0 0 0 1 0 0 0 1 0\n"
    "1 3 0 0 0 0 0 0 0 0 2\n"
    "checksum a7221807b404d4db\n";

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const std::string& fq_quintic_text() {
    static const std::string text = kQuinticText;
    return text;
}

MPoly<Rat> parse_quintic_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("quintic data: empty");
    std::istringstream header(line);
    std::string kw_terms, kw_degree;
    long n_terms = 0, degree = 0;
    header >> kw_terms >> n_terms >> kw_degree >> degree;
    if (kw_terms != "terms" || kw_degree != "degree" || n_terms <= 0 || degree <= 0) {
        throw std::runtime_error("quintic data: bad header");
    }
    std::string body = line + "\n";
    MPoly<Rat> q(10);
    for (long t = 0; t < n_terms; ++t) {
        if (!std::getline(in, line)) throw std::runtime_error("quintic data: truncated");
        body += line + "\n";
        std::istringstream ts(line);
        long long coeff = 0;
        ts >> coeff;
        Expo e(10, 0);
        long total = 0;
        for (int i = 0; i < 10; ++i) {
            long long x = -1;
            if (!(ts >> x) || x < 0) throw std::runtime_error("quintic data: bad exponent");
            e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x);
            total += x;
        }
        if (coeff == 0) throw std::runtime_error("quintic data: zero term");
        if (total != degree) throw std::runtime_error("quintic data: term degree mismatch");
        q.add_term(e, Rat(coeff));
    }
    if (!std::getline(in, line)) throw std::runtime_error("quintic data: missing checksum");
    std::istringstream cs(line);
    std::string kw_checksum, hex;
    cs >> kw_checksum >> hex;
    if (kw_checksum != "checksum") throw std::runtime_error("quintic data: missing checksum line");
    char computed[17];
    std::snprintf(computed, sizeof computed, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    if (hex != computed) {
        throw std::runtime_error("quintic data: checksum mismatch (" + hex + " vs " + computed + ")");
    }
    if (q.term_count() != static_cast<std::size_t>(n_terms)) {
        throw std::runtime_error("quintic data: duplicate terms");
    }
    return q;
}

const MPoly<Rat>& fq_quintic() {
    static const MPoly<Rat> q = parse_quintic_text(fq_quintic_text());
    return q;
}

MPoly<Fp> fq_quintic_mod(std::uint64_t p) {
    FpField field(p);
    MPoly<Fp> out(10);
    for (const auto& [e, c] : fq_quintic().terms()) {
        // All coefficients are small integers.
        const Int num = numerator(c);
        out.add_term(e, Fp::of(static_cast<long long>(num), p));
    }
    return out;
}

}  // namespace q3fold

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace q3fold {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// normalized by the backend: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Canonical fraction string: "n" for integers, "n/d" otherwise.
inline std::string to_canonical_string(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1) {
        os << numerator(r);
    } else {
        os << numerator(r) << '/' << denominator(r);
    }
    return os.str();
}

inline std::string to_canonical_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

// Uniform access to scalar operations for the generic polynomial and matrix
// code. The "like" argument supplies context (e.g. the prime of a finite
// field element); exact rationals ignore it.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_field = true;
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat from_int(long v, const Rat&) { return Rat(v); }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static std::string str(const Rat& x) { return to_canonical_string(x); }
};

}  // namespace q3fold

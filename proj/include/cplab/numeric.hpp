// Exact-arithmetic foundation: arbitrary-precision integers and rationals,
// a 50-significant-digit binary float for numeric witnesses, and the small
// number-theoretic helpers shared by the exact modules (totient, perfect
// squares, continued-fraction approximation, high-precision trig of
// rational turns).
//
// Convention used throughout the library: angles are stored as "turns",
// i.e. phi / 2pi, reduced rationals in [0, 1).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_of(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

// Reduce a rational turn into the canonical window [0, 1).
inline Rational mod1(const Rational& turn) {
    Rational r = turn - Rational(floor_of(turn));
    if (r < 0) r += 1;  // guard against any stray representation
    return r;
}

// Round half to even at integer resolution.
inline BigInt round_half_even(const Rational& q) {
    BigInt fl = floor_of(q);
    Rational frac = q - Rational(fl);
    if (frac < Rational(1, 2)) return fl;
    if (frac > Rational(1, 2)) return fl + 1;
    return (fl % 2 == 0) ? fl : fl + 1;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Euler totient by trial division; intended for n up to ~10^9.
inline BigInt euler_totient(BigInt n) {
    if (n <= 0) throw std::invalid_argument("euler_totient: n must be positive");
    BigInt result = n;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// A non-negative rational is a perfect square iff numerator and denominator
// (in lowest terms) both are.
inline bool is_perfect_square(const Rational& q, Rational* root = nullptr) {
    if (q < 0) return false;
    BigInt rn, rd;
    if (!is_perfect_square(numerator(q), &rn)) return false;
    if (!is_perfect_square(denominator(q), &rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

inline Float50 to_float50(const Rational& q) {
    return Float50(numerator(q)) / Float50(denominator(q));
}

inline Float50 pi50() { return boost::math::constants::pi<Float50>(); }

// cos(2*pi*turn) and sin(2*pi*turn) at 50 significant digits. The turn is
// reduced mod 1 exactly before conversion, so the argument never exceeds 2*pi.
inline Float50 cos_turn50(const Rational& turn) {
    return cos(2 * pi50() * to_float50(mod1(turn)));
}

inline Float50 sin_turn50(const Rational& turn) {
    return sin(2 * pi50() * to_float50(mod1(turn)));
}

// Fixed 50-significant-digit decimal rendering, used for numeric witnesses.
inline std::string to_digits50(const Float50& x) { return x.str(50); }

// Exact rational value of a Float50 (binary fraction), for storing numeric
// approximations inside exact containers deterministically.
inline Rational rational_from_float50(const Float50& x) {
    if (x == 0) return Rational(0);
    int exp = 0;
    Float50 mant = frexp(x, &exp);
    // 170 bits cover the 50-digit precision of cpp_bin_float_50.
    const int bits = 170;
    BigInt m = BigInt(ldexp(mant, bits));
    Rational r(m);
    int shift = exp - bits;
    BigInt two = 1;
    two <<= (shift >= 0 ? shift : -shift);
    return shift >= 0 ? r * Rational(two) : r / Rational(two);
}

// Best rational approximation with denominator at most `max_den`, by
// continued-fraction convergents. Any rational p/q, q <= max_den, lying
// within 1/(2 q max_den) of x is one of the returned convergents, so a gap
// certified against these convergents is a gap against every such rational.
inline std::vector<Rational> convergents(Float50 x, const BigInt& max_den) {
    std::vector<Rational> out;
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // p_{-2}/q_{-2}, p_{-1}/q_{-1}
    for (int iter = 0; iter < 200; ++iter) {
        Float50 fl = floor(x);
        BigInt a = BigInt(fl);
        BigInt h2 = a * h1 + h0;
        BigInt k2 = a * k1 + k0;
        if (k2 > max_den) break;
        out.emplace_back(h2, k2);
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Float50 frac = x - fl;
        if (frac < Float50("1e-48")) break;
        x = 1 / frac;
    }
    return out;
}

// Smallest distance from x to any rational with denominator <= max_den.
// Exact enough for certifying gaps down to ~1e-45.
inline Float50 nearest_rational_gap(const Float50& x, const BigInt& max_den) {
    Float50 best = fabs(x - floor(x + Float50(0.5)));
    for (const Rational& c : convergents(x, max_den)) {
        Float50 d = fabs(x - to_float50(c));
        if (d < best) best = d;
    }
    return best;
}

}  // namespace cplab

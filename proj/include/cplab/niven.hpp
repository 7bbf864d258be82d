// Exact rationality classification of cos(2*pi*turn) for rational turns.
//
// For a reduced turn j/n the algebraic degree of cos(2*pi*j/n) over Q is
// phi(n)/2 (n >= 3), so rationality is decidable from n alone:
//
//     degree 1  <=>  n in {1, 2, 3, 4, 6}  <=>  cos in {0, +-1/2, +-1}
//
// Degree-2 denominators are n in {5, 8, 10, 12}; their cosines are the
// quadratic surds tabulated below. Larger denominators are reported with
// their degree and a 50-digit numeric value only.
//
// The sine classifier is the quarter-turn shift: sin(2*pi*t) = cos(2*pi*(1/4 - t)).

#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cplab/numeric.hpp"

namespace cplab {

enum class CosKind { Rational, QuadraticSurd, HigherDegree };

// a + b*sqrt(d), with d squarefree > 1 and b != 0.
struct QuadSurd {
    Rational a;
    Rational b;
    BigInt d;

    Float50 numeric() const { return to_float50(a) + to_float50(b) * sqrt(Float50(d)); }

    // (a + b sqrt d)^2 = a^2 + b^2 d + 2ab sqrt d; rational iff a*b = 0.
    bool square_is_rational() const { return a == 0 || b == 0; }
    Rational square_rational_part() const { return a * a + b * b * Rational(d); }

    std::string str() const {
        std::ostringstream os;
        os << a << " + " << b << "*sqrt(" << d << ")";
        return os.str();
    }
};

struct CosineClass {
    Rational turn;    // input reduced mod 1
    BigInt denom;     // reduced denominator n of the turn
    BigInt degree;    // algebraic degree of the cosine over Q
    CosKind kind = CosKind::HigherDegree;
    Rational value;                 // meaningful iff kind == Rational
    std::optional<QuadSurd> surd;   // meaningful iff kind == QuadraticSurd
    Float50 numeric;                // always set

    bool is_rational() const { return kind == CosKind::Rational; }
};

namespace detail {

inline Rational rational_cosine(const BigInt& n, const BigInt& j) {
    if (n == 1) return 1;
    if (n == 2) return -1;
    if (n == 3) return Rational(-1, 2);
    if (n == 4) return 0;
    if (n == 6) return Rational(1, 2);
    throw std::logic_error("rational_cosine: denominator not exceptional");
    (void)j;
}

inline QuadSurd surd_cosine(const BigInt& n, const BigInt& j) {
    const Rational q(1, 4), h(1, 2);
    if (n == 5) return (j == 1 || j == 4) ? QuadSurd{-q, q, 5} : QuadSurd{-q, -q, 5};
    if (n == 8) return (j == 1 || j == 7) ? QuadSurd{0, h, 2} : QuadSurd{0, -h, 2};
    if (n == 10) return (j == 1 || j == 9) ? QuadSurd{q, q, 5} : QuadSurd{q, -q, 5};
    if (n == 12) return (j == 1 || j == 11) ? QuadSurd{0, h, 3} : QuadSurd{0, -h, 3};
    throw std::logic_error("surd_cosine: denominator not quadratic");
}

}  // namespace detail

inline CosineClass niven_classify(const Rational& turn) {
    CosineClass c;
    c.turn = mod1(turn);
    c.denom = denominator(c.turn);
    BigInt j = numerator(c.turn);
    c.degree = (c.denom <= 2) ? BigInt(1) : euler_totient(c.denom) / 2;
    c.numeric = cos_turn50(c.turn);

    if (c.denom == 1 || c.denom == 2 || c.denom == 3 || c.denom == 4 || c.denom == 6) {
        c.kind = CosKind::Rational;
        c.value = detail::rational_cosine(c.denom, j);
    } else if (c.denom == 5 || c.denom == 8 || c.denom == 10 || c.denom == 12) {
        c.kind = CosKind::QuadraticSurd;
        c.surd = detail::surd_cosine(c.denom, j);
    } else {
        c.kind = CosKind::HigherDegree;
    }
    return c;
}

inline CosineClass sine_classify(const Rational& turn) {
    CosineClass c = niven_classify(Rational(1, 4) - turn);
    c.turn = mod1(turn);  // report the caller's turn, not the shifted one
    return c;
}

}  // namespace cplab

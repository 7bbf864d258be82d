// Exact polar complex values A*e^{i*phi}, stored as rational A^2 ("amp2")
// and rational turn phi/2pi. Membership in C_p means amp2 = m/p and
// turn = n/p for integers m, n; equivalently both reduced denominators
// divide p.
//
// Multiplication is closed (amp2 multiplies, turns add mod 1). Addition is
// not: for equal amplitudes
//
//     |a + b|^2 = 2 A^2 (1 + cos(2*pi*(ta - tb)))
//
// and the cosine of a rational turn is rational only at {0, +-1/2, +-1},
// so try_add returns a verdict rather than pretending closure. For unequal
// amplitudes
//
//     |a + b|^2 = A_a^2 + A_b^2 + 2 sqrt(A_a^2 A_b^2) cos(2*pi*dt)
//
// whose rationality is decided exactly in every case (see try_add); the
// result's *turn*, however, is only pinned down for collinear operands, so
// non-collinear sums with rational amp2 come back Indeterminate rather
// than Member.

#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cplab/niven.hpp"
#include "cplab/numeric.hpp"

namespace cplab {

struct ExactPolar {
    Rational amp2;  // A^2 >= 0
    Rational turn;  // phi/2pi in [0, 1); canonically 0 for the zero value
    bool zero = true;

    static ExactPolar zero_value() { return ExactPolar{}; }

    static ExactPolar from_amp2_turn(const Rational& amp2, const Rational& turn) {
        if (amp2 < 0) throw std::invalid_argument("ExactPolar: amp2 must be non-negative");
        ExactPolar x;
        if (amp2 == 0) return x;
        x.amp2 = amp2;
        x.turn = mod1(turn);
        x.zero = false;
        return x;
    }

    bool operator==(const ExactPolar& o) const {
        return zero == o.zero && amp2 == o.amp2 && turn == o.turn;
    }
};

// m/p amplitude-squared, n/p turn.
inline ExactPolar make_cp(const BigInt& m, const BigInt& n, const BigInt& p) {
    if (p < 1) throw std::invalid_argument("make_cp: p must be >= 1");
    if (m < 0) throw std::invalid_argument("make_cp: m must be >= 0");
    BigInt nn = ((n % p) + p) % p;
    return ExactPolar::from_amp2_turn(Rational(m, p), Rational(nn, p));
}

inline bool is_member(const ExactPolar& x, const BigInt& p) {
    if (p < 1) throw std::invalid_argument("is_member: p must be >= 1");
    if (x.zero) return true;
    return p % denominator(x.amp2) == 0 && p % denominator(x.turn) == 0;
}

// Least p such that x lies in C_p.
inline BigInt minimal_p(const ExactPolar& x) {
    if (x.zero) return 1;
    return lcm(denominator(x.amp2), denominator(x.turn));
}

inline ExactPolar mul(const ExactPolar& a, const ExactPolar& b) {
    if (a.zero || b.zero) return ExactPolar::zero_value();
    return ExactPolar::from_amp2_turn(a.amp2 * b.amp2, a.turn + b.turn);
}

enum class Closure { Member, NonMember, Indeterminate };

struct ClosureVerdict {
    Closure tag = Closure::Indeterminate;
    BigInt p = 0;                          // minimal p, set iff tag == Member
    std::optional<Rational> exact_amp2;    // exact |result|^2 when known
    std::optional<QuadSurd> surd_amp2;     // exact surd form when available
    std::string reason;
    std::string numeric_amp2;              // 50-significant-digit witness

    bool member() const { return tag == Closure::Member; }
};

struct AddResult {
    ExactPolar value;  // exact iff verdict.tag == Member
    ClosureVerdict verdict;
};

namespace detail {

inline ClosureVerdict member_verdict(const ExactPolar& v) {
    ClosureVerdict w;
    w.tag = Closure::Member;
    w.p = minimal_p(v);
    w.exact_amp2 = v.amp2;
    w.numeric_amp2 = to_digits50(to_float50(v.amp2));
    std::ostringstream os;
    os << "exact: amp2 = " << v.amp2 << ", turn = " << v.turn << ", member of C_" << w.p;
    w.reason = os.str();
    return w;
}

// Numeric sum at 50 digits, used for the approximate value on verdicts
// that are not Member.
inline void numeric_sum(const ExactPolar& a, const ExactPolar& b, Float50& amp2, Float50& turn) {
    Float50 aa = sqrt(to_float50(a.amp2)), ab = sqrt(to_float50(b.amp2));
    Float50 re = aa * cos_turn50(a.turn) + ab * cos_turn50(b.turn);
    Float50 im = aa * sin_turn50(a.turn) + ab * sin_turn50(b.turn);
    amp2 = re * re + im * im;
    Float50 tp = atan2(im, re) / (2 * pi50());
    if (tp < 0) tp += 1;
    turn = tp;
}

inline ExactPolar approx_polar(const Float50& amp2, const Float50& turn) {
    if (amp2 == 0) return ExactPolar::zero_value();
    return ExactPolar::from_amp2_turn(rational_from_float50(amp2), rational_from_float50(turn));
}

}  // namespace detail

// Exact Euler-form addition with a closure verdict. Equal-amplitude sums and
// collinear sums are decided completely; in every remaining case the
// rationality of |a+b|^2 is still decided exactly, but a rational amp2 with
// an unresolved turn is reported Indeterminate, never Member.
inline AddResult try_add(const ExactPolar& a, const ExactPolar& b) {
    if (a.zero) return {b, detail::member_verdict(b)};
    if (b.zero) return {a, detail::member_verdict(a)};

    const Rational dturn = a.turn - b.turn;          // in (-1, 1)
    const CosineClass cc = niven_classify(dturn);    // cos(2*pi*dturn)
    const bool half_angle_negative = abs(dturn) > Rational(1, 2);

    Float50 num_amp2, num_turn;
    detail::numeric_sum(a, b, num_amp2, num_turn);

    ClosureVerdict w;
    w.numeric_amp2 = to_digits50(num_amp2);

    if (a.amp2 == b.amp2) {
        // sum = 2 A cos(pi*dt) e^{2*pi*i*(ta+tb)/2}
        if (cc.is_rational()) {
            Rational amp2 = 2 * a.amp2 * (1 + cc.value);
            if (amp2 == 0) {
                ExactPolar v = ExactPolar::zero_value();
                return {v, detail::member_verdict(v)};
            }
            Rational turn = (a.turn + b.turn) / 2 + (half_angle_negative ? Rational(1, 2) : 0);
            ExactPolar v = ExactPolar::from_amp2_turn(amp2, turn);
            return {v, detail::member_verdict(v)};
        }
        w.tag = Closure::NonMember;
        std::ostringstream os;
        os << "cos(2*pi*" << cc.turn << ") has algebraic degree phi(" << cc.denom << ")/2 = "
           << cc.degree << " > 1, so amp2 = 2*A^2*(1+cos) is irrational";
        w.reason = os.str();
        if (cc.kind == CosKind::QuadraticSurd) {
            const QuadSurd& s = *cc.surd;
            w.surd_amp2 = QuadSurd{2 * a.amp2 * (1 + s.a), 2 * a.amp2 * s.b, s.d};
        }
        Rational turn = mod1((a.turn + b.turn) / 2 + (half_angle_negative ? Rational(1, 2) : 0));
        ExactPolar v;
        v.zero = false;
        v.amp2 = rational_from_float50(num_amp2);  // approximate
        v.turn = turn;                             // exact even here
        return {v, w};
    }

    // Unequal amplitudes: amp2 = a2 + b2 + 2 sqrt(prod) cos.
    const Rational sum2 = a.amp2 + b.amp2;
    const Rational prod = a.amp2 * b.amp2;
    Rational prod_root;
    const bool prod_square = is_perfect_square(prod, &prod_root);

    if (cc.is_rational()) {
        if (cc.value == 0) {
            w.tag = Closure::Indeterminate;
            w.exact_amp2 = sum2;
            w.reason = "perpendicular sum: amp2 = A_a^2 + A_b^2 exactly, but the result turn "
                       "is not on a known rational grid";
            ExactPolar v;
            v.zero = false;
            v.amp2 = sum2;
            v.turn = rational_from_float50(num_turn);
            return {v, w};
        }
        if (prod_square) {
            Rational amp2 = sum2 + 2 * prod_root * cc.value;
            bool collinear = (cc.value == 1 || cc.value == -1);
            if (collinear) {
                // phase follows the larger amplitude
                Rational turn = (cc.value == 1 || a.amp2 > b.amp2) ? a.turn : b.turn;
                ExactPolar v = amp2 == 0 ? ExactPolar::zero_value()
                                         : ExactPolar::from_amp2_turn(amp2, turn);
                return {v, detail::member_verdict(v)};
            }
            w.tag = Closure::Indeterminate;
            w.exact_amp2 = amp2;
            w.reason = "amp2 is exactly rational (product of amplitudes is a perfect square) "
                       "but the result turn is not on a known rational grid";
            ExactPolar v;
            v.zero = false;
            v.amp2 = amp2;
            v.turn = rational_from_float50(num_turn);
            return {v, w};
        }
        w.tag = Closure::NonMember;
        std::ostringstream os;
        os << "amp2 = " << sum2 << " + " << 2 * cc.value << "*sqrt(" << prod
           << ") with a non-square radicand: irrational";
        w.reason = os.str();
    } else if (cc.kind == CosKind::QuadraticSurd) {
        const QuadSurd& s = *cc.surd;
        Rational cross_sq;  // (prod * d) square test for the pure-surd case
        if (s.a == 0 && is_perfect_square(prod * Rational(s.d), &cross_sq)) {
            // 2 sqrt(prod) * f sqrt(d) = 2 f sqrt(prod*d) is rational here.
            Rational amp2 = sum2 + 2 * s.b * cross_sq;
            w.tag = Closure::Indeterminate;
            w.exact_amp2 = amp2;
            w.reason = "surd cross-term collapses to a rational: amp2 exact, result turn "
                       "not on a known rational grid";
            ExactPolar v;
            v.zero = false;
            v.amp2 = amp2;
            v.turn = rational_from_float50(num_turn);
            return {v, w};
        }
        w.tag = Closure::NonMember;
        std::ostringstream os;
        os << "cross term 2*sqrt(" << prod << ")*(" << s.str() << ") is irrational";
        w.reason = os.str();
    } else {
        // cos has degree > 2; a rational amp2 would force it into Q(sqrt(prod)),
        // a field of degree <= 2. Contradiction, so amp2 is irrational.
        w.tag = Closure::NonMember;
        std::ostringstream os;
        os << "cos(2*pi*" << cc.turn << ") has degree phi(" << cc.denom << ")/2 = " << cc.degree
           << " > 2, incompatible with rational amp2";
        w.reason = os.str();
    }

    return {detail::approx_polar(num_amp2, num_turn), w};
}

struct MomentumResult {
    ExactPolar amplitude_factor;  // (sin(2*pi*t)/dx) * e^{i*0 or i*pi}
    ClosureVerdict verdict;
    CosineClass sine_class;
};

// Central-difference amplitude sin(2*pi*k_dx_turn)/dx of the discrete
// momentum form. The verdict follows the sine analogue of the rationality
// theorem: Member exactly when sin(2*pi*t) is rational (values 0, +-1/2,
// +-1); any irrational sine is reported NonMember even when its square
// happens to be rational (the square is still exposed on the result).
inline MomentumResult momentum_difference(const Rational& k_dx_turn, const Rational& dx) {
    if (dx <= 0) throw std::invalid_argument("momentum_difference: dx must be positive");

    MomentumResult r;
    r.sine_class = sine_classify(k_dx_turn);
    const CosineClass& sc = r.sine_class;
    const bool sine_nonneg = mod1(k_dx_turn) <= Rational(1, 2);

    if (sc.is_rational()) {
        Rational v = sc.value;
        if (v == 0) {
            r.amplitude_factor = ExactPolar::zero_value();
        } else {
            r.amplitude_factor = ExactPolar::from_amp2_turn(
                v * v / (dx * dx), v > 0 ? Rational(0) : Rational(1, 2));
        }
        r.verdict = detail::member_verdict(r.amplitude_factor);
        return r;
    }

    ClosureVerdict w;
    w.tag = Closure::NonMember;
    std::ostringstream os;
    os << "sin(2*pi*" << mod1(k_dx_turn) << ") has algebraic degree " << sc.degree
       << " > 1; not in {0, +-1/2, +-1}";
    w.reason = os.str();

    const QuadSurd* s = sc.surd ? &*sc.surd : nullptr;
    ExactPolar v;
    v.zero = false;
    v.turn = sine_nonneg ? Rational(0) : Rational(1, 2);
    if (s && s->square_is_rational()) {
        v.amp2 = s->square_rational_part() / (dx * dx);  // exact even though the sine is not
        w.exact_amp2 = v.amp2;
    } else {
        Float50 sn = sin_turn50(k_dx_turn) / to_float50(dx);
        v.amp2 = rational_from_float50(sn * sn);
    }
    if (s) w.surd_amp2 = *s;
    w.numeric_amp2 = to_digits50(Float50(to_float50(v.amp2)));
    r.amplitude_factor = v;
    r.verdict = w;
    return r;
}

}  // namespace cplab

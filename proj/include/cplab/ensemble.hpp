// Finite Hilbert states as bit-string ensembles. A qubit ensemble over
// length p carries m outcome labels +1 out of p, so the squared amplitude
// (Born weight) of outcome +1 is exactly m/p. Phases ride along as a power
// of the Omega_p operator and never touch the outcome labels, so Born
// frequencies are phase-invariant by construction.
//
// Tensor products are Cartesian products of the outcome strings. Singlet
// pair ensembles realize the relative-angle grid cos(theta) = 1 - 2m/p:
// exactly m of the p outcome rows agree, which makes the pair correlation
// the exact rational 2m/p - 1 = -cos(theta).

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cplab/bit_roots.hpp"
#include "cplab/numeric.hpp"

namespace cplab {

struct QubitEnsemble {
    std::size_t p = 1;           // power of 2
    BitString bits;              // outcome labels; count(+1) = m
    std::uint64_t phase_exponent = 0;  // mod 2p, realized by Omega_p^exponent

    std::size_t count(int outcome) const {
        std::size_t c = 0;
        for (auto e : bits.entries) c += (e == outcome);
        return c;
    }

    PhaseOperator phase() const {
        return PhaseOperator::make(p, static_cast<std::int64_t>(phase_exponent));
    }
};

// Canonical placement: first m entries +1, the rest -1.
inline QubitEnsemble make_qubit(std::size_t m, std::int64_t n, std::size_t p) {
    if (!is_power_of_two(p)) throw std::invalid_argument("make_qubit: p must be a power of 2");
    if (m > p) throw std::invalid_argument("make_qubit: m out of range");
    QubitEnsemble q;
    q.p = p;
    q.bits.entries.assign(p, -1);
    for (std::size_t i = 0; i < m; ++i) q.bits.entries[i] = +1;
    const std::int64_t period = 2 * static_cast<std::int64_t>(p);
    q.phase_exponent = static_cast<std::uint64_t>(((n % period) + period) % period);
    return q;
}

inline Rational born_frequency(const QubitEnsemble& q, int outcome) {
    if (outcome != 1 && outcome != -1) throw std::invalid_argument("born_frequency: outcome must be +-1");
    return Rational(q.count(outcome), q.p);
}

// Phase application is pure exponent arithmetic; outcome labels stay put.
inline QubitEnsemble apply_phase(const QubitEnsemble& q, std::int64_t n) {
    QubitEnsemble r = q;
    const std::int64_t period = 2 * static_cast<std::int64_t>(q.p);
    r.phase_exponent = static_cast<std::uint64_t>(
        ((static_cast<std::int64_t>(q.phase_exponent) + n) % period + period) % period);
    return r;
}

struct MultiQubitEnsemble {
    QubitEnsemble a, b;
    std::vector<std::pair<std::int8_t, std::int8_t>> joint;  // Cartesian product rows

    std::size_t rows() const { return joint.size(); }
};

inline MultiQubitEnsemble tensor(const QubitEnsemble& a, const QubitEnsemble& b) {
    MultiQubitEnsemble m;
    m.a = a;
    m.b = b;
    m.joint.reserve(a.p * b.p);
    for (auto ea : a.bits.entries)
        for (auto eb : b.bits.entries) m.joint.emplace_back(ea, eb);
    return m;
}

inline Rational joint_frequency(const MultiQubitEnsemble& m, int o1, int o2) {
    std::size_t c = 0;
    for (const auto& [x, y] : m.joint) c += (x == o1 && y == o2);
    return Rational(c, m.rows());
}

// Marginal count of the first (side=0) or second (side=1) factor, summed
// over the joint table.
inline Rational marginal_frequency(const MultiQubitEnsemble& m, int side, int outcome) {
    std::size_t c = 0;
    for (const auto& [x, y] : m.joint) c += ((side == 0 ? x : y) == outcome);
    return Rational(c, m.rows());
}

struct SingletPairEnsemble {
    std::size_t p = 1;
    std::size_t m = 0;  // number of agreeing rows; cos(theta) = 1 - 2m/p
    std::vector<std::pair<std::int8_t, std::int8_t>> rows;

    Rational cos_theta() const { return 1 - Rational(2 * BigInt(m), BigInt(p)); }
};

// Canonical rule: A alternates +1, -1 over all rows (zero marginal for even
// p); the first m rows agree, the rest anti-agree.
inline SingletPairEnsemble singlet_ensemble(std::size_t p, std::size_t m) {
    if (p == 0) throw std::invalid_argument("singlet_ensemble: p must be >= 1");
    if (m > p) throw std::invalid_argument("singlet_ensemble: m out of range");
    SingletPairEnsemble s;
    s.p = p;
    s.m = m;
    s.rows.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::int8_t a = (i % 2 == 0) ? +1 : -1;
        s.rows[i] = {a, static_cast<std::int8_t>(i < m ? a : -a)};
    }
    return s;
}

inline Rational correlation(const SingletPairEnsemble& s) {
    std::int64_t sum = 0;
    for (const auto& [a, b] : s.rows) sum += std::int64_t(a) * b;
    return Rational(sum, BigInt(s.p));
}

inline Rational marginal_a(const SingletPairEnsemble& s) {
    std::int64_t sum = 0;
    for (const auto& [a, b] : s.rows) { sum += a; (void)b; }
    return Rational(sum, BigInt(s.p));
}

inline void pair_table_csv(const SingletPairEnsemble& s, std::ostream& os) {
    os << "i,A,B\n";
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        os << i << "," << int(s.rows[i].first) << "," << int(s.rows[i].second) << "\n";
}

inline void frequency_table_csv(const QubitEnsemble& q, std::ostream& os) {
    os << "outcome,count,frequency\n";
    os << "+1," << q.count(+1) << "," << born_frequency(q, +1) << "\n";
    os << "-1," << q.count(-1) << "," << born_frequency(q, -1) << "\n";
}

}  // namespace cplab

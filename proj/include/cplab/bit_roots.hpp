// Bit-string realization of roots of unity. A BitString is a length-p
// sequence over {+1, -1}; the base operator Omega_p (p a power of 2) is
// defined by the halving rule
//
//     Omega_1(a)        = -a
//     Omega_p({S1, S2}) = {Omega_{p/2}(S2), S1}
//
// which for p = 4 maps {a1,a2,a3,a4} to {-a4, a3, a1, a2}. Omega_p is a
// signed permutation of multiplicative order exactly 2p, so it realizes
// e^{i*pi/p}: p applications negate the string, 2p restore it.
//
// Operators are kept as signed permutations (index + sign tables), never as
// dense matrices, so large p stays cheap.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplab {

struct BitString {
    std::vector<std::int8_t> entries;  // each +1 or -1

    std::size_t p() const { return entries.size(); }

    static BitString of(std::initializer_list<int> vals) {
        BitString s;
        for (int v : vals) s.entries.push_back(static_cast<std::int8_t>(v));
        s.validate();
        return s;
    }

    static BitString ones(std::size_t p) {
        BitString s;
        s.entries.assign(p, +1);
        return s;
    }

    static BitString random(std::size_t p, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        BitString s;
        s.entries.resize(p);
        for (auto& e : s.entries) e = (rng() & 1) ? +1 : -1;
        return s;
    }

    void validate() const {
        for (auto e : entries)
            if (e != 1 && e != -1) throw std::invalid_argument("BitString: entries must be +-1");
    }

    bool operator==(const BitString& o) const { return entries == o.entries; }
};

inline bool is_power_of_two(std::size_t p) { return p > 0 && (p & (p - 1)) == 0; }

inline BitString negate(const BitString& s) {
    BitString r = s;
    for (auto& e : r.entries) e = static_cast<std::int8_t>(-e);
    return r;
}

// A signed permutation: out[i] = sign[i] * in[src[i]].
struct SignedPerm {
    std::vector<std::uint32_t> src;
    std::vector<std::int8_t> sign;

    std::size_t p() const { return src.size(); }

    static SignedPerm identity(std::size_t p) {
        SignedPerm f;
        f.src.resize(p);
        f.sign.assign(p, +1);
        for (std::size_t i = 0; i < p; ++i) f.src[i] = static_cast<std::uint32_t>(i);
        return f;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < p(); ++i)
            if (src[i] != i || sign[i] != 1) return false;
        return true;
    }

    bool is_minus_identity() const {
        for (std::size_t i = 0; i < p(); ++i)
            if (src[i] != i || sign[i] != -1) return false;
        return true;
    }

    BitString apply(const BitString& s) const {
        if (s.p() != p()) throw std::invalid_argument("SignedPerm: length mismatch");
        BitString r;
        r.entries.resize(p());
        for (std::size_t i = 0; i < p(); ++i)
            r.entries[i] = static_cast<std::int8_t>(sign[i] * s.entries[src[i]]);
        return r;
    }

    // (a * b)(S) = a(b(S))
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
        if (a.p() != b.p()) throw std::invalid_argument("SignedPerm: length mismatch");
        SignedPerm c;
        c.src.resize(a.p());
        c.sign.resize(a.p());
        for (std::size_t i = 0; i < a.p(); ++i) {
            c.src[i] = b.src[a.src[i]];
            c.sign[i] = static_cast<std::int8_t>(a.sign[i] * b.sign[a.src[i]]);
        }
        return c;
    }

    bool operator==(const SignedPerm& o) const { return src == o.src && sign == o.sign; }
};

// The signed permutation of Omega_p, built by the halving rule.
inline SignedPerm omega_perm(std::size_t p) {
    if (!is_power_of_two(p)) throw std::invalid_argument("omega_perm: p must be a power of 2");
    if (p == 1) {
        SignedPerm f = SignedPerm::identity(1);
        f.sign[0] = -1;
        return f;
    }
    SignedPerm half = omega_perm(p / 2);
    SignedPerm f;
    f.src.resize(p);
    f.sign.resize(p);
    const std::size_t h = p / 2;
    for (std::size_t i = 0; i < h; ++i) {  // first half: Omega_{p/2} acting on S2
        f.src[i] = static_cast<std::uint32_t>(half.src[i] + h);
        f.sign[i] = half.sign[i];
    }
    for (std::size_t i = h; i < p; ++i) {  // second half: S1 shifted in unchanged
        f.src[i] = static_cast<std::uint32_t>(i - h);
        f.sign[i] = +1;
    }
    return f;
}

inline SignedPerm perm_pow(SignedPerm base, std::uint64_t n) {
    SignedPerm acc = SignedPerm::identity(base.p());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

inline BitString omega_apply(const BitString& s) {
    if (!is_power_of_two(s.p())) throw std::invalid_argument("omega_apply: p must be a power of 2");
    return omega_perm(s.p()).apply(s);
}

// Least k > 0 with Omega_p^k = identity. The order divides a power of two,
// so successive squaring pins it down exactly.
inline std::uint64_t order_of(std::size_t p) {
    SignedPerm b = omega_perm(p);
    std::uint64_t k = 1;
    while (!b.is_identity()) {
        b = b * b;
        k *= 2;
        if (k > (std::uint64_t(4) << 40))
            throw std::logic_error("order_of: order exceeded cap");
    }
    return k;
}

// Omega_p^n applied to S; realizes the phase e^{i*pi*n/p}. Periodic with
// period 2p in n.
inline BitString apply_phase(const BitString& s, std::int64_t n) {
    if (!is_power_of_two(s.p())) throw std::invalid_argument("apply_phase: p must be a power of 2");
    const std::int64_t period = 2 * static_cast<std::int64_t>(s.p());
    std::int64_t k = ((n % period) + period) % period;
    return perm_pow(omega_perm(s.p()), static_cast<std::uint64_t>(k)).apply(s);
}

// Omega_p^exponent as a value, for carrying phases around symbolically.
struct PhaseOperator {
    std::size_t p = 1;
    std::uint64_t exponent = 0;  // reduced mod 2p

    static PhaseOperator make(std::size_t p, std::int64_t exponent) {
        if (!is_power_of_two(p)) throw std::invalid_argument("PhaseOperator: p must be a power of 2");
        const std::int64_t period = 2 * static_cast<std::int64_t>(p);
        return PhaseOperator{p, static_cast<std::uint64_t>(((exponent % period) + period) % period)};
    }

    PhaseOperator times(const PhaseOperator& o) const {
        if (p != o.p) throw std::invalid_argument("PhaseOperator: mismatched p");
        return make(p, static_cast<std::int64_t>(exponent + o.exponent));
    }

    BitString apply(const BitString& s) const {
        return apply_phase(s, static_cast<std::int64_t>(exponent));
    }
};

// Compact serialization: 4-byte little-endian length header, then packed
// bits LSB-first, bit = 1 for +1.
inline std::vector<std::uint8_t> to_bytes(const BitString& s) {
    std::vector<std::uint8_t> out;
    const std::uint32_t n = static_cast<std::uint32_t>(s.p());
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((n >> (8 * i)) & 0xff));
    out.resize(4 + (s.p() + 7) / 8, 0);
    for (std::size_t i = 0; i < s.p(); ++i)
        if (s.entries[i] == 1) out[4 + i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    return out;
}

inline BitString from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4) throw std::invalid_argument("BitString: truncated header");
    std::uint32_t n = 0;
    for (int i = 0; i < 4; ++i) n |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
    if (bytes.size() != 4 + (static_cast<std::size_t>(n) + 7) / 8)
        throw std::invalid_argument("BitString: length mismatch");
    BitString s;
    s.entries.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.entries[i] = (bytes[4 + i / 8] >> (i % 8)) & 1 ? +1 : -1;
    return s;
}

}  // namespace cplab

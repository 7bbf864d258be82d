// Truncated p-adic integers as addresses in a nested-disk fractal: digit k
// selects one of p disks at refinement level k, with digit 0 the coarsest
// level (and the units digit of the integer encoding). Two ultrametric
// conventions are supported for the distance between addresses whose first
// disagreement is at level v:
//
//     standard: d = p^{-v}
//     paper:    d = p^{1-v}   (any point off a given disk at the top level
//                              is at least p-distant)
//
// Digit arithmetic (base-p with carries, least level first) agrees with
// integer arithmetic mod p^depth, so the truncated ring is closed under
// addition and multiplication even though the granular amplitude set C_p
// is not.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cplab/numeric.hpp"

namespace cplab {

struct PadicInt {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> digits;  // digits[0] = coarsest level (units)

    std::size_t depth() const { return digits.size(); }

    static PadicInt make(std::uint32_t p, std::vector<std::uint32_t> digits) {
        if (p < 2) throw std::invalid_argument("PadicInt: p must be >= 2");
        if (digits.empty()) throw std::invalid_argument("PadicInt: depth must be >= 1");
        for (auto d : digits)
            if (d >= p) throw std::invalid_argument("PadicInt: digit out of range");
        return PadicInt{p, std::move(digits)};
    }

    static PadicInt from_integer(BigInt v, std::uint32_t p, std::size_t depth) {
        if (p < 2) throw std::invalid_argument("PadicInt: p must be >= 2");
        if (depth == 0) throw std::invalid_argument("PadicInt: depth must be >= 1");
        BigInt modulus = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(depth));
        v = ((v % modulus) + modulus) % modulus;
        std::vector<std::uint32_t> ds(depth);
        for (std::size_t i = 0; i < depth; ++i) {
            ds[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        return PadicInt{p, std::move(ds)};
    }

    BigInt to_integer() const {
        BigInt v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
        return v;
    }

    bool operator==(const PadicInt& o) const { return p == o.p && digits == o.digits; }
};

enum class MetricConvention { standard, paper };

inline Rational distance(const PadicInt& x, const PadicInt& y, MetricConvention conv) {
    if (x.p != y.p) throw std::invalid_argument("distance: mismatched p");
    if (x.depth() != y.depth()) throw std::invalid_argument("distance: mismatched depth");
    std::size_t v = 0;
    while (v < x.depth() && x.digits[v] == y.digits[v]) ++v;
    if (v == x.depth()) return 0;
    BigInt pv = boost::multiprecision::pow(BigInt(x.p), static_cast<unsigned>(v));
    Rational d(1, pv);
    return conv == MetricConvention::paper ? d * x.p : d;
}

inline PadicInt add(const PadicInt& x, const PadicInt& y) {
    if (x.p != y.p) throw std::invalid_argument("add: mismatched p");
    std::size_t depth = std::min(x.depth(), y.depth());
    std::vector<std::uint32_t> out(depth);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        std::uint64_t s = std::uint64_t(x.digits[i]) + y.digits[i] + carry;
        out[i] = static_cast<std::uint32_t>(s % x.p);
        carry = s / x.p;
    }
    return PadicInt{x.p, std::move(out)};
}

inline PadicInt mul(const PadicInt& x, const PadicInt& y) {
    if (x.p != y.p) throw std::invalid_argument("mul: mismatched p");
    std::size_t depth = std::min(x.depth(), y.depth());
    std::vector<std::uint32_t> out(depth);
    BigInt carry = 0;
    for (std::size_t k = 0; k < depth; ++k) {
        BigInt col = carry;
        for (std::size_t i = 0; i <= k; ++i) col += BigInt(x.digits[i]) * y.digits[k - i];
        out[k] = static_cast<std::uint32_t>(col % x.p);
        carry = col / x.p;
    }
    return PadicInt{x.p, std::move(out)};
}

// One disk choice per refinement level, with its cluster label.
struct DiskLevel {
    std::size_t level = 0;
    std::uint32_t index = 0;
    std::string label;
};

struct DiskAddress {
    std::uint32_t p = 2;
    std::vector<DiskLevel> levels;
};

using DigitColoring = std::function<std::string(std::uint32_t digit)>;
using LevelColoring = std::function<std::string(std::size_t level, std::uint32_t digit)>;

// Parity coloring with a per-level letter: level 0 gives a / !a, level 1
// gives b / !b, and so on.
inline LevelColoring parity_coloring() {
    return [](std::size_t level, std::uint32_t digit) {
        std::string base(1, static_cast<char>('a' + level % 26));
        return digit % 2 == 0 ? base : "!" + base;
    };
}

inline PadicInt address_to_padic(const DiskAddress& addr) {
    if (addr.levels.empty()) throw std::invalid_argument("address_to_padic: empty address");
    std::vector<std::uint32_t> digits(addr.levels.size());
    for (std::size_t k = 0; k < addr.levels.size(); ++k) {
        const DiskLevel& lv = addr.levels[k];
        if (lv.level != k) throw std::invalid_argument("address_to_padic: levels must be consecutive");
        if (lv.index >= addr.p) throw std::invalid_argument("address_to_padic: disk index out of range");
        digits[k] = lv.index;
    }
    return PadicInt::make(addr.p, std::move(digits));
}

inline DiskAddress padic_to_address(const PadicInt& x, const LevelColoring& coloring) {
    DiskAddress addr;
    addr.p = x.p;
    for (std::size_t k = 0; k < x.depth(); ++k)
        addr.levels.push_back({k, x.digits[k], coloring(k, x.digits[k])});
    return addr;
}

inline std::string cluster_label(const PadicInt& x, std::size_t level, const DigitColoring& coloring) {
    if (level >= x.depth()) throw std::out_of_range("cluster_label: level out of range");
    return coloring(x.digits[level]);
}

// Pairwise distance matrix as CSV (row/column indices refer to the input order).
inline void distance_matrix_csv(const std::vector<PadicInt>& pts, MetricConvention conv,
                                std::ostream& os) {
    os << "i";
    for (std::size_t j = 0; j < pts.size(); ++j) os << ",d" << j;
    os << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << i;
        for (std::size_t j = 0; j < pts.size(); ++j) os << "," << distance(pts[i], pts[j], conv);
        os << "\n";
    }
}

}  // namespace cplab

#pragma once

#include <cstddef>
#include <vector>

#include "rps/rational.hpp"

namespace rps::detail {

// Exact but unreduced fraction. Summation trees and tail-sum comparisons
// only need exactness, so gcd reduction is deferred to the single point
// where a canonical Rational is materialized.
struct RawFraction {
    Integer num;
    Integer den; // > 0

    RawFraction() : num(0), den(1) {}
    RawFraction(Integer n, Integer d) : num(std::move(n)), den(std::move(d)) {}

    void add(const RawFraction& o) {
        num = num * o.den + o.num * den;
        den *= o.den;
    }

    // exact cross-multiplied comparison with a canonical rational
    int compare(const Rational& q) const {
        return cmp(Integer(num * q.den()), Integer(q.num() * den));
    }
    bool less_than(const Rational& q) const { return compare(q) < 0; }
    bool greater_than(const Rational& q) const { return compare(q) > 0; }
    bool greater_equal(const Rational& q) const { return compare(q) >= 0; }

    Rational to_rational() const { return Rational(num, den); }
};

// Balanced pairwise sum of terms[lo, hi). Keeps operand sizes even so the
// big multiplications stay near the top of the tree.
inline RawFraction sum_tree(std::vector<RawFraction>& terms, std::size_t lo, std::size_t hi) {
    if (hi == lo) return RawFraction();
    if (hi - lo == 1) return std::move(terms[lo]);
    std::size_t mid = lo + (hi - lo) / 2;
    RawFraction left = sum_tree(terms, lo, mid);
    RawFraction right = sum_tree(terms, mid, hi);
    left.add(right);
    return left;
}

inline RawFraction sum_tree(std::vector<RawFraction>& terms) {
    return sum_tree(terms, 0, terms.size());
}

} // namespace rps::detail

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rps/certify.hpp"
#include "rps/poly.hpp"
#include "rps/rational.hpp"

namespace rps {

// Rigorous majorant for the series tail: sum_{k>N} 1/f(k) < B, using
// f(k) >= a_m k^m and sum_{k>N} k^-m < N^(1-m)/(m-1). Degree < 2 diverges.
Rational tail_bound(const Poly& f, std::uint64_t N);

// [lo, hi] bracketing sum_{k>=1} 1/f(k): lo is the exact N-term partial
// sum, hi = lo + tail_bound. Widening N never widens the bracket.
struct Enclosure {
    Rational lo;
    Rational hi;
    std::uint64_t terms_used;
};

Enclosure alpha_enclosure(const Poly& f, std::uint64_t N);

// Decision for 1/f(k) <= sum_{i>=1} 1/f(k+i) by enclosure refinement.
// Equality cannot be confirmed by finite refinement, hence Undecided.
enum class KakeyaStatus { Holds, Fails, Undecided };

struct KakeyaVerdict {
    std::uint64_t k;
    KakeyaStatus verdict;
    std::uint64_t witness_depth; // tail terms examined at the decision point
};

KakeyaVerdict kakeya_check(const Poly& f, std::uint64_t k, unsigned max_depth = 64);
std::vector<KakeyaVerdict> kakeya_check_all(const Poly& f, std::uint64_t k_max,
                                            unsigned max_depth = 64);

std::string to_string(KakeyaStatus v);

// Greedy subseries selection: scan k = k_start, k_start+1, ... and take k
// exactly when 1/f(k) is strictly below the remaining gap; stop at the
// first moment the gap drops below epsilon. A term equal to the gap is
// skipped, keeping the final value strictly below the target.
struct GreedySelection {
    std::vector<std::uint64_t> indices; // strictly increasing
    Rational value;                     // target - epsilon < value < target
    Rational target;
    Rational epsilon;
};

GreedySelection greedy_subseries(const Poly& f, const Rational& target, const Rational& epsilon,
                                 std::uint64_t k_start = 1,
                                 std::uint64_t index_cap = 1'000'000);

// Finite exponent sequence with hsum value inside (target - epsilon, target):
// greedy indices keep exponent 1, every other index up to k_m gets an
// exponent large enough that the whole residue stays below epsilon/2.
struct BuiltSequence {
    std::uint64_t n;
    ExponentSeq exponents;
    Rational value;
    Rational target;
    Rational epsilon;
};

BuiltSequence build_sequence(const Poly& f, const Rational& target, const Rational& epsilon);

// Two sequences for f = x^2+1 whose sums bracket 1 from both sides within
// epsilon, each certified non-integral. Requires 0 < epsilon < 7/100 so
// that 1 + epsilon/2 stays safely below sum 1/(k^2+1).
std::pair<BuiltSequence, BuiltSequence> straddle_one(const Rational& epsilon);

} // namespace rps

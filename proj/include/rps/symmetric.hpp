#pragma once

#include <cstdint>
#include <vector>

#include "rps/certify.hpp"
#include "rps/poly.hpp"
#include "rps/rational.hpp"

namespace rps {

// Evaluation points a_1 < a_2 < ... : the positive integers with
// f(a) != 0, found by trial evaluation (f has at most deg integer roots).
std::vector<std::uint64_t> evaluation_points(const Poly& f, std::size_t n);

// k-th elementary symmetric function of 1/f(a_1)^{s_1}, ..., 1/f(a_n)^{s_n}
// (strictly increasing index tuples). Requires 1 <= k <= n.
Rational elementary_symmetric(const Poly& f, const ExponentSeq& s, std::uint32_t k);

// Complete-homogeneous analogue over non-decreasing index tuples. Repeated
// indices make k > n meaningful, so only k >= 1 is required.
Rational complete_symmetric(const Poly& f, const ExponentSeq& s, std::uint32_t k);

// Empirical scan for integer values of either symmetric sum over
// pseudo-random exponent sequences. Fully deterministic in
// (f, n_max, trials, seed): exponents come from a counter-based generator,
// uniform on [1, 8].
struct ScanHit {
    std::uint32_t trial; // 1-based
    std::uint32_t n;
    std::uint32_t k;
    bool complete_kind; // false: elementary, true: complete
    Rational value;
};

struct ScanReport {
    std::uint32_t n_max;
    std::uint32_t trials;
    std::uint64_t seed;
    std::vector<ScanHit> hits; // ordered by (trial, n, k, kind)
    std::uint32_t largest_hit_n; // 0 when no hits

    // smallest N consistent with the observations: every scanned n >= N
    // was integer-free
    std::uint32_t n_candidate() const { return largest_hit_n + 1; }
};

ScanReport conjecture_scan(const Poly& f, std::uint32_t n_max, std::uint32_t trials,
                           std::uint64_t seed);

} // namespace rps

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

// Deterministic primality for the full 64-bit range (Miller-Rabin with a
// base set proven exhaustive far beyond 2^64). n = 1 is not prime.
bool is_prime(std::uint64_t n);

// Smallest prime p with xi < p <= 2*xi and p = 1 (mod 4). Requires xi >= 7.
// Comparisons against the rational endpoints are exact, so half-open
// interval boundaries cannot be missed. The interval always contains such
// a prime for xi >= 7; an exhausted scan is an internal invariant failure.
std::uint64_t erdos_prime(const Rational& xi);

// Smallest positive root r_p of x^2+1 = 0 (mod p), for p = 1 (mod 4).
// Always r_p <= (p-1)/2: the computed root x is folded to min(x, p-x)
// since p-x is the other root.
std::uint64_t sqrt_minus_one(std::uint64_t p);

// Prime p = 1 (mod 4) whose smallest root of x^2+1 covers the index
// range: r_p <= n < p. Small n use a fixed table, n >= 7 searches (n, 2n).
struct CoveringPrime {
    std::uint64_t p;
    std::uint64_t r_p;
    std::uint64_t n; // the queried index bound, r_p <= n < p
};

CoveringPrime covering_prime(std::uint64_t n);

// Factorization result. complete() is false when the budget ran out; the
// unfactored cofactor is then carried alongside the partial factor list.
struct Factorization {
    std::vector<std::pair<Integer, unsigned>> factors; // (prime, exponent), primes ascending
    std::optional<Integer> cofactor;                   // set iff incomplete

    bool complete() const { return !cofactor.has_value(); }
};

// Trial division by all primes below 10^6, then Pollard rho (Brent cycle
// finding, deterministic parameter schedule) charged against `budget`
// iterations. Primality of cofactors below 2^64 is decided exactly;
// larger cofactors use GMP's probable-prime test, which is more than
// adequate for the desk-scale denominators this supports.
Factorization factorize(const Integer& n, std::uint64_t budget = 20'000'000);

// Shared sieve of primes below 10^6; built once, safe for concurrent readers.
std::span<const std::uint32_t> small_primes();

} // namespace rps

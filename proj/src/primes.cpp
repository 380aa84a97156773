#include "rps/primes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "rps/errors.hpp"

namespace rps {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// witness test for odd n > 2, n - 1 = d * 2^s
bool composite_witness(std::uint64_t a, std::uint64_t d, int s, std::uint64_t n) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set decides primality for every n < 3.3*10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull})
        if (composite_witness(a, d, s, n))
            return false;
    return true;
}

std::uint64_t erdos_prime(const Rational& xi) {
    if (xi < Rational(7))
        throw precondition_error("erdos_prime requires xi >= 7");
    if (xi > Rational(Integer("4611686018427387904"))) // 2^62, keeps 2*xi in range
        throw precondition_error("erdos_prime: xi out of supported range");
    // first integer strictly above xi
    Integer lowz;
    mpz_fdiv_q(lowz.get_mpz_t(), xi.num().get_mpz_t(), xi.den().get_mpz_t());
    std::uint64_t p = lowz.get_ui() + 1;
    const Integer two_num = 2 * xi.num();
    for (;; ++p) {
        if (Integer(static_cast<unsigned long>(p)) * xi.den() > two_num)
            throw internal_error("erdos_prime: no prime = 1 (mod 4) in (xi, 2*xi]");
        if (p % 4 == 1 && is_prime(p))
            return p;
    }
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
    if (p % 4 != 1 || !is_prime(p))
        throw no_root_error("x^2+1 has no root mod " + std::to_string(p) +
                            " usable here (need prime p = 1 mod 4)");
    // smallest quadratic non-residue g, then x = g^((p-1)/4) solves x^2 = -1
    std::uint64_t g = 2;
    while (powmod(g, (p - 1) / 2, p) != p - 1)
        ++g;
    std::uint64_t x = powmod(g, (p - 1) / 4, p);
    std::uint64_t r = std::min(x, p - x);
    if (mulmod(r, r, p) != p - 1)
        throw internal_error("sqrt_minus_one: root check failed");
    return r;
}

CoveringPrime covering_prime(std::uint64_t n) {
    if (n <= 1)
        throw precondition_error("covering_prime requires n >= 2");
    if (n > (std::uint64_t(1) << 62))
        throw precondition_error("covering_prime: n out of supported range");
    // small cases fall outside the xi >= 7 interval argument and are pinned
    if (n <= 4) return {5, 2, n};
    if (n <= 6) return {13, 5, n};
    for (std::uint64_t p = n + 1; p < 2 * n; ++p) {
        if (p % 4 != 1 || !is_prime(p)) continue;
        std::uint64_t r = sqrt_minus_one(p);
        if (r <= n)
            return {p, r, n};
    }
    // a prime = 1 (mod 4) exists in (n, 2n) for n >= 7, and its smaller
    // root is at most (p-1)/2 < n
    throw internal_error("covering_prime: search exhausted for n = " + std::to_string(n));
}

namespace {

std::vector<std::uint32_t> build_sieve(std::uint32_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            comp[j] = true;
    }
    return primes;
}

constexpr std::uint32_t kSieveLimit = 1'000'000;

} // namespace

std::span<const std::uint32_t> small_primes() {
    static const std::vector<std::uint32_t> primes = build_sieve(kSieveLimit);
    return primes;
}

namespace {

// Brent-variant rho with a fixed parameter schedule; consumes budget.
std::optional<Integer> rho_factor(const Integer& n, std::uint64_t& budget) {
    for (unsigned long c = 1; c < 64; ++c) {
        Integer y(2), x, q(1), g(1), ys;
        std::uint64_t r = 1;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
                if (budget < lim) return std::nullopt;
                budget -= lim;
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Integer d = x - y;
                    if (sgn(d) < 0) d = -d;
                    q = q * d % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
            if (budget == 0) return std::nullopt;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Integer d = x - ys;
                if (sgn(d) < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        // cycle degenerated for this c, try the next increment
    }
    return std::nullopt;
}

bool integer_is_prime(const Integer& n) {
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return is_prime(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

void factor_rec(const Integer& n, std::vector<Integer>& out, std::uint64_t& budget,
                std::optional<Integer>& leftover) {
    if (n == 1) return;
    if (integer_is_prime(n)) {
        out.push_back(n);
        return;
    }
    // perfect-power split is cheap and rho struggles on p^k
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                for (unsigned long i = 0; i < e; ++i)
                    factor_rec(root, out, budget, leftover);
                return;
            }
        }
    }
    auto d = rho_factor(n, budget);
    if (!d) {
        if (leftover)
            *leftover *= n;
        else
            leftover = n;
        return;
    }
    factor_rec(*d, out, budget, leftover);
    factor_rec(n / *d, out, budget, leftover);
}

} // namespace

Factorization factorize(const Integer& n, std::uint64_t budget) {
    if (sgn(n) <= 0)
        throw precondition_error("factorize requires n >= 1");
    Factorization result;
    Integer rest = n;
    for (std::uint32_t p : small_primes()) {
        if (rest == 1) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            result.factors.emplace_back(Integer(p), e);
        }
        if (static_cast<std::uint64_t>(p) * p > rest) break; // rest is 1 or prime
    }
    if (rest != 1) {
        std::vector<Integer> primes;
        std::optional<Integer> leftover;
        factor_rec(rest, primes, budget, leftover);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            result.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
        result.cofactor = leftover;
    }
    return result;
}

} // namespace rps

#include "rps/valuation.hpp"

#include "rps/primes.hpp"

namespace rps {

std::string to_string(const Valuation& v) {
    return v.is_infinite() ? "+inf" : std::to_string(v.value());
}

namespace {

std::int64_t remove_factor(const Integer& n, std::uint64_t p) {
    Integer rest;
    Integer pz(static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

Valuation padic_valuation(const Rational& q, std::uint64_t p) {
    if (!is_prime(p))
        throw input_error("p-adic valuation requires a prime, got " + std::to_string(p));
    if (q.is_zero())
        return Valuation::infinity();
    return Valuation::finite(remove_factor(q.num(), p) - remove_factor(q.den(), p));
}

Valuation padic_valuation(const Integer& n, std::uint64_t p) {
    return padic_valuation(Rational(n), p);
}

} // namespace rps

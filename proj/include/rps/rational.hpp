#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rps/errors.hpp"

namespace rps {

using Integer = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
// Canonical form is enforced eagerly at construction; every operation
// returns a canonical value, so num()/den() can be read directly by
// valuation and integrality checks.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_; // invariant: canonical (mpq_canonicalize'd)
};

Rational add(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);
Rational mul(const Rational& a, const Rational& b);
Rational div(const Rational& a, const Rational& b);

// Exact q^e. Negative e requires nonzero q.
Rational pow(const Rational& q, long e);

std::strong_ordering compare(const Rational& a, const Rational& b);

// Wire format: "num/den" in lowest terms, "n" alone when den = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "a" or "a/b" (b != 0); the result is canonicalized.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

} // namespace rps

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

// Integer-coefficient polynomial, coefficients stored low-to-high with a
// nonzero leading coefficient. Negative coefficients are representable
// (they serve the symmetric-function scanner); branch classification
// refuses them.
class Poly {
  public:
    // coeffs = (a_0, ..., a_m), a_m != 0.
    explicit Poly(std::vector<Integer> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& coeff(std::size_t i) const { return coeffs_[i]; }
    const Integer& leading() const { return coeffs_.back(); }

    // true iff every a_i >= 0 (then a_m >= 1)
    bool nonneg() const { return nonneg_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    std::vector<Integer> coeffs_;
    bool nonneg_;
};

// Exact Horner evaluation.
Integer eval(const Poly& f, const Integer& x);
Integer eval(const Poly& f, std::uint64_t k);

// Certificate routing for nonnegative-coefficient polynomials, in the
// order the branch bounds are established: a middle coefficient first,
// then pure powers, then binomials, with x^2+1 as the residual case.
enum class Branch {
    LinearReject,     // degree 1: settled separately, certifier refuses
    MiddleCoeff,      // some a_i != 0 with 1 <= i <= m-1 (f(k) >= k^2+k)
    PurePowerMonic,   // f = x^m
    PurePowerScaled,  // f = a_m x^m, a_m >= 2
    BinomialLarge,    // f = a_m x^m + a_0, a_m >= 2 or a_0 >= 2 (f(k) >= k^2+2)
    BinomialCubic,    // f = x^m + 1, m >= 3 (f(k) >= k^3+1)
    QuadraticPlusOne, // f = x^2 + 1
};

// Total on nonnegative-coefficient polynomials of degree >= 1; every such
// polynomial lands in exactly one branch.
Branch classify(const Poly& f);

std::string to_string(Branch b);
Branch parse_branch(const std::string& name);

// Text format: coefficient list low-to-high, e.g. "1,0,1" for x^2+1.
// Rejects empty lists and a zero leading coefficient.
std::string to_string(const Poly& f);
Poly parse_poly(const std::string& text);

} // namespace rps

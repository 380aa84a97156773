#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rps/poly.hpp"
#include "rps/primes.hpp"
#include "rps/rational.hpp"
#include "rps/valuation.hpp"

namespace rps {

// S_n = (s_1, ..., s_n), every s_k >= 1, n >= 1.
class ExponentSeq {
  public:
    explicit ExponentSeq(std::vector<std::uint32_t> exps);

    std::size_t size() const { return s_.size(); }
    // 1-based, matching the summation index
    std::uint32_t at(std::size_t k) const { return s_[k - 1]; }
    const std::vector<std::uint32_t>& values() const { return s_; }

    friend bool operator==(const ExponentSeq& a, const ExponentSeq& b) { return a.s_ == b.s_; }

  private:
    std::vector<std::uint32_t> s_;
};

std::string to_string(const ExponentSeq& s);
ExponentSeq parse_exponent_seq(const std::string& text);

// H_f(S_n) = sum_{k=1..n} 1/f(k)^{s_k}, exact. f(k) = 0 for some k <= n is
// an evaluation error (possible only with negative coefficients).
Rational hsum(const Poly& f, const ExponentSeq& s);

// Non-integrality certificate: either H is pinned strictly between two
// adjacent integers with an exact rational majorant, or a prime witnesses
// a negative p-adic valuation.
struct IntervalCert {
    std::int64_t floor_value; // floor_value < H < floor_value + 1
    Branch branch;
    Rational bound_witness; // H <= bound_witness < floor_value + 1
};

struct PadicCert {
    std::uint64_t p;   // prime, p = 1 (mod 4)
    std::uint64_t r_p; // root of x^2+1 mod p, r_p <= n < p
    int case_tag;      // 1: r_p <= n < p-r_p, 2: p-r_p <= n < p
    std::int64_t claimed_valuation; // = v_p(H) exactly, always < 0
};

struct Certificate {
    Poly f;
    ExponentSeq s;
    std::variant<IntervalCert, PadicCert> body;

    std::size_t n() const { return s.size(); }
    bool is_interval() const { return std::holds_alternative<IntervalCert>(body); }
    const IntervalCert& interval() const { return std::get<IntervalCert>(body); }
    const PadicCert& padic() const { return std::get<PadicCert>(body); }
};

// Produces a certificate whose claims re-check exactly. Degree-1 input is
// refused (the linear case is prior art, not covered by these forms);
// n = 1 bypasses the branch machinery: H = 1/f(1)^{s_1} is an integer iff
// f(1) = 1, and that lone integer case is reported as an error.
Certificate certify_noninteger(const Poly& f, const ExponentSeq& s);

// Independent re-check of every certificate claim. Shares only the exact
// arithmetic layer with generation: the sum, the polynomial values and
// the modular checks are recomputed locally. Malformed or false
// certificates yield ok = false with a short reason code.
struct VerifyResult {
    bool ok;
    std::string reason; // "ok" when valid

    explicit operator bool() const { return ok; }
};

VerifyResult verify_certificate(const Poly& f, const ExponentSeq& s, const Certificate& c);

// Membership in the unattainable set L: the lowest-terms denominator has
// a prime factor = 3 (mod 4). Indeterminate when the factoring budget ran
// out before the question was settled.
enum class LVerdict { InL, NotInL, Indeterminate };

LVerdict l_filter(const Rational& q, std::uint64_t factor_budget = 20'000'000);

std::string to_string(LVerdict v);

// Canonical JSON wire format (sorted keys, no whitespace); `verify`
// consumes exactly what `certify` emits, byte for byte.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& json_text);

} // namespace rps

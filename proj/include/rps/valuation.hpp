#pragma once

#include <cstdint>
#include <string>

#include "rps/rational.hpp"

namespace rps {

// v_p(x): finite for every nonzero rational, +infinity exactly for 0.
// The infinite value is an absorbing element for + and the max for
// ordering, which is what the ultrametric properties need.
class Valuation {
  public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::int64_t v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    std::int64_t value() const {
        if (infinite_) throw internal_error("value() on infinite valuation");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator==(const Valuation& a, std::int64_t v) {
        return !a.infinite_ && a.v_ == v;
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.v_ + b.v_);
    }
    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  private:
    Valuation(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::int64_t v_;
};

std::string to_string(const Valuation& v);

// v_p(q) = v_p(num) - v_p(den); +infinity iff q = 0.
// p must be prime (checked; composite p is an input error).
Valuation padic_valuation(const Rational& q, std::uint64_t p);
Valuation padic_valuation(const Integer& n, std::uint64_t p);

} // namespace rps

#include "rps/rational.hpp"

#include <cctype>

namespace rps {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw arithmetic_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw arithmetic_error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }
Rational& Rational::operator/=(const Rational& o) { *this = *this / o; return *this; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational add(const Rational& a, const Rational& b) { return a + b; }
Rational sub(const Rational& a, const Rational& b) { return a - b; }
Rational mul(const Rational& a, const Rational& b) { return a * b; }
Rational div(const Rational& a, const Rational& b) { return a / b; }
std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

Rational pow(const Rational& q, long e) {
    if (e == 0)
        return Rational(1);
    const bool invert = e < 0;
    if (invert && q.is_zero())
        throw arithmetic_error("negative power of zero");
    unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                              : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), ue);
    // gcd(num,den) = 1 implies gcd(num^e, den^e) = 1; the constructor
    // still re-canonicalizes to fix the sign when inverting.
    return invert ? Rational(d, n) : Rational(n, d);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.is_integer())
        return q.num().get_str();
    return q.num().get_str() + "/" + q.den().get_str();
}

namespace {

bool valid_int_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

} // namespace

Integer parse_integer(const std::string& text) {
    if (!valid_int_token(text))
        throw parse_error("not an integer: '" + text + "'");
    return Integer(text);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0)
        throw parse_error("zero denominator: '" + text + "'");
    return Rational(num, den);
}

} // namespace rps

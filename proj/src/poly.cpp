#include "rps/poly.hpp"

#include <algorithm>

#include "rps/errors.hpp"

namespace rps {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw input_error("polynomial needs at least one coefficient");
    if (sgn(coeffs_.back()) == 0)
        throw input_error("leading coefficient must be nonzero");
    nonneg_ = std::all_of(coeffs_.begin(), coeffs_.end(),
                          [](const Integer& c) { return sgn(c) >= 0; });
}

Integer eval(const Poly& f, const Integer& x) {
    Integer acc = f.leading();
    for (std::size_t i = f.degree(); i-- > 0;)
        acc = acc * x + f.coeff(i);
    return acc;
}

Integer eval(const Poly& f, std::uint64_t k) {
    return eval(f, Integer(static_cast<unsigned long>(k)));
}

Branch classify(const Poly& f) {
    if (!f.nonneg())
        throw input_error("classify requires nonnegative coefficients");
    const std::size_t m = f.degree();
    if (m == 0)
        throw input_error("classify requires degree >= 1");
    if (m == 1)
        return Branch::LinearReject;
    for (std::size_t i = 1; i < m; ++i)
        if (sgn(f.coeff(i)) != 0)
            return Branch::MiddleCoeff;
    if (sgn(f.coeff(0)) == 0)
        return f.leading() == 1 ? Branch::PurePowerMonic : Branch::PurePowerScaled;
    if (f.leading() >= 2 || f.coeff(0) >= 2)
        return Branch::BinomialLarge;
    // a_m = a_0 = 1
    return m >= 3 ? Branch::BinomialCubic : Branch::QuadraticPlusOne;
}

std::string to_string(Branch b) {
    switch (b) {
    case Branch::LinearReject: return "linear_reject";
    case Branch::MiddleCoeff: return "middle_coeff";
    case Branch::PurePowerMonic: return "pure_power_monic";
    case Branch::PurePowerScaled: return "pure_power_scaled";
    case Branch::BinomialLarge: return "binomial_large";
    case Branch::BinomialCubic: return "binomial_cubic";
    case Branch::QuadraticPlusOne: return "quadratic_plus_one";
    }
    throw internal_error("unknown branch tag");
}

Branch parse_branch(const std::string& name) {
    for (Branch b : {Branch::LinearReject, Branch::MiddleCoeff, Branch::PurePowerMonic,
                     Branch::PurePowerScaled, Branch::BinomialLarge, Branch::BinomialCubic,
                     Branch::QuadraticPlusOne})
        if (to_string(b) == name)
            return b;
    throw parse_error("unknown branch: '" + name + "'");
}

std::string to_string(const Poly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += f.coeff(i).get_str();
    }
    return out;
}

Poly parse_poly(const std::string& text) {
    if (text.empty())
        throw parse_error("empty polynomial");
    std::vector<Integer> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string token =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        coeffs.push_back(parse_integer(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (sgn(coeffs.back()) == 0)
        throw parse_error("leading coefficient must be nonzero: '" + text + "'");
    return Poly(std::move(coeffs));
}

} // namespace rps

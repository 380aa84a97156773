#include "rps/certify.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rps/detail/fraction_sum.hpp"
#include "rps/errors.hpp"

namespace rps {

ExponentSeq::ExponentSeq(std::vector<std::uint32_t> exps) : s_(std::move(exps)) {
    if (s_.empty())
        throw input_error("exponent sequence must be nonempty");
    for (auto v : s_)
        if (v == 0)
            throw input_error("exponents must be positive");
}

std::string to_string(const ExponentSeq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.values()[i]);
    }
    return out;
}

ExponentSeq parse_exponent_seq(const std::string& text) {
    if (text.empty())
        throw parse_error("empty exponent sequence");
    std::vector<std::uint32_t> vals;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string token =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        Integer v = parse_integer(token);
        if (sgn(v) <= 0 || !v.fits_uint_p())
            throw parse_error("exponent out of range: '" + token + "'");
        vals.push_back(static_cast<std::uint32_t>(v.get_ui()));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ExponentSeq(std::move(vals));
}

namespace {

Integer ipow(const Integer& base, std::uint32_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// one reciprocal term 1/f(k)^{s_k}, exact and unreduced
detail::RawFraction term_at(const Poly& f, std::uint64_t k, std::uint32_t sk) {
    Integer fk = eval(f, k);
    if (sgn(fk) == 0)
        throw input_error("f(" + std::to_string(k) + ") = 0: term undefined");
    Integer d = ipow(fk, sk);
    if (sgn(d) < 0)
        return {Integer(-1), Integer(-d)};
    return {Integer(1), std::move(d)};
}

} // namespace

Rational hsum(const Poly& f, const ExponentSeq& s) {
    std::vector<detail::RawFraction> terms;
    terms.reserve(s.size());
    for (std::uint64_t k = 1; k <= s.size(); ++k)
        terms.push_back(term_at(f, k, s.at(k)));
    return detail::sum_tree(terms).to_rational();
}

namespace {

// Per-branch rational majorants. The constants over-approximate the series
// limits involved (zeta(2) < 33/20, zeta(3) < 121/100, sum 1/(k^2+1) < 27/25)
// and are cross-checked against rigorous enclosures in the test suite.
Rational branch_witness(Branch b, std::size_t n) {
    switch (b) {
    case Branch::MiddleCoeff:
        // sum 1/(k^2+k) telescopes to 1 - 1/(n+1)
        return Rational(Integer(static_cast<unsigned long>(n)),
                        Integer(static_cast<unsigned long>(n + 1)));
    case Branch::PurePowerMonic:
        return Rational(33, 20);
    case Branch::PurePowerScaled:
        // half of the zeta(2) majorant
        return Rational(33, 40);
    case Branch::BinomialLarge:
        // sum 1/(k^2+2) < sum 1/(k^2+1) - 1/5 < 27/25 - 5/25
        return Rational(22, 25);
    case Branch::BinomialCubic:
        // zeta(3) - 37/72 < 121/100 - 37/72
        return Rational(121, 100) - Rational(37, 72);
    default:
        throw internal_error("no interval witness for this branch");
    }
}

Certificate make_interval(const Poly& f, const ExponentSeq& s, std::int64_t floor_value,
                          Branch b, Rational witness) {
    return Certificate{f, s, IntervalCert{floor_value, b, std::move(witness)}};
}

} // namespace

Certificate certify_noninteger(const Poly& f, const ExponentSeq& s) {
    if (!f.nonneg())
        throw input_error("certify_noninteger requires nonnegative coefficients");
    const Branch branch = classify(f); // also rejects degree 0
    if (branch == Branch::LinearReject)
        throw precondition_error(
            "degree-1 polynomials are not certified here: the linear case is settled "
            "by prior work on reciprocal sums of arithmetic progressions");

    const std::size_t n = s.size();
    if (n == 1) {
        // Direct check: H = 1/f(1)^{s_1} is an integer exactly when f(1) = 1.
        Integer f1 = eval(f, std::uint64_t(1));
        if (f1 == 1)
            throw precondition_error("n = 1 with f(1) = 1: the sum equals 1, an integer");
        Rational h = Rational(Integer(1), ipow(f1, s.at(1)));
        return make_interval(f, s, 0, branch, h);
    }

    switch (branch) {
    case Branch::MiddleCoeff:
    case Branch::PurePowerScaled:
    case Branch::BinomialLarge:
    case Branch::BinomialCubic:
        return make_interval(f, s, 0, branch, branch_witness(branch, n));
    case Branch::PurePowerMonic:
        // k = 1 contributes exactly 1 and n >= 2 adds a positive term
        return make_interval(f, s, 1, branch, branch_witness(branch, n));
    case Branch::QuadraticPlusOne:
        break;
    default:
        throw internal_error("unreachable branch");
    }

    // f = x^2+1: p-adic certificate through the covering prime.
    const CoveringPrime cp = covering_prime(n);
    const std::uint64_t p = cp.p, r = cp.r_p;
    PadicCert body;
    body.p = p;
    body.r_p = r;
    if (n < p - r) {
        // only k = r_p contributes negative p-valuation among k <= n
        body.case_tag = 1;
        body.claimed_valuation = -static_cast<std::int64_t>(s.at(r));
    } else {
        body.case_tag = 2;
        const std::uint32_t s_r = s.at(r), s_pr = s.at(p - r);
        if (s_r != s_pr) {
            body.claimed_valuation =
                -static_cast<std::int64_t>(std::max(s_r, s_pr));
        } else {
            // equal exponents: the two singular terms can interact, store
            // the exact valuation of the full sum
            Valuation v = padic_valuation(hsum(f, s), p);
            if (v.is_infinite() || v.value() >= 0)
                throw internal_error("case-2 valuation is not negative");
            body.claimed_valuation = v.value();
        }
    }
    return Certificate{f, s, body};
}

namespace {

// Everything below re-derives the claims from scratch: local Horner
// evaluation, local balanced summation, modular checks by plain integer
// arithmetic. Only the exact number layer is shared with generation.
Integer verify_eval(const std::vector<Integer>& coeffs, std::uint64_t k) {
    Integer x(static_cast<unsigned long>(k));
    Integer acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        acc = acc * x + coeffs[i];
    return acc;
}

Rational verify_sum(const Poly& f, const ExponentSeq& s) {
    // bottom-up balanced merge via a binary-counter stack
    std::vector<std::pair<Rational, int>> stack;
    for (std::uint64_t k = 1; k <= s.size(); ++k) {
        Integer fk = verify_eval(f.coeffs(), k);
        Integer d;
        mpz_pow_ui(d.get_mpz_t(), fk.get_mpz_t(), s.at(k));
        Rational term(Integer(1), d);
        int level = 0;
        while (!stack.empty() && stack.back().second == level) {
            term = term + stack.back().first;
            ++level;
            stack.pop_back();
        }
        stack.emplace_back(std::move(term), level);
    }
    Rational total(0);
    for (auto& [v, lvl] : stack)
        total = total + v;
    return total;
}

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

} // namespace

VerifyResult verify_certificate(const Poly& f, const ExponentSeq& s, const Certificate& c) {
    if (!(c.f == f) || !(c.s == s))
        return fail("input-mismatch");
    const std::size_t n = s.size();

    if (c.is_interval()) {
        const IntervalCert& ic = c.interval();
        const Rational lo(static_cast<long>(ic.floor_value));
        const Rational hi(static_cast<long>(ic.floor_value + 1));
        if (!(ic.bound_witness < hi))
            return fail("interval-witness-not-below-ceiling");
        Rational h = verify_sum(f, s);
        if (!(lo < h))
            return fail("interval-floor-violated");
        if (!(h <= ic.bound_witness))
            return fail("interval-witness-exceeded");
        return {true, "ok"};
    }

    const PadicCert& pc = c.padic();
    if (pc.p % 4 != 1 || !is_prime(pc.p))
        return fail("padic-p-not-prime-1-mod-4");
    if (pc.r_p == 0 || pc.r_p >= pc.p)
        return fail("padic-root-out-of-range");
    Integer root_check = (Integer(static_cast<unsigned long>(pc.r_p)) *
                              static_cast<unsigned long>(pc.r_p) +
                          1) %
                         Integer(static_cast<unsigned long>(pc.p));
    if (sgn(root_check) != 0)
        return fail("padic-root-not-a-root");
    const std::uint64_t r = pc.r_p, p = pc.p;
    if (!(r <= n && n < p))
        return fail("padic-n-outside-cover");
    const bool case1 = n < p - r;
    if (pc.case_tag != (case1 ? 1 : 2))
        return fail("padic-case-mismatch");
    if (pc.claimed_valuation >= 0)
        return fail("padic-valuation-not-negative");
    Rational h = verify_sum(f, s);
    Valuation v = padic_valuation(h, p);
    if (!(v == pc.claimed_valuation))
        return fail("padic-valuation-mismatch");
    return {true, "ok"};
}

LVerdict l_filter(const Rational& q, std::uint64_t factor_budget) {
    Factorization fac = factorize(q.den(), factor_budget);
    for (const auto& [prime, exp] : fac.factors)
        if (prime % 4 == 3)
            return LVerdict::InL;
    // every known factor is fine; an unfactored cofactor could still hide one
    return fac.complete() ? LVerdict::NotInL : LVerdict::Indeterminate;
}

std::string to_string(LVerdict v) {
    switch (v) {
    case LVerdict::InL: return "in_l";
    case LVerdict::NotInL: return "not_in_l";
    case LVerdict::Indeterminate: return "indeterminate";
    }
    throw internal_error("unknown l verdict");
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["f"] = to_string(c.f);
    j["s"] = c.s.values();
    j["n"] = c.n();
    if (c.is_interval()) {
        const IntervalCert& ic = c.interval();
        j["kind"] = "interval";
        j["floor"] = ic.floor_value;
        j["branch"] = to_string(ic.branch);
        j["bound_witness"] = to_string(ic.bound_witness);
    } else {
        const PadicCert& pc = c.padic();
        j["kind"] = "padic";
        j["p"] = pc.p;
        j["r_p"] = pc.r_p;
        j["case"] = pc.case_tag;
        j["valuation"] = pc.claimed_valuation;
    }
    return j.dump();
}

Certificate certificate_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
    try {
        Poly f = parse_poly(j.at("f").get<std::string>());
        ExponentSeq s(j.at("s").get<std::vector<std::uint32_t>>());
        if (j.at("n").get<std::size_t>() != s.size())
            throw parse_error("certificate n does not match sequence length");
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "interval") {
            IntervalCert ic{j.at("floor").get<std::int64_t>(),
                            parse_branch(j.at("branch").get<std::string>()),
                            parse_rational(j.at("bound_witness").get<std::string>())};
            return Certificate{std::move(f), std::move(s), std::move(ic)};
        }
        if (kind == "padic") {
            PadicCert pc{j.at("p").get<std::uint64_t>(), j.at("r_p").get<std::uint64_t>(),
                         j.at("case").get<int>(), j.at("valuation").get<std::int64_t>()};
            return Certificate{std::move(f), std::move(s), pc};
        }
        throw parse_error("unknown certificate kind: '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
}

} // namespace rps

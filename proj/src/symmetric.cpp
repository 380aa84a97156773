#include "rps/symmetric.hpp"

#include "rps/detail/splitmix.hpp"
#include "rps/errors.hpp"

namespace rps {

std::vector<std::uint64_t> evaluation_points(const Poly& f, std::size_t n) {
    std::vector<std::uint64_t> pts;
    pts.reserve(n);
    for (std::uint64_t a = 1; pts.size() < n; ++a)
        if (sgn(eval(f, a)) != 0)
            pts.push_back(a);
    return pts;
}

namespace {

std::vector<Rational> reciprocal_terms(const Poly& f, const ExponentSeq& s) {
    auto pts = evaluation_points(f, s.size());
    std::vector<Rational> terms;
    terms.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Integer d;
        Integer fa = eval(f, pts[i]);
        mpz_pow_ui(d.get_mpz_t(), fa.get_mpz_t(), s.values()[i]);
        terms.emplace_back(Integer(1), d);
    }
    return terms;
}

// e[0..k] after folding in each term; e[j] += t * e[j-1], j descending
std::vector<Rational> elementary_table(const std::vector<Rational>& terms, std::uint32_t k) {
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = Rational(1);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::uint32_t top = static_cast<std::uint32_t>(std::min<std::size_t>(i + 1, k));
        for (std::uint32_t j = top; j >= 1; --j)
            e[j] += terms[i] * e[j - 1];
    }
    return e;
}

// h[j] = h[j] + t * h[j-1], j ascending, allows index repetition
std::vector<Rational> complete_table(const std::vector<Rational>& terms, std::uint32_t k) {
    std::vector<Rational> h(k + 1, Rational(0));
    h[0] = Rational(1);
    for (const Rational& t : terms)
        for (std::uint32_t j = 1; j <= k; ++j)
            h[j] += t * h[j - 1];
    return h;
}

} // namespace

Rational elementary_symmetric(const Poly& f, const ExponentSeq& s, std::uint32_t k) {
    if (k < 1 || k > s.size())
        throw precondition_error("elementary_symmetric requires 1 <= k <= n");
    return elementary_table(reciprocal_terms(f, s), k)[k];
}

Rational complete_symmetric(const Poly& f, const ExponentSeq& s, std::uint32_t k) {
    if (k < 1)
        throw precondition_error("complete_symmetric requires k >= 1");
    return complete_table(reciprocal_terms(f, s), k)[k];
}

ScanReport conjecture_scan(const Poly& f, std::uint32_t n_max, std::uint32_t trials,
                           std::uint64_t seed) {
    if (n_max < 2 || trials < 1)
        throw precondition_error("conjecture_scan requires n_max >= 2 and trials >= 1");

    ScanReport report{n_max, trials, seed, {}, 0};
    for (std::uint32_t trial = 1; trial <= trials; ++trial) {
        std::vector<std::uint32_t> exps(n_max);
        for (std::uint32_t i = 0; i < n_max; ++i) {
            std::uint64_t counter = (static_cast<std::uint64_t>(trial) << 32) | (i + 1);
            exps[i] = 1 + static_cast<std::uint32_t>(detail::mix(seed, counter) % 8);
        }
        ExponentSeq s(exps);
        auto terms = reciprocal_terms(f, s);

        // grow both DP tables one term at a time; after term n we hold
        // every H^(k) and Hbar^(k) for that prefix
        std::vector<Rational> e(n_max + 1, Rational(0)), h(n_max + 1, Rational(0));
        e[0] = h[0] = Rational(1);
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            const Rational& t = terms[n - 1];
            for (std::uint32_t j = n; j >= 1; --j)
                e[j] += t * e[j - 1];
            for (std::uint32_t j = 1; j <= n_max; ++j)
                h[j] += t * h[j - 1];
            if (n < 2) continue;
            for (std::uint32_t k = 1; k <= n; ++k) {
                if (e[k].is_integer()) {
                    report.hits.push_back({trial, n, k, false, e[k]});
                    report.largest_hit_n = std::max(report.largest_hit_n, n);
                }
                if (h[k].is_integer()) {
                    report.hits.push_back({trial, n, k, true, h[k]});
                    report.largest_hit_n = std::max(report.largest_hit_n, n);
                }
            }
        }
    }
    return report;
}

} // namespace rps

#include "rps/density.hpp"

#include <algorithm>

#include "rps/detail/fraction_sum.hpp"
#include "rps/errors.hpp"

namespace rps {

Rational tail_bound(const Poly& f, std::uint64_t N) {
    const std::size_t m = f.degree();
    if (!f.nonneg() || m < 2)
        throw divergence_error("tail bound needs nonnegative coefficients and degree >= 2");
    if (N < 1)
        throw precondition_error("tail bound needs N >= 1");
    Integer npow;
    Integer nz(static_cast<unsigned long>(N));
    mpz_pow_ui(npow.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(m - 1));
    return Rational(Integer(1), f.leading() * static_cast<unsigned long>(m - 1) * npow);
}

namespace {


// exact sum_{k=a..b} 1/f(k), unreduced
detail::RawFraction partial_sum(const Poly& f, std::uint64_t a, std::uint64_t b) {
    std::vector<detail::RawFraction> terms;
    terms.reserve(b - a + 1);
    for (std::uint64_t k = a; k <= b; ++k)
        terms.emplace_back(Integer(1), eval(f, k));
    return detail::sum_tree(terms);
}

} // namespace

Enclosure alpha_enclosure(const Poly& f, std::uint64_t N) {
    if (f.degree() < 2 || !f.nonneg())
        throw divergence_error("series of 1/f diverges or is not positive: need "
                               "nonnegative coefficients and degree >= 2");
    if (N < 1)
        throw precondition_error("alpha_enclosure needs N >= 1");
    Rational lo = partial_sum(f, 1, N).to_rational();
    Rational hi = lo + tail_bound(f, N);
    return {std::move(lo), std::move(hi), N};
}

KakeyaVerdict kakeya_check(const Poly& f, std::uint64_t k, unsigned max_depth) {
    if (f.degree() < 2 || !f.nonneg())
        throw divergence_error("kakeya check needs nonnegative coefficients and degree >= 2");
    if (k < 1)
        throw precondition_error("kakeya check needs k >= 1");
    const Rational target(Integer(1), eval(f, k));
    detail::RawFraction partial; // sum_{i=1..T} 1/f(k+i)
    std::uint64_t tail_terms = 0;
    for (unsigned depth = 0; depth < max_depth && depth < 33; ++depth) {
        // 2^32 tail terms is already far beyond anything refinable; give
        // up with Undecided rather than grind on
        std::uint64_t want = std::uint64_t(1) << depth;
        if (want > tail_terms) {
            detail::RawFraction block = partial_sum(f, k + tail_terms + 1, k + want);
            partial.add(block);
            tail_terms = want;
        }
        if (partial.greater_equal(target))
            return {k, KakeyaStatus::Holds, tail_terms};
        // partial + tail bound strictly below the target refutes the condition
        Rational bound = tail_bound(f, k + tail_terms);
        detail::RawFraction upper = partial;
        upper.add(detail::RawFraction(bound.num(), bound.den()));
        if (upper.less_than(target))
            return {k, KakeyaStatus::Fails, tail_terms};
    }
    return {k, KakeyaStatus::Undecided, tail_terms};
}

std::vector<KakeyaVerdict> kakeya_check_all(const Poly& f, std::uint64_t k_max,
                                            unsigned max_depth) {
    std::vector<KakeyaVerdict> out;
    out.reserve(k_max);
    for (std::uint64_t k = 1; k <= k_max; ++k)
        out.push_back(kakeya_check(f, k, max_depth));
    return out;
}

std::string to_string(KakeyaStatus v) {
    switch (v) {
    case KakeyaStatus::Holds: return "holds";
    case KakeyaStatus::Fails: return "fails";
    case KakeyaStatus::Undecided: return "undecided";
    }
    throw internal_error("unknown kakeya status");
}

namespace {

// Reachability gate for degree >= 2: bracket sum_{k>=k_start} 1/f(k) with
// a fixed-depth partial sum. Targets at or beyond the bracket are
// unreachable; targets inside the bracket are rejected as too close to
// the supremum to guarantee success.
constexpr std::uint64_t kReachabilityTerms = 4096;

void check_reachable(const Poly& f, const Rational& target, std::uint64_t k_start) {
    const std::uint64_t last = k_start + kReachabilityTerms - 1;
    detail::RawFraction lo = partial_sum(f, k_start, last);
    if (lo.greater_than(target))
        return; // target strictly below a partial sum, greedy can reach it
    Rational bound = tail_bound(f, last);
    detail::RawFraction hi = lo;
    hi.add(detail::RawFraction(bound.num(), bound.den()));
    if (hi.greater_than(target))
        throw unreachable_target_error(
            "target too close to the attainable series value to guarantee greedy success");
    throw unreachable_target_error("target is at or above the attainable series value");
}

} // namespace

GreedySelection greedy_subseries(const Poly& f, const Rational& target, const Rational& epsilon,
                                 std::uint64_t k_start, std::uint64_t index_cap) {
    if (!f.nonneg() || f.degree() < 1)
        throw precondition_error("greedy selection needs nonnegative coefficients, degree >= 1");
    if (!(Rational(0) < target))
        throw precondition_error("greedy target must be positive");
    if (!(Rational(0) < epsilon && epsilon < target))
        throw precondition_error("need 0 < epsilon < target");
    if (k_start < 1)
        throw precondition_error("k_start must be >= 1");
    if (f.degree() >= 2)
        check_reachable(f, target, k_start);

    GreedySelection sel;
    sel.target = target;
    sel.epsilon = epsilon;
    Rational sum(0);
    Rational gap = target;
    for (std::uint64_t k = k_start;; ++k) {
        if (k > index_cap)
            throw resource_error("greedy selection exceeded the index cap");
        Rational term(Integer(1), eval(f, k));
        if (term < gap) {
            sel.indices.push_back(k);
            sum += term;
            gap = target - sum;
            if (gap < epsilon)
                break;
        }
    }
    sel.value = std::move(sum);
    if (!(target - epsilon < sel.value && sel.value < target))
        throw internal_error("greedy postcondition violated");
    return sel;
}

namespace {

// least s >= 1 with f(base)^s * eps > 2*k_m, by repeated multiplication
std::uint32_t boost_exponent(const Integer& fbase, std::uint64_t k_m, const Rational& eps) {
    if (fbase < 2)
        throw internal_error("boost base must have f(base) >= 2");
    const Integer threshold_num = 2 * Integer(static_cast<unsigned long>(k_m)) * eps.den();
    Integer pw = fbase;
    std::uint32_t s = 1;
    while (!(pw * eps.num() > threshold_num)) {
        pw *= fbase;
        ++s;
    }
    return s;
}

} // namespace

BuiltSequence build_sequence(const Poly& f, const Rational& target, const Rational& epsilon) {
    if (!f.nonneg() || f.degree() < 1)
        throw precondition_error("build_sequence needs nonnegative coefficients, degree >= 1");
    if (!(Rational(0) < epsilon && epsilon < target))
        throw precondition_error("need 0 < epsilon < target");

    const Integer f1 = eval(f, 1);
    const bool is_identity = f.degree() == 1 && f1 == 1; // f = x
    if (f.degree() >= 2 && f1 == 1)
        throw precondition_error("f(1) = 1 with degree >= 2 (a pure power): the tail "
                                 "condition fails at k = 1, sequences cannot be built");

    Rational greedy_target;
    std::uint64_t k_start;
    Integer fbase;
    if (is_identity) {
        // the k = 1 term is pinned to 1; approximate target - 1 over k >= 2
        if (!(target - Rational(1) > epsilon))
            throw precondition_error("f = x requires target > 1 + epsilon");
        greedy_target = target - Rational(1) - epsilon / Rational(2);
        k_start = 2;
        fbase = eval(f, 2);
    } else {
        greedy_target = target - epsilon / Rational(2);
        k_start = 1;
        fbase = f1;
    }
    GreedySelection sel =
        greedy_subseries(f, greedy_target, epsilon / Rational(2), k_start);

    const std::uint64_t k_m = sel.indices.back();
    const std::uint32_t boost = boost_exponent(fbase, k_m, epsilon);
    std::vector<std::uint32_t> exps(k_m, boost);
    if (is_identity)
        exps[0] = 1;
    for (std::uint64_t k : sel.indices)
        exps[k - 1] = 1;

    ExponentSeq seq(std::move(exps));
    Rational value = hsum(f, seq);

    // exact recheck of the construction: boosted residue below epsilon/2,
    // total inside the open window
    Rational forced = is_identity ? Rational(1) : Rational(0);
    Rational residue = value - forced - sel.value;
    if (!(residue < epsilon / Rational(2)))
        throw internal_error("boosted residue reached epsilon/2");
    if (!(target - epsilon < value && value < target))
        throw internal_error("built sequence left the target window");
    return {k_m, std::move(seq), std::move(value), target, epsilon};
}

std::pair<BuiltSequence, BuiltSequence> straddle_one(const Rational& epsilon) {
    // margin: 1 + epsilon/2 must stay below alpha; alpha > 107/100 comfortably
    // covers epsilon < 7/100
    if (!(Rational(0) < epsilon && epsilon < Rational(7, 100)))
        throw precondition_error("straddle_one requires 0 < epsilon < 7/100");
    const Poly f = parse_poly("1,0,1");
    BuiltSequence below = build_sequence(f, Rational(1), epsilon);
    BuiltSequence above = build_sequence(f, Rational(1) + epsilon / Rational(2),
                                         epsilon / Rational(2));
    if (!(Rational(1) - epsilon < below.value && below.value < Rational(1)))
        throw internal_error("lower straddle left its window");
    if (!(Rational(1) < above.value && above.value < Rational(1) + epsilon))
        throw internal_error("upper straddle left its window");
    // both sums certified non-integral, in particular != 1
    if (!verify_certificate(f, below.exponents, certify_noninteger(f, below.exponents)))
        throw internal_error("lower straddle certificate failed to verify");
    if (!verify_certificate(f, above.exponents, certify_noninteger(f, above.exponents)))
        throw internal_error("upper straddle certificate failed to verify");
    return {std::move(below), std::move(above)};
}

} // namespace rps

#include <doctest.h>

#include "rps/detail/splitmix.hpp"
#include "rps/errors.hpp"
#include "rps/poly.hpp"

using namespace rps;

TEST_CASE("evaluation is exact Horner") {
    Poly f = parse_poly("1,0,1"); // x^2+1
    CHECK(eval(f, std::uint64_t(2)) == 5);
    CHECK(eval(f, std::uint64_t(4)) == 17);
    Poly g = parse_poly("0,0,0,2"); // 2x^3
    CHECK(eval(g, std::uint64_t(3)) == 54);
    Poly h = parse_poly("3,-3,1"); // x^2-3x+3
    CHECK(eval(h, std::uint64_t(1)) == 1);
    CHECK(eval(h, std::uint64_t(2)) == 1);
    CHECK(eval(h, Integer(-2)) == 13);
}

TEST_CASE("parser accepts coefficient lists and rejects malformed ones") {
    CHECK(to_string(parse_poly("1,0,1")) == "1,0,1");
    CHECK(parse_poly("5").degree() == 0);
    CHECK(parse_poly("3,-3,1").nonneg() == false);
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("1,2,0"), parse_error); // zero leading coefficient
    CHECK_THROWS_AS(parse_poly("1,,1"), parse_error);
    CHECK_THROWS_AS(parse_poly("0"), parse_error);
    CHECK_THROWS_AS(parse_poly("1, 2"), parse_error); // no whitespace tolerated
}

TEST_CASE("classification follows the branch order") {
    CHECK(classify(parse_poly("0,1,1")) == Branch::MiddleCoeff);       // x^2+x
    CHECK(classify(parse_poly("1,0,1")) == Branch::QuadraticPlusOne);  // x^2+1
    CHECK(classify(parse_poly("1,0,0,1")) == Branch::BinomialCubic);   // x^3+1
    CHECK(classify(parse_poly("0,0,1")) == Branch::PurePowerMonic);    // x^2
    CHECK(classify(parse_poly("0,0,0,0,1")) == Branch::PurePowerMonic);
    CHECK(classify(parse_poly("0,0,3")) == Branch::PurePowerScaled);   // 3x^2
    CHECK(classify(parse_poly("2,0,1")) == Branch::BinomialLarge);     // x^2+2
    CHECK(classify(parse_poly("1,0,2")) == Branch::BinomialLarge);     // 2x^2+1
    CHECK(classify(parse_poly("1,0,9,0,0,1")) == Branch::MiddleCoeff); // middle term wins
    CHECK(classify(parse_poly("7,3")) == Branch::LinearReject);

    CHECK_THROWS_AS(classify(parse_poly("5")), input_error);          // degree 0
    CHECK_THROWS_AS(classify(parse_poly("3,-3,1")), input_error);     // negative coeff
}

namespace {

Poly random_nonneg_poly(detail::SplitMix& rng) {
    std::size_t deg = rng.uniform(1, 5);
    std::vector<Integer> c(deg + 1);
    for (std::size_t i = 0; i < deg; ++i)
        c[i] = Integer(static_cast<unsigned long>(rng.uniform(0, 9)));
    c[deg] = Integer(static_cast<unsigned long>(rng.uniform(1, 9)));
    return Poly(std::move(c));
}

bool branch_matches_definition(const Poly& f, Branch b) {
    const std::size_t m = f.degree();
    bool mid = false;
    for (std::size_t i = 1; i < m; ++i)
        if (sgn(f.coeff(i)) != 0) mid = true;
    const bool a0 = sgn(f.coeff(0)) != 0;
    switch (b) {
    case Branch::LinearReject: return m == 1;
    case Branch::MiddleCoeff: return m >= 2 && mid;
    case Branch::PurePowerMonic: return m >= 2 && !mid && !a0 && f.leading() == 1;
    case Branch::PurePowerScaled: return m >= 2 && !mid && !a0 && f.leading() >= 2;
    case Branch::BinomialLarge:
        return m >= 2 && !mid && a0 && (f.leading() >= 2 || f.coeff(0) >= 2);
    case Branch::BinomialCubic:
        return m >= 3 && !mid && f.coeff(0) == 1 && f.leading() == 1;
    case Branch::QuadraticPlusOne:
        return m == 2 && !mid && f.coeff(0) == 1 && f.leading() == 1;
    }
    return false;
}

} // namespace

TEST_CASE("every nonnegative polynomial of degree >= 1 lands in exactly one branch") {
    detail::SplitMix rng(4242);
    for (int i = 0; i < 3000; ++i) {
        Poly f = random_nonneg_poly(rng);
        Branch b = classify(f); // totality: no throw
        CHECK(branch_matches_definition(f, b));
        // exclusivity: no other branch's definition also matches
        for (Branch other : {Branch::LinearReject, Branch::MiddleCoeff, Branch::PurePowerMonic,
                             Branch::PurePowerScaled, Branch::BinomialLarge,
                             Branch::BinomialCubic, Branch::QuadraticPlusOne})
            if (other != b)
                CHECK(!branch_matches_definition(f, other));
    }
}

TEST_CASE("branch growth bounds hold on the checked range") {
    detail::SplitMix rng(777);
    // a few random members per bounded branch, all k up to 10^3
    std::vector<Poly> middles, larges, cubics;
    while (middles.size() < 5) {
        Poly f = random_nonneg_poly(rng);
        if (f.degree() >= 2 && classify(f) == Branch::MiddleCoeff) middles.push_back(f);
    }
    larges = {parse_poly("2,0,1"), parse_poly("1,0,2"), parse_poly("9,0,0,4"),
              parse_poly("2,0,0,0,1")};
    cubics = {parse_poly("1,0,0,1"), parse_poly("1,0,0,0,1"), parse_poly("1,0,0,0,0,1")};
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        Integer kk(static_cast<unsigned long>(k));
        for (const Poly& f : middles)
            CHECK(eval(f, k) >= kk * kk + kk);
        for (const Poly& f : larges)
            CHECK(eval(f, k) >= kk * kk + 2);
        for (const Poly& f : cubics)
            CHECK(eval(f, k) >= kk * kk * kk + 1);
    }
}

TEST_CASE("branch names round trip") {
    for (Branch b : {Branch::LinearReject, Branch::MiddleCoeff, Branch::PurePowerMonic,
                     Branch::PurePowerScaled, Branch::BinomialLarge, Branch::BinomialCubic,
                     Branch::QuadraticPlusOne})
        CHECK(parse_branch(to_string(b)) == b);
    CHECK_THROWS_AS(parse_branch("nope"), parse_error);
}

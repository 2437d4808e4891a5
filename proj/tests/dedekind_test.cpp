#include <numeric>

#include "doctest.h"
#include "ek7/dedekind.hpp"

using namespace ek7;

TEST_CASE("input validation") {
    CHECK_THROWS_AS(generalized_dedekind_sum(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(generalized_dedekind_sum(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(generalized_dedekind_sum(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(generalized_dedekind_sum(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generalized_dedekind_sum(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(sin_power_sum(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(sin_power_sum(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_summand(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_summand(5, 3, 5), std::invalid_argument);
}

TEST_CASE("empty sums") {
    CHECK(generalized_dedekind_sum(1, 1) == BigRational(0));
    CHECK(generalized_dedekind_sum(1, 7) == BigRational(0));
    CHECK(sin_power_sum(1, 1) == BigRational(0));
    CHECK(sin_power_sum(1, 2) == BigRational(0));
}

TEST_CASE("sin power sums match the closed forms") {
    CHECK(sin_power_sum(3, 1) == BigRational(8, 3));
    CHECK(sin_power_sum(5, 2) == BigRational(96, 5));  // 864/45
    for (long p = 1; p <= 31; p += 2) {
        BigInt pb(p);
        CHECK(sin_power_sum(p, 1) == BigRational(BigInt(pb * pb - 1), BigInt(3)));
        CHECK(sin_power_sum(p, 2) ==
              BigRational(BigInt(pb * pb * pb * pb + 10 * pb * pb - 11), BigInt(45)));
    }
}

TEST_CASE("small Dedekind sums") {
    // D(3,5) agrees with the closed form for q = p + 2 at p = 3:
    // (9-1)(27+27+27-27)/(2^6 * 3 * 7 * 9) = 432/12096 = 1/28.
    CHECK(generalized_dedekind_sum(3, 5) == BigRational(1, 28));
    CHECK(dedekind_closed_form_succ(3) == BigRational(1, 28));
    CHECK(dedekind_closed_form_succ(1) == BigRational(0));

    CHECK(generalized_dedekind_sum(3, 1) == BigRational(-1, 28));

    // q enters the second summand as a bare factor, so D is not periodic
    // in q: the two a-summands of D(3,7) evaluate to -3/56 each.
    CHECK(generalized_dedekind_sum(3, 7) == BigRational(-3, 28));
}

TEST_CASE("closed form for D(p, p+2)") {
    for (long p = 1; p <= 19; p += 2) {
        CHECK(generalized_dedekind_sum(p, p + 2) == dedekind_closed_form_succ(p));
    }
    CHECK_THROWS_AS(dedekind_closed_form_succ(4), std::invalid_argument);
}

TEST_CASE("duality defect is integral") {
    CHECK(duality_defect(1, 1) == BigRational(0));
    CHECK(duality_defect(3, 1).is_integer());
    CHECK(duality_defect(5, 3).is_integer());
    for (long p = 1; p <= 11; p += 2) {
        for (long q = 1; q <= 11; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(duality_defect(p, q).is_integer());
        }
    }
    // q well beyond 2p.
    CHECK(duality_defect(3, 25).is_integer());
    CHECK(duality_defect(9, 25).is_integer());
}

TEST_CASE("summands are symmetric under a -> p - a") {
    for (auto [p, q] : {std::pair<long, long>{5, 3}, {7, 9}, {9, 5}, {13, 3}, {15, 77}}) {
        for (long a = 1; a < p; ++a) {
            CHECK(dedekind_summand(p, q, a) == dedekind_summand(p, q, p - a));
        }
    }
}

TEST_CASE("halved summation doubles to the full sum") {
    for (auto [p, q] : {std::pair<long, long>{5, 3}, {7, 9}, {11, 7}, {13, 3}}) {
        FieldPtr field = CycloField::get(4 * p);
        CycloElement half = CycloElement::zero(field);
        for (long a = 1; a <= (p - 1) / 2; ++a) {
            half += dedekind_summand(p, q, a);
        }
        CHECK(half * BigRational(2) == dedekind_sum_element(p, q));
    }
}

TEST_CASE("pre-extraction element extracts to the sum") {
    CycloElement element = dedekind_sum_element(3, 5);
    CHECK(element.as_rational() == BigRational(1, 28));

    // Numeric cross-check at 192 bits: evaluate every summand element at
    // the complex root of unity and add in floating point. This route
    // only meets the exact one at the very end.
    BigRational tol(BigInt(1), BigInt("1000000000000000000000000000000"));
    for (auto [p, q] : {std::pair<long, long>{3, 1}, {9, 7}, {13, 11}, {15, 77}}) {
        BigFloat re(192), im(192);
        for (long a = 1; a < p; ++a) {
            ComplexApprox term = eval_float(dedekind_summand(p, q, a), 192);
            re += term.re;
            im += term.im;
        }
        CHECK(approx_equals(re, generalized_dedekind_sum(p, q), tol));
        CHECK(approx_equals(im, BigRational(0), tol));
    }
}

TEST_CASE("reconstructed mode agrees with exact mode") {
    DedekindOptions force;
    force.max_exact_p = 3;
    force.precision_bits = 192;
    for (auto [p, q] : {std::pair<long, long>{5, 3}, {13, 9}, {15, 77}, {25, 7}}) {
        DedekindValue rec = evaluate_dedekind_sum(p, q, force);
        DedekindValue exact = evaluate_dedekind_sum(p, q);
        CHECK(rec.reconstructed);
        CHECK_FALSE(exact.reconstructed);
        CHECK(rec.value == exact.value);
    }
    CHECK_FALSE(evaluate_dedekind_sum(3, 5, force).reconstructed);

    DedekindOptions starved = force;
    starved.precision_bits = 64;
    CHECK_THROWS_AS(evaluate_dedekind_sum(25, 7, starved), std::invalid_argument);
}

TEST_CASE("moderately large exact sums stay rational") {
    // Exercises the escalation-free fast path at the top of the exact range
    // used by the P_k pipeline.
    BigRational d = generalized_dedekind_sum(99, 101);
    CHECK(d == dedekind_closed_form_succ(99));
}

TEST_CASE("bignum fallback path agrees with the fast kernel") {
    for (auto [p, q] : {std::pair<long, long>{3, 1}, {5, 3}, {13, 11}, {15, 77}, {21, 23}}) {
        CHECK(detail::dedekind_sum_bignum(p, q) == generalized_dedekind_sum(p, q));
    }
}

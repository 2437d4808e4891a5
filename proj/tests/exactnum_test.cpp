#include <random>

#include "doctest.h"
#include "ek7/congruence.hpp"
#include "ek7/qmodz.hpp"
#include "ek7/rational.hpp"

using namespace ek7;

TEST_CASE("BigRational canonical form") {
    BigRational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(0).denominator() == 1);
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("BigRational arithmetic is exact") {
    BigRational third(1, 3);
    CHECK(third + third + third == BigRational(1));
    CHECK(BigRational(1, 10) + BigRational(2, 10) == BigRational(3, 10));
    CHECK(BigRational(-27, 1120) * BigRational(1120, -27) == BigRational(1));
    CHECK(pow(BigRational(-2, 3), 3) == BigRational(-8, 27));
}

TEST_CASE("text form and parsing") {
    CHECK(BigRational(-27, 1120).str() == "-27/1120");
    CHECK(BigRational(3).str() == "3");
    CHECK(BigRational::parse("-27/1120") == BigRational(-27, 1120));
    CHECK(BigRational::parse("3") == BigRational(3));
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(BigRational::parse("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse(""), std::invalid_argument);

    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99999);
    for (int i = 0; i < 500; ++i) {
        BigRational r(num(rng), den(rng));
        CHECK(BigRational::parse(r.str()) == r);
    }
}

TEST_CASE("qmodz_reduce") {
    CHECK(qmodz_reduce(BigRational(0)) == QmodZ());
    CHECK(qmodz_reduce(BigRational(-1, 4)).value() == BigRational(3, 4));

    // 5444/224 by long division: 5444 = 24*224 + 68.
    long quotient = 5444 / 224;
    long remainder = 5444 - quotient * 224;
    CHECK(remainder == 68);
    CHECK(qmodz_reduce(BigRational(5444, 224)).value() == BigRational(remainder, 224));
    CHECK(qmodz_reduce(BigRational(5444, 224)).value() == BigRational(17, 56));

    CHECK(qmodz_reduce(BigRational(7, 3)) == qmodz_reduce(BigRational(1, 3)));
    CHECK(qmodz_reduce(BigRational(-5)) == QmodZ());
}

TEST_CASE("qmodz equality iff integer difference") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 40);
    for (int i = 0; i < 300; ++i) {
        BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
        bool integral_diff = (a - b).is_integer();
        CHECK((qmodz_reduce(a) == qmodz_reduce(b)) == integral_diff);
    }
}

TEST_CASE("qmodz addition is a homomorphism") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 40);
    for (int i = 0; i < 300; ++i) {
        BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(qmodz_reduce(a + b) ==
              qmodz_reduce(qmodz_reduce(a).value() + qmodz_reduce(b).value()));
    }
}

TEST_CASE("qmodz symmetric representative") {
    CHECK(qmodz_reduce(BigRational(-27, 1120)).symmetric() == BigRational(-27, 1120));
    CHECK(qmodz_reduce(BigRational(-27, 1120)).value() == BigRational(1093, 1120));
    CHECK(qmodz_reduce(BigRational(1, 4)).symmetric() == BigRational(1, 4));
    CHECK(qmodz_reduce(BigRational(1, 2)).symmetric() == BigRational(1, 2));
}

namespace {

// Independent oracle: collect the squares directly.
std::vector<long> brute_square_roots(long c, long m) {
    std::vector<long> out;
    long target = ((c % m) + m) % m;
    for (long a = 0; a < m; ++a) {
        if ((a * a) % m == target) out.push_back(a);
    }
    return out;
}

}  // namespace

TEST_CASE("solve_square_congruence against the brute-force oracle") {
    for (long m : {1L, 2L, 5L, 8L, 112L, 224L}) {
        for (long c : {-1L, 0L, 1L, 5L, 65L}) {
            CHECK(solve_square_congruence(c, m).residues == brute_square_roots(c, m));
        }
    }
}

TEST_CASE("square congruence examples") {
    ResidueSet s = solve_square_congruence(1, 224);
    CHECK(s.residues == std::vector<long>{1, 15, 97, 111, 113, 127, 209, 223});

    ResidueSet t = solve_square_congruence(65, 224);
    CHECK(t.contains(17));
    CHECK(t.contains(31));

    CHECK(solve_square_congruence(5, 8).empty());
    CHECK_THROWS_AS(solve_square_congruence(1, 0), std::invalid_argument);
}

TEST_CASE("residue sets are closed under negation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> cs(-100, 300);
    std::uniform_int_distribution<long> ms(1, 500);
    for (int i = 0; i < 100; ++i) {
        long m = ms(rng);
        ResidueSet s = solve_square_congruence(cs(rng), m);
        for (long a : s.residues) {
            CHECK(s.contains(m - a));
        }
    }
}

TEST_CASE("is_quadratic_residue") {
    CHECK(is_quadratic_residue(-1, 5));
    CHECK_FALSE(is_quadratic_residue(-1, 4));
    CHECK(is_quadratic_residue(0, 1));
    CHECK_FALSE(is_quadratic_residue(5, 8));
}

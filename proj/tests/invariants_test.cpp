#include <random>

#include "doctest.h"
#include "ek7/invariants.hpp"

using namespace ek7;

namespace {

QmodZ qz(long num, long den) { return qmodz_reduce(BigRational(num, den)); }

std::vector<SeifertParams> random_quadruples(int count, long bound, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> draw(0, (bound - 1) / 2);
    auto odd = [&] { return 2 * draw(rng) + 1; };
    std::vector<SeifertParams> out;
    while (static_cast<int>(out.size()) < count) {
        try {
            out.emplace_back(odd(), odd(), odd(), odd());
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

const SeifertParams kBerger(3, 1, 1, 3);

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SeifertParams(1, 1, 1, 1), std::invalid_argument);   // p-q+ = p+q-
    CHECK_THROWS_AS(SeifertParams(3, 5, 9, 15), std::invalid_argument);  // proportional
    CHECK_THROWS_AS(SeifertParams(2, 1, 1, 3), std::invalid_argument);   // even
    CHECK_THROWS_AS(SeifertParams(3, 9, 1, 3), std::invalid_argument);   // not coprime
    CHECK_THROWS_AS(SeifertParams(3, 1, 1, -3), std::invalid_argument);  // negative
    CHECK_NOTHROW(SeifertParams(3, 1, 3, 5));  // gcd(p-, p+) > 1 is fine for ek
}

TEST_CASE("h4_order") {
    CHECK(h4_order(kBerger) == 10);
    CHECK(h4_order(SeifertParams(1, 1, 1, 3)) == 1);
    for (long k = 1; k <= 20; ++k) {
        CHECK(h4_order(pk_params(k)) == k);
    }
}

TEST_CASE("Eells-Kuiper spot values") {
    CHECK(eells_kuiper(kBerger) == qz(-27, 1120));
    CHECK(eells_kuiper(kBerger).value() == BigRational(1093, 1120));
    CHECK(eells_kuiper(kBerger).symmetric() == BigRational(-27, 1120));
    CHECK(eells_kuiper(SeifertParams(1, 1, 3, 5)) == qz(-1, 32));
}

TEST_CASE("principal bundle form of ek when p- = p+ = 1") {
    for (long qp : {3L, 5L, 7L, 9L, 11L}) {
        long e = (1 - qp * qp) / 8;
        QmodZ expected = qmodz_reduce(BigRational((e < 0 ? -1 : 1) - e, 224));
        CHECK(eells_kuiper(SeifertParams(1, 1, 1, qp)) == expected);
    }
}

TEST_CASE("contribution values") {
    SeifertParams s1135(1, 1, 3, 5);
    CHECK(ek_contribution_smooth(s1135) == BigRational(1, 4032));
    CHECK(ek_contribution_smooth(kBerger) == BigRational(5, 4032));

    CHECK(ek_contribution_twisted(s1135, Side::minus) == BigRational(0));
    CHECK(ek_contribution_twisted(s1135, Side::plus) == BigRational(-1, 28));
    CHECK(ek_contribution_twisted(kBerger, Side::minus) == BigRational(-1, 28));

    CHECK(ek_contribution_spectral(s1135) == BigRational(-1, 224));
    CHECK(ek_contribution_spectral(kBerger) == BigRational(-1, 224));
    CHECK(ek_contribution_spectral(SeifertParams(1, 3, 3, 1)) == BigRational(1, 224));

    // p- = p+ kills the first Cheeger-Simons term: for (3,1,3,5) the
    // remainder is 3*(9 - 225)/(2^10 * 7 * 81) = -1/896.
    CHECK(ek_contribution_cheeger_simons(SeifertParams(3, 1, 3, 5)) == BigRational(-1, 896));
}

TEST_CASE("decomposition identity") {
    auto holds = [](const SeifertParams& s) {
        BigRational total = ek_contribution_smooth(s) +
                            ek_contribution_twisted(s, Side::minus) +
                            ek_contribution_twisted(s, Side::plus) +
                            ek_contribution_spectral(s) -
                            ek_contribution_cheeger_simons(s);
        return qmodz_reduce(total) == eells_kuiper(s);
    };
    CHECK(holds(kBerger));
    CHECK(holds(SeifertParams(1, 1, 3, 5)));
    CHECK(holds(SeifertParams(5, 3, 7, 9)));
    for (const SeifertParams& s : random_quadruples(15, 11, 1234)) {
        CAPTURE(s.p_minus);
        CAPTURE(s.q_minus);
        CAPTURE(s.p_plus);
        CAPTURE(s.q_plus);
        CHECK(holds(s));
    }
}

TEST_CASE("orientation reversal negates ek") {
    CHECK(eells_kuiper(SeifertParams(1, 3, 3, 1)).symmetric() == BigRational(27, 1120));
    for (const SeifertParams& s : random_quadruples(15, 11, 777)) {
        SeifertParams swapped(s.q_minus, s.p_minus, s.q_plus, s.p_plus);
        CHECK(qmodz_reduce(eells_kuiper(s).value() + eells_kuiper(swapped).value()) == QmodZ());
    }
}

TEST_CASE("quadratic form") {
    CHECK(q_form(kBerger, 0) == QmodZ());
    CHECK(q_form(kBerger, 1) == qz(11, 20));
    for (long l = 0; l < 10; ++l) {
        CHECK(q_form(kBerger, l) == qmodz_reduce(BigRational(l * (2 + 9 * l), 20)));
        CHECK(q_form(kBerger, l) == q_form(kBerger, l + 10));
        CHECK(q_form(kBerger, l) == q_form(kBerger, l - 10));
    }
    // The identification needs coprime p-, p+.
    CHECK_THROWS_AS(q_form(SeifertParams(3, 1, 3, 5), 1), std::invalid_argument);
}

TEST_CASE("P_k closed forms match the general formulas") {
    CHECK(ek_pk(1) == QmodZ());
    CHECK(ek_pk(2) == qz(-1, 32));
    CHECK(ek_pk(3) == qz(-15, 112));
    CHECK(ek_pk(5) == qz(-156, 224));
    for (long k = 1; k <= 12; ++k) {
        CHECK(ek_pk(k) == eells_kuiper(pk_params(k)));
        for (long l = 0; l < k; ++l) {
            CHECK(q_pk(k, l) == qmodz_reduce(BigRational(l * (l - k), 2 * k)));
            CHECK(q_pk(k, l) == q_form(pk_params(k), l));
        }
    }
}

TEST_CASE("t-invariant") {
    CHECK(t_invariant(kBerger, 0) == QmodZ());
    CHECK(qmodz_reduce(BigRational(12) * t_invariant(kBerger, 1).value()) == qz(11, 20));
    CHECK_THROWS_AS(t_invariant(SeifertParams(3, 1, 3, 5), 1), std::invalid_argument);

    for (const SeifertParams& s : random_quadruples(25, 11, 9090)) {
        if (std::gcd(s.p_minus, s.p_plus) != 1) continue;
        long k = h4_order(s);
        for (long l = 0; l < std::min(k, 30L); ++l) {
            QmodZ twelve_t = qmodz_reduce(BigRational(12) * t_invariant(s, l).value());
            CHECK(twelve_t == q_form(s, l));
        }
    }

    // 12 t identifies q also for lifts of the same class mod k.
    long k = h4_order(kBerger);
    for (long l = 0; l < k; ++l) {
        QmodZ twelve_t = qmodz_reduce(BigRational(12) * t_invariant(kBerger, l + 3 * k).value());
        CHECK(twelve_t == q_form(kBerger, l));
    }
}

TEST_CASE("sphere bundle invariants") {
    CHECK_THROWS_AS(SphereBundleParams(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(SphereBundleParams(1, 0), std::invalid_argument);
    CHECK_NOTHROW(SphereBundleParams(-4, 2));
    CHECK_NOTHROW(SphereBundleParams(4, -2));

    CHECK(bundle_mu(SphereBundleParams(4, 2)) == qz(1, 32));
    CHECK(-bundle_mu(SphereBundleParams(4, 2)) == ek_pk(2));
    CHECK(bundle_q(SphereBundleParams(4, 2), 1) == qz(1, 4));
    CHECK(q_pk(2, 1) == qz(3, 4));
    CHECK(-bundle_q(SphereBundleParams(4, 2), 1) == q_pk(2, 1));

    for (long k = 1; k <= 20; ++k) {
        CHECK(bundle_mu(SphereBundleParams(k, k)) == qmodz_reduce(BigRational(k - 1, 224)));
    }

    CHECK(bundle_mu(SphereBundleParams(165, 5)) == qmodz_reduce(BigRational(5444, 224)));
    CHECK(bundle_mu(SphereBundleParams(165, 5)) == ek_pk(5));
    CHECK(-bundle_mu(SphereBundleParams(55, 5)) == ek_pk(5));
}

TEST_CASE("linking form and half-Pontrjagin pairing") {
    for (long k = 1; k <= 12; ++k) {
        CyclicQuadraticForm q = CyclicQuadraticForm::from_pk(k);
        for (long i = 0; i < k; ++i) {
            CHECK(linking_form(q, i, 0) == QmodZ());
            CHECK(half_pontryagin_pairing(q, i) == QmodZ());
            for (long j = 0; j < k; ++j) {
                CHECK(linking_form(q, i, j) == qmodz_reduce(BigRational(i * j, k)));
            }
        }
    }

    // Principal bundles have the same standard linking form.
    for (long k : {3L, 5L, 8L}) {
        CyclicQuadraticForm q = CyclicQuadraticForm::from_bundle(SphereBundleParams(k, k));
        for (long i = 0; i < k; ++i) {
            for (long j = 0; j < k; ++j) {
                CHECK(linking_form(q, i, j) == qmodz_reduce(BigRational(i * j, k)));
            }
        }
    }

    // lk(a, p1/2) = a p / n for E_{p,n}.
    for (auto [p, n] : {std::pair<long, long>{4, 2}, {3, 5}, {8, 10}, {55, 5}}) {
        CyclicQuadraticForm q = CyclicQuadraticForm::from_bundle(SphereBundleParams(p, n));
        CHECK(half_pontryagin_pairing(q, 0) == QmodZ());
        long order = n < 0 ? -n : n;
        for (long a = 0; a < order; ++a) {
            CHECK(half_pontryagin_pairing(q, a) == qmodz_reduce(BigRational(a * p, n)));
        }
    }
}

TEST_CASE("linking form is symmetric and biadditive") {
    // (1,3,3,1) has p-^2 q+^2 < p+^2 q-^2, covering the reversed
    // orientation of the identification.
    CyclicQuadraticForm reversed = CyclicQuadraticForm::from_seifert(SeifertParams(1, 3, 3, 1));
    CHECK(reversed.order() == 10);
    for (long a = 0; a < 10; ++a) {
        for (long b = 0; b < 10; ++b) {
            CHECK(linking_form(reversed, a, b) == linking_form(reversed, b, a));
            CHECK(linking_form(reversed, a + b, 3) ==
                  linking_form(reversed, a, 3) + linking_form(reversed, b, 3));
        }
    }

    for (long k : {5L, 9L, 12L}) {
        CyclicQuadraticForm forms[] = {
            CyclicQuadraticForm::from_pk(k),
            CyclicQuadraticForm::from_bundle(SphereBundleParams(k + 4, k)),
            CyclicQuadraticForm::from_seifert(pk_params(k)),
        };
        for (const CyclicQuadraticForm& q : forms) {
            for (long a = 0; a < k; ++a) {
                for (long b = 0; b < k; ++b) {
                    CHECK(linking_form(q, a, b) == linking_form(q, b, a));
                    for (long c = 0; c < k; ++c) {
                        CHECK(linking_form(q, a + b, c) ==
                              linking_form(q, a, c) + linking_form(q, b, c));
                    }
                }
            }
        }
    }
}

TEST_CASE("reconstructed mode propagates through ek") {
    DedekindOptions force;
    force.max_exact_p = 1;
    EkValue v = eells_kuiper(kBerger, force);
    CHECK(v.reconstructed);
    CHECK(v.value == qz(-27, 1120));
    CHECK_FALSE(eells_kuiper(kBerger, DedekindOptions{}).reconstructed);
}

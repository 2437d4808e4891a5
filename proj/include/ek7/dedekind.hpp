#ifndef EK7_DEDEKIND_HPP
#define EK7_DEDEKIND_HPP

#include "ek7/cyclotomic.hpp"
#include "ek7/rational.hpp"

namespace ek7 {

/// Knobs for the Dedekind-sum evaluator. p up to max_exact_p runs in the
/// exact cyclotomic ring; beyond that the sum is evaluated in
/// precision_bits-bit floating point and reconstructed as a rational.
struct DedekindOptions {
    long max_exact_p = 499;
    long precision_bits = 192;
};

struct DedekindValue {
    BigRational value;
    bool reconstructed = false;
};

/**
 * The generalized Dedekind sum
 *
 *   D(p,q) = sum_{a=1}^{p-1} ( (14 cos(4 pi a/p) + cos^2(q pi a/p))
 *                              / (2^4 7 p^2 sin^2(4 pi a/p) sin^2(q pi a/p))
 *                            + q cos(q pi a/p) (14 + cos(4 pi a/p))
 *                              / (2^5 7 p^2 sin(4 pi a/p) sin^3(q pi a/p)) )
 *
 * for odd coprime positive p, q, evaluated exactly in Q(zeta_{4p}).
 * Rejects invalid inputs; a non-rational extraction is an internal error.
 */
BigRational generalized_dedekind_sum(long p, long q);

DedekindValue evaluate_dedekind_sum(long p, long q, const DedekindOptions& opts = {});

/// The a-th summand of D(p,q) as an exact element of Q(zeta_{4p}).
/// The a-th and (p-a)-th summands coincide.
CycloElement dedekind_summand(long p, long q, long a);

/// The whole sum before rational extraction (exact mode only). Cached,
/// so a later numeric cross-check does not recompute the sum.
CycloElement dedekind_sum_element(long p, long q);

/// sum_{a=1}^{p-1} 1 / sin^{2l}(2 pi a / p) for odd p and l in {1, 2},
/// computed as the direct exact cyclotomic sum. Closed forms:
/// (p^2-1)/3 for l = 1 and (p^4 + 10 p^2 - 11)/45 for l = 2.
BigRational sin_power_sum(long p, int l);

/// Closed form for D(p, p+2): (p^2-1)(p^3 + 3p^2 + 9p - 27) / (2^6 3 7 p^2).
BigRational dedekind_closed_form_succ(long p);

/// D(p,q) + D(q,p) - (2^6 + 2^4(p^2+q^2) + (p^4+q^4))/(2^8 7 p^2 q^2) + 7/2^7.
/// Always an integer for odd coprime p, q.
BigRational duality_defect(long p, long q);

namespace detail {

/// The exact summation on BigRational coefficients throughout — the path
/// the evaluator escalates to when the int64 kernel overflows. Exposed so
/// the fallback stays testable against the fast path.
BigRational dedekind_sum_bignum(long p, long q);

}  // namespace detail

}  // namespace ek7

#endif

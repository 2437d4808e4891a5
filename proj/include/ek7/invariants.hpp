#ifndef EK7_INVARIANTS_HPP
#define EK7_INVARIANTS_HPP

#include <functional>

#include "ek7/dedekind.hpp"
#include "ek7/qmodz.hpp"
#include "ek7/rational.hpp"

namespace ek7 {

/**
 * The quadruple (p-, q-, p+, q+) of odd positive integers picking out the
 * manifold M_{(p-,q-),(p+,q+)}. Construction enforces gcd(p-, q-) =
 * gcd(p+, q+) = 1 and p- q+ != p+ q- (the finite-H^4 case).
 */
struct SeifertParams {
    long p_minus, q_minus, p_plus, q_plus;
    SeifertParams(long pm, long qm, long pp, long qp);
};

/// Parameters of P_k = M_{(1,1),(2k-1,2k+1)}.
SeifertParams pk_params(long k);

/// |H^4| = |p-^2 q+^2 - p+^2 q-^2| / 8; always a positive integer for
/// valid parameters.
long h4_order(const SeifertParams& params);

struct EkValue {
    QmodZ value;
    bool reconstructed = false;
};

/// Eells-Kuiper invariant of M_{(p-,q-),(p+,q+)}:
///   sign(q-^2 p+^2 - q+^2 p-^2)/(2^5 7) + D(p-,q-) - D(p+,q+)
///   - (p+^2-p-^2)^2 / (2^2 7 p-^2 p+^2 (q-^2 p+^2 - q+^2 p-^2))
///   - (2^4 (p+^2-p-^2) + (q-^2 p+^2 - q+^2 p-^2)) / (2^8 7 p-^2 p+^2),
/// reduced into [0,1).
QmodZ eells_kuiper(const SeifertParams& params);
EkValue eells_kuiper(const SeifertParams& params, const DedekindOptions& opts);

enum class Side { minus, plus };

/// The four pieces the invariant decomposes into. Their combination
/// smooth + twisted(minus) + twisted(plus) + spectral - cheeger_simons
/// equals eells_kuiper mod Z.
BigRational ek_contribution_smooth(const SeifertParams& params);
BigRational ek_contribution_twisted(const SeifertParams& params, Side side);
BigRational ek_contribution_cheeger_simons(const SeifertParams& params);
BigRational ek_contribution_spectral(const SeifertParams& params);

/// Quadratic form on H^4 = Z/kZ (requires gcd(p-, p+) = 1):
/// q(l) = l (p+^2 - p-^2 + l p-^2 p+^2) / (2k) - l/2 mod Z.
QmodZ q_form(const SeifertParams& params, long l);

/// t-invariant of the pullback bundle with second Chern number l over the
/// base; satisfies 12 t = q_form(l) identically. Not periodic in l (the
/// bundle, not just its class mod k, enters).
QmodZ t_invariant(const SeifertParams& params, long l);

/// Closed forms for P_k: ek(P_k) = -(4k^3 - 7k + 3)/(2^5 3 7) and
/// q(l) = l(l-k)/(2k).
QmodZ ek_pk(long k);
QmodZ q_pk(long k, long l);

/**
 * The S^3-bundle over S^4 with Euler class n != 0 and half Pontrjagin
 * class p; p and n must have the same parity for the bundle to exist.
 */
struct SphereBundleParams {
    long p, n;
    SphereBundleParams(long p_, long n_);
};

/// mu(E_{p,n}) = (p^2 - n)/(2^5 7 n) mod Z.
QmodZ bundle_mu(const SphereBundleParams& b);

/// q_{E_{p,n}}(l) = l (p + l)/(2n) mod Z.
QmodZ bundle_q(const SphereBundleParams& b, long l);

/**
 * A quadratic form on Z/kZ given by an evaluator total on all integers
 * (arguments are reduced mod k). Polarizing it yields the linking form.
 */
class CyclicQuadraticForm {
public:
    CyclicQuadraticForm(long order, std::function<QmodZ(long)> eval);

    long order() const { return order_; }
    QmodZ operator()(long l) const;

    CyclicQuadraticForm negated() const;

    static CyclicQuadraticForm from_seifert(const SeifertParams& params);
    static CyclicQuadraticForm from_pk(long k);
    static CyclicQuadraticForm from_bundle(const SphereBundleParams& b);

private:
    long order_;
    std::function<QmodZ(long)> eval_;
};

/// lk(a, b) = q(a+b) - q(a) - q(b); symmetric and biadditive.
QmodZ linking_form(const CyclicQuadraticForm& qf, long a, long b);

/// lk(a, p1/2) = q(a) - q(-a).
QmodZ half_pontryagin_pairing(const CyclicQuadraticForm& qf, long a);

}  // namespace ek7

#endif

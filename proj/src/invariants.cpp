#include "ek7/invariants.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace ek7 {

namespace {

// p-^2 q+^2 - p+^2 q-^2 = 8k under the reference orientation; the sign
// carries the orientation, the absolute value the group order.
BigInt h4_eight_k_signed(const SeifertParams& s) {
    BigInt pm(s.p_minus), qm(s.q_minus), pp(s.p_plus), qp(s.q_plus);
    return pm * pm * qp * qp - pp * pp * qm * qm;
}

// q-^2 p+^2 - q+^2 p-^2, the argument of the sign in the spectral term.
BigInt spectral_argument(const SeifertParams& s) {
    return -h4_eight_k_signed(s);
}

long mod_reduce(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

void require_coprime_sides(const SeifertParams& s, const char* who) {
    if (std::gcd(s.p_minus, s.p_plus) != 1) {
        throw std::invalid_argument(std::string(who) +
                                    ": requires gcd(p-, p+) = 1 (H^4 identification)");
    }
}

}  // namespace

SeifertParams::SeifertParams(long pm, long qm, long pp, long qp)
    : p_minus(pm), q_minus(qm), p_plus(pp), q_plus(qp) {
    auto check_pair = [](long p, long q, const char* side) {
        if (p < 1 || q < 1) {
            throw std::invalid_argument(std::string("SeifertParams: ") + side +
                                        " pair must be positive");
        }
        if (p % 2 == 0 || q % 2 == 0) {
            throw std::invalid_argument(std::string("SeifertParams: ") + side +
                                        " pair must be odd");
        }
        if (std::gcd(p, q) != 1) {
            throw std::invalid_argument(std::string("SeifertParams: ") + side +
                                        " pair must be coprime");
        }
    };
    check_pair(pm, qm, "minus");
    check_pair(pp, qp, "plus");
    // All parameters are positive, so p- q+ = -p+ q- cannot occur; equality
    // is the infinite-H^4 degeneration.
    if (static_cast<long long>(pm) * qp == static_cast<long long>(pp) * qm) {
        throw std::invalid_argument("SeifertParams: p- q+ = +/- p+ q- has infinite H^4");
    }
}

SeifertParams pk_params(long k) {
    if (k < 1) {
        throw std::invalid_argument("pk_params: k must be positive");
    }
    return SeifertParams(1, 1, 2 * k - 1, 2 * k + 1);
}

long h4_order(const SeifertParams& params) {
    BigInt eight_k = abs(h4_eight_k_signed(params));
    BigInt k, r;
    mpz_fdiv_qr(k.get_mpz_t(), r.get_mpz_t(), eight_k.get_mpz_t(), BigInt(8).get_mpz_t());
    if (sgn(r) != 0 || sgn(k) <= 0) {
        throw internal_error("h4_order: |p-^2 q+^2 - p+^2 q-^2| not a positive multiple of 8");
    }
    if (!k.fits_slong_p()) {
        throw std::invalid_argument("h4_order: group order out of range");
    }
    return k.get_si();
}

QmodZ eells_kuiper(const SeifertParams& params) {
    return eells_kuiper(params, DedekindOptions{}).value;
}

EkValue eells_kuiper(const SeifertParams& params, const DedekindOptions& opts) {
    DedekindValue d_minus = evaluate_dedekind_sum(params.p_minus, params.q_minus, opts);
    DedekindValue d_plus = evaluate_dedekind_sum(params.p_plus, params.q_plus, opts);

    BigInt arg = spectral_argument(params);
    BigInt pm2 = BigInt(params.p_minus) * params.p_minus;
    BigInt pp2 = BigInt(params.p_plus) * params.p_plus;
    BigInt dp2 = pp2 - pm2;

    BigRational total(sgn(arg), 224);
    total += d_minus.value;
    total -= d_plus.value;
    total -= BigRational(dp2 * dp2, BigInt(28) * pm2 * pp2 * arg);
    total -= BigRational(BigInt(16) * dp2 + arg, BigInt(1792) * pm2 * pp2);
    return EkValue{qmodz_reduce(total), d_minus.reconstructed || d_plus.reconstructed};
}

BigRational ek_contribution_smooth(const SeifertParams& params) {
    BigRational qp2_over_pp2(BigInt(params.q_plus) * params.q_plus,
                             BigInt(params.p_plus) * params.p_plus);
    BigRational qm2_over_pm2(BigInt(params.q_minus) * params.q_minus,
                             BigInt(params.p_minus) * params.p_minus);
    return (qp2_over_pp2 - qm2_over_pm2) / BigRational(7168);  // 2^10 * 7
}

BigRational ek_contribution_twisted(const SeifertParams& params, Side side) {
    if (side == Side::minus) {
        return generalized_dedekind_sum(params.p_minus, params.q_minus);
    }
    return -generalized_dedekind_sum(params.p_plus, params.q_plus);
}

BigRational ek_contribution_cheeger_simons(const SeifertParams& params) {
    BigInt arg = spectral_argument(params);
    BigInt pm2 = BigInt(params.p_minus) * params.p_minus;
    BigInt pp2 = BigInt(params.p_plus) * params.p_plus;
    BigInt dp2 = pp2 - pm2;
    return BigRational(dp2 * dp2, BigInt(28) * pm2 * pp2 * arg) +
           BigRational(BigInt(64) * dp2 + 3 * arg, BigInt(7168) * pm2 * pp2);
}

BigRational ek_contribution_spectral(const SeifertParams& params) {
    return BigRational(sgn(spectral_argument(params)), 224);
}

QmodZ q_form(const SeifertParams& params, long l) {
    require_coprime_sides(params, "q_form");
    BigInt eight_k = h4_eight_k_signed(params);
    long k = h4_order(params);
    BigInt lr(mod_reduce(l, k));
    BigInt pm2 = BigInt(params.p_minus) * params.p_minus;
    BigInt pp2 = BigInt(params.p_plus) * params.p_plus;
    // l (p+^2 - p-^2 + l p-^2 p+^2) / (2k) - l/2, with 2k = eight_k / 4.
    BigRational main(BigInt(lr * (pp2 - pm2 + lr * pm2 * pp2) * 4), eight_k);
    return qmodz_reduce(main - BigRational(lr, BigInt(2)));
}

QmodZ t_invariant(const SeifertParams& params, long l) {
    require_coprime_sides(params, "t_invariant");
    BigInt eight_k = h4_eight_k_signed(params);
    BigInt lb(l);
    BigInt pm2 = BigInt(params.p_minus) * params.p_minus;
    BigInt pp2 = BigInt(params.p_plus) * params.p_plus;
    BigRational main(BigInt(lb * (pp2 - pm2 + lb * pm2 * pp2)), BigInt(3) * eight_k);
    return qmodz_reduce(main - BigRational(l, 24));
}

QmodZ ek_pk(long k) {
    if (k < 1) {
        throw std::invalid_argument("ek_pk: k must be positive");
    }
    BigInt kb(k);
    return qmodz_reduce(BigRational(-(4 * kb * kb * kb - 7 * kb + 3), BigInt(672)));
}

QmodZ q_pk(long k, long l) {
    if (k < 1) {
        throw std::invalid_argument("q_pk: k must be positive");
    }
    BigInt lr(mod_reduce(l, k));
    return qmodz_reduce(BigRational(BigInt(lr * (lr - k)), BigInt(2) * k));
}

SphereBundleParams::SphereBundleParams(long p_, long n_) : p(p_), n(n_) {
    if (n == 0) {
        throw std::invalid_argument("SphereBundleParams: Euler class must be nonzero");
    }
    if (((p % 2) + 2) % 2 != ((n % 2) + 2) % 2) {
        throw std::invalid_argument("SphereBundleParams: p and n must have the same parity");
    }
}

QmodZ bundle_mu(const SphereBundleParams& b) {
    return qmodz_reduce(BigRational(BigInt(b.p) * b.p - b.n, BigInt(224) * b.n));
}

QmodZ bundle_q(const SphereBundleParams& b, long l) {
    BigInt lb(l);
    return qmodz_reduce(BigRational(BigInt(lb * (b.p + lb)), BigInt(2) * b.n));
}

CyclicQuadraticForm::CyclicQuadraticForm(long order, std::function<QmodZ(long)> eval)
    : order_(order), eval_(std::move(eval)) {
    if (order_ < 1) {
        throw std::invalid_argument("CyclicQuadraticForm: order must be positive");
    }
}

QmodZ CyclicQuadraticForm::operator()(long l) const {
    return eval_(mod_reduce(l, order_));
}

CyclicQuadraticForm CyclicQuadraticForm::negated() const {
    auto inner = eval_;
    return CyclicQuadraticForm(order_, [inner](long l) { return -inner(l); });
}

CyclicQuadraticForm CyclicQuadraticForm::from_seifert(const SeifertParams& params) {
    require_coprime_sides(params, "CyclicQuadraticForm");
    return CyclicQuadraticForm(h4_order(params),
                               [params](long l) { return q_form(params, l); });
}

CyclicQuadraticForm CyclicQuadraticForm::from_pk(long k) {
    return CyclicQuadraticForm(k, [k](long l) { return q_pk(k, l); });
}

CyclicQuadraticForm CyclicQuadraticForm::from_bundle(const SphereBundleParams& b) {
    long order = b.n < 0 ? -b.n : b.n;
    return CyclicQuadraticForm(order, [b](long l) { return bundle_q(b, l); });
}

QmodZ linking_form(const CyclicQuadraticForm& qf, long a, long b) {
    return qf(a + b) - qf(a) - qf(b);
}

QmodZ half_pontryagin_pairing(const CyclicQuadraticForm& qf, long a) {
    return qf(a) - qf(-a);
}

}  // namespace ek7

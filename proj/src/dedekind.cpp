#include "ek7/dedekind.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ek7 {

namespace {

void validate_pair(long p, long q) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("Dedekind sum: p and q must be positive");
    }
    if (p % 2 == 0 || q % 2 == 0) {
        throw std::invalid_argument("Dedekind sum: p and q must be odd");
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("Dedekind sum: p and q must be coprime");
    }
}

long mod_reduce(long long a, long m) {
    long long r = a % m;
    return static_cast<long>(r < 0 ? r + m : r);
}

// ---------------------------------------------------------------------
// Two coefficient policies share the summation logic below. The fast one
// works on int64 vectors with overflow checks and is escalated to the
// exact BigRational one if any check trips. Both are exact arithmetic.
// ---------------------------------------------------------------------

struct FastOverflow {};

constexpr long long kCoeffLimit = 1LL << 61;
constexpr __int128 kAccLimit = static_cast<__int128>(1) << 120;

struct IntOps {
    struct Poly {
        std::vector<long long> c;
    };

    static Poly zero(long deg) { return Poly{std::vector<long long>(deg)}; }

    static void add_row(Poly& p, const std::vector<long long>& row, long long mult) {
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (row[i] == 0) continue;
            __int128 v = static_cast<__int128>(p.c[i]) +
                         static_cast<__int128>(row[i]) * mult;
            if (v > kCoeffLimit || v < -kCoeffLimit) throw FastOverflow{};
            p.c[i] = static_cast<long long>(v);
        }
    }

    static void add_unit(Poly& p, long long v) {
        __int128 s = static_cast<__int128>(p.c[0]) + v;
        if (s > kCoeffLimit || s < -kCoeffLimit) throw FastOverflow{};
        p.c[0] = static_cast<long long>(s);
    }

    static Poly mul(const CycloField& f, const Poly& a, const Poly& b) {
        const long deg = f.degree();
        std::vector<__int128> conv(2 * deg - 1);
        for (long i = 0; i < deg; ++i) {
            long long ai = a.c[i];
            if (ai == 0) continue;
            for (long j = 0; j < deg; ++j) {
                if (b.c[j] == 0) continue;
                __int128 v = conv[i + j] + static_cast<__int128>(ai) * b.c[j];
                if (v > kAccLimit || v < -kAccLimit) throw FastOverflow{};
                conv[i + j] = v;
            }
        }
        Poly out = zero(deg);
        for (long i = 0; i < deg; ++i) {
            if (conv[i] > kCoeffLimit || conv[i] < -kCoeffLimit) throw FastOverflow{};
            out.c[i] = static_cast<long long>(conv[i]);
        }
        for (long j = deg; j < 2 * deg - 1; ++j) {
            if (conv[j] == 0) continue;
            if (conv[j] > kCoeffLimit || conv[j] < -kCoeffLimit) throw FastOverflow{};
            add_row(out, f.power_row(j), static_cast<long long>(conv[j]));
        }
        return out;
    }

    static void accumulate(std::vector<BigRational>& acc, const Poly& p,
                           const BigRational& scale) {
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (p.c[i] != 0) acc[i] += BigRational(p.c[i]) * scale;
        }
    }
};

struct RatOps {
    struct Poly {
        std::vector<BigRational> c;
    };

    static Poly zero(long deg) { return Poly{std::vector<BigRational>(deg)}; }

    static void add_row(Poly& p, const std::vector<long long>& row, long long mult) {
        BigRational m(mult);
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (row[i] != 0) p.c[i] += BigRational(row[i]) * m;
        }
    }

    static void add_unit(Poly& p, long long v) { p.c[0] += BigRational(v); }

    static Poly mul(const CycloField& f, const Poly& a, const Poly& b) {
        const long deg = f.degree();
        std::vector<BigRational> conv(2 * deg - 1);
        for (long i = 0; i < deg; ++i) {
            if (a.c[i].is_zero()) continue;
            for (long j = 0; j < deg; ++j) {
                if (b.c[j].is_zero()) continue;
                conv[i + j] += a.c[i] * b.c[j];
            }
        }
        Poly out;
        out.c.assign(conv.begin(), conv.begin() + deg);
        for (long j = deg; j < 2 * deg - 1; ++j) {
            if (conv[j].is_zero()) continue;
            const std::vector<long long>& row = f.power_row(j);
            for (long i = 0; i < deg; ++i) {
                if (row[i] != 0) out.c[i] += conv[j] * BigRational(row[i]);
            }
        }
        return out;
    }

    static void accumulate(std::vector<BigRational>& acc, const Poly& p,
                           const BigRational& scale) {
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (!p.c[i].is_zero()) acc[i] += p.c[i] * scale;
        }
    }
};

template <class Ops>
struct Scaled {
    typename Ops::Poly poly;
    BigRational scale;
};

// 1/sin(m pi / p) for m in (0, 2p), m != p, as an element of Q(zeta_4p).
// With t = 4m mod n and r the multiplicative order of zeta^t,
//   1/sin(m pi/p) = 2 zeta^{p+2m} / (zeta^t - 1)
//   1/(zeta^t - 1) = (1/r) sum_{j=1}^{r-1} j zeta^{t j},
// the latter from differentiating x^r - 1 = (x-1) sum x^j at zeta^t.
template <class Ops>
Scaled<Ops> inverse_sine(const CycloField& f, long p, long m) {
    const long n = f.order();
    long t = mod_reduce(4LL * m, n);
    long r = n / std::gcd(t, n);
    if (r < 2) {
        throw internal_error("inverse_sine: sin argument is a multiple of pi");
    }
    typename Ops::Poly poly = Ops::zero(f.degree());
    for (long j = 1; j < r; ++j) {
        long e = mod_reduce(static_cast<long long>(t) * j + p + 2 * m, n);
        Ops::add_row(poly, f.power_row(e), j);
    }
    return Scaled<Ops>{std::move(poly), BigRational(2, r)};
}

template <class Ops>
Scaled<Ops> scaled_mul(const CycloField& f, const Scaled<Ops>& a, const Scaled<Ops>& b) {
    return Scaled<Ops>{Ops::mul(f, a.poly, b.poly), a.scale * b.scale};
}

// Accumulates the full sum of Definition-style summands for a in
// [a_begin, a_end) into a BigRational coefficient vector.
template <class Ops>
std::vector<BigRational> accumulate_dedekind(long p, long q, const CycloField& f,
                                             long a_begin, long a_end) {
    const long deg = f.degree();
    const long n = f.order();
    const long twop = 2 * p;
    const long qm = mod_reduce(q, twop);  // trig arguments only; q itself stays in the scale

    const BigInt pp = BigInt(p) * p;
    const BigRational term1_scale = BigRational(1, 4) * BigRational(BigInt(1), 112 * pp);
    const BigRational term2_scale = BigRational(q, 4) * BigRational(BigInt(1), 224 * pp);

    std::vector<std::unique_ptr<Scaled<Ops>>> inv_sin(twop), inv_sin_sq(twop);
    auto inv = [&](long m) -> const Scaled<Ops>& {
        if (!inv_sin[m]) {
            inv_sin[m] = std::make_unique<Scaled<Ops>>(inverse_sine<Ops>(f, p, m));
        }
        return *inv_sin[m];
    };
    auto inv_sq = [&](long m) -> const Scaled<Ops>& {
        if (!inv_sin_sq[m]) {
            const Scaled<Ops>& v = inv(m);
            inv_sin_sq[m] = std::make_unique<Scaled<Ops>>(scaled_mul(f, v, v));
        }
        return *inv_sin_sq[m];
    };

    std::vector<BigRational> acc(deg);
    for (long a = a_begin; a < a_end; ++a) {
        const long m1 = mod_reduce(4LL * a, twop);
        const long m2 = mod_reduce(static_cast<long long>(qm) * a, twop);

        // 14 cos(4 pi a/p) + cos^2(q pi a/p), numerators over a common 4.
        typename Ops::Poly n1 = Ops::zero(deg);
        Ops::add_row(n1, f.power_row(mod_reduce(8LL * a, n)), 28);
        Ops::add_row(n1, f.power_row(mod_reduce(-8LL * a, n)), 28);
        Ops::add_row(n1, f.power_row(mod_reduce(4LL * qm * a, n)), 1);
        Ops::add_row(n1, f.power_row(mod_reduce(-4LL * qm * a, n)), 1);
        Ops::add_unit(n1, 2);

        // cos(q pi a/p) (14 + cos(4 pi a/p)), again over 4; the factor q
        // lives in term2_scale.
        typename Ops::Poly n2 = Ops::zero(deg);
        Ops::add_row(n2, f.power_row(mod_reduce(2LL * qm * a, n)), 28);
        Ops::add_row(n2, f.power_row(mod_reduce(-2LL * qm * a, n)), 28);
        Ops::add_row(n2, f.power_row(mod_reduce((2LL * qm + 8) * a, n)), 1);
        Ops::add_row(n2, f.power_row(mod_reduce(-(2LL * qm + 8) * a, n)), 1);
        Ops::add_row(n2, f.power_row(mod_reduce((2LL * qm - 8) * a, n)), 1);
        Ops::add_row(n2, f.power_row(mod_reduce(-(2LL * qm - 8) * a, n)), 1);

        const Scaled<Ops>& u = inv(m1);
        const Scaled<Ops>& v = inv(m2);
        const Scaled<Ops>& v2 = inv_sq(m2);
        Scaled<Ops> w = scaled_mul(f, u, v);
        Scaled<Ops> w2 = scaled_mul(f, w, w);
        Scaled<Ops> wv2 = scaled_mul(f, w, v2);

        typename Ops::Poly t1 = Ops::mul(f, n1, w2.poly);
        Ops::accumulate(acc, t1, term1_scale * w2.scale);
        typename Ops::Poly t2 = Ops::mul(f, n2, wv2.poly);
        Ops::accumulate(acc, t2, term2_scale * wv2.scale);
    }
    return acc;
}

std::vector<BigRational> dedekind_coeffs(long p, long q, const CycloField& f,
                                         long a_begin, long a_end) {
    try {
        return accumulate_dedekind<IntOps>(p, q, f, a_begin, a_end);
    } catch (const FastOverflow&) {
        return accumulate_dedekind<RatOps>(p, q, f, a_begin, a_end);
    }
}

// ---------------------------------------------------------------------
// Exact-mode cache: the pre-extraction element doubles as the input of
// the numeric cross-check oracle, so it is kept around.
// ---------------------------------------------------------------------

struct CachedSum {
    CycloElement element;
    BigRational value;
};

std::map<std::pair<long, long>, std::shared_ptr<const CachedSum>> g_sum_cache;
std::mutex g_sum_mutex;

std::shared_ptr<const CachedSum> exact_sum(long p, long q) {
    {
        std::lock_guard<std::mutex> lock(g_sum_mutex);
        auto it = g_sum_cache.find({p, q});
        if (it != g_sum_cache.end()) return it->second;
    }
    FieldPtr field = CycloField::get(4 * p);
    std::vector<BigRational> coeffs =
        p == 1 ? std::vector<BigRational>(field->degree())
               : dedekind_coeffs(p, q, *field, 1, p);
    CycloElement element = CycloElement::from_coeffs(field, std::move(coeffs));
    std::optional<BigRational> value = element.as_rational();
    if (!value) {
        throw internal_error("Dedekind sum: cyclotomic value failed to extract to a rational");
    }
    auto entry = std::make_shared<const CachedSum>(CachedSum{std::move(element), *value});
    std::lock_guard<std::mutex> lock(g_sum_mutex);
    g_sum_cache.insert({{p, q}, entry});
    return entry;
}

// ---------------------------------------------------------------------
// Float fallback: evaluate the sum in MPFR and reconstruct the rational
// by continued fractions under an explicit denominator bound.
// ---------------------------------------------------------------------

BigInt reconstruction_denominator_bound(long p) {
    // 2^8 * 3^2 * 5 * 7 * p^4; a conservative engineering bound, not a
    // claim about the true minimal denominator.
    BigInt p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), static_cast<unsigned long>(p), 4);
    return BigInt(80640) * p4;
}

BigRational reconstruct_rational(const BigFloat& x, const BigInt& den_bound, long bits) {
    // Continued-fraction convergents h/k with k <= den_bound.
    BigInt h_prev(0), h_cur(1), k_prev(1), k_cur(0);  // h_{-2}/k_{-2}, h_{-1}/k_{-1}
    BigFloat rem = x;
    BigFloat eps = BigFloat::pow2(-(bits - 16), bits);
    for (int step = 0; step < 20000; ++step) {
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), rem.raw(), MPFR_RNDD);
        BigInt h_next = a * h_cur + h_prev;
        BigInt k_next = a * k_cur + k_prev;
        if (step > 0 && k_next > den_bound) break;
        h_prev = h_cur;
        h_cur = h_next;
        k_prev = k_cur;
        k_cur = k_next;
        BigFloat frac = rem - BigFloat::from(BigRational(a), bits);
        if (frac.abs() <= eps) break;
        rem = BigFloat::from(BigRational(1), bits) / frac;
    }
    BigRational candidate(h_cur, k_cur);
    BigRational residual_bound(BigInt(1), BigInt(2) * den_bound * den_bound);
    if (!approx_equals(x, candidate, residual_bound)) {
        throw internal_error(
            "Dedekind sum: rational reconstruction failed; raise precision_bits");
    }
    return candidate;
}

BigRational float_dedekind_sum(long p, long q, long bits) {
    BigInt bound = reconstruction_denominator_bound(p);
    long bound_bits = static_cast<long>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    if (bits < 2 * bound_bits + 32) {
        throw std::invalid_argument(
            "Dedekind sum: precision_bits too low for reconstruction at this p");
    }
    const long twop = 2 * p;
    const long qm = mod_reduce(q, twop);
    BigFloat theta = BigFloat::pi(bits);
    theta.div_long(p);

    BigInt pp = BigInt(p) * p;
    BigFloat k1 = BigFloat::from(BigRational(BigInt(112 * pp)), bits);
    BigFloat k2 = BigFloat::from(BigRational(BigInt(224 * pp)), bits);
    BigFloat fourteen = BigFloat::from_long(14, bits);
    BigFloat qf = BigFloat::from_long(q, bits);

    BigFloat total(bits);
    BigFloat s1(bits), c1(bits), s2(bits), c2(bits);
    for (long a = 1; a < p; ++a) {
        BigFloat ang1 = theta;
        ang1.mul_long(mod_reduce(4LL * a, twop));
        ang1.sin_cos(s1, c1);
        BigFloat ang2 = theta;
        ang2.mul_long(mod_reduce(static_cast<long long>(qm) * a, twop));
        ang2.sin_cos(s2, c2);

        BigFloat t1 = (fourteen * c1 + c2 * c2) / (k1 * s1 * s1 * s2 * s2);
        BigFloat t2 = (qf * c2 * (fourteen + c1)) / (k2 * s1 * s2 * s2 * s2);
        total += t1;
        total += t2;
    }
    return reconstruct_rational(total, bound, bits);
}

}  // namespace

BigRational generalized_dedekind_sum(long p, long q) {
    return evaluate_dedekind_sum(p, q).value;
}

DedekindValue evaluate_dedekind_sum(long p, long q, const DedekindOptions& opts) {
    validate_pair(p, q);
    if (p == 1) {
        return DedekindValue{BigRational(0), false};
    }
    if (p <= opts.max_exact_p) {
        return DedekindValue{exact_sum(p, q)->value, false};
    }
    return DedekindValue{float_dedekind_sum(p, q, opts.precision_bits), true};
}

CycloElement dedekind_sum_element(long p, long q) {
    validate_pair(p, q);
    return exact_sum(p, q)->element;
}

CycloElement dedekind_summand(long p, long q, long a) {
    validate_pair(p, q);
    if (a < 1 || a > p - 1) {
        throw std::invalid_argument("dedekind_summand: index a must lie in [1, p-1]");
    }
    FieldPtr field = CycloField::get(4 * p);
    return CycloElement::from_coeffs(field, dedekind_coeffs(p, q, *field, a, a + 1));
}

BigRational sin_power_sum(long p, int l) {
    if (p < 1 || p % 2 == 0) {
        throw std::invalid_argument("sin_power_sum: p must be odd and positive");
    }
    if (l != 1 && l != 2) {
        throw std::invalid_argument("sin_power_sum: only l = 1 and l = 2 are defined");
    }
    if (p == 1) return BigRational(0);

    FieldPtr field = CycloField::get(4 * p);
    const long twop = 2 * p;
    auto run = [&]<class Ops>() {
        std::vector<BigRational> acc(field->degree());
        for (long a = 1; a < p; ++a) {
            Scaled<Ops> v = inverse_sine<Ops>(*field, p, mod_reduce(2LL * a, twop));
            Scaled<Ops> v2 = scaled_mul(*field, v, v);
            if (l == 2) v2 = scaled_mul(*field, v2, v2);
            Ops::accumulate(acc, v2.poly, v2.scale);
        }
        return acc;
    };
    std::vector<BigRational> acc;
    try {
        acc = run.template operator()<IntOps>();
    } catch (const FastOverflow&) {
        acc = run.template operator()<RatOps>();
    }
    std::optional<BigRational> value =
        CycloElement::from_coeffs(field, std::move(acc)).as_rational();
    if (!value) {
        throw internal_error("sin_power_sum: value failed to extract to a rational");
    }
    return *value;
}

BigRational dedekind_closed_form_succ(long p) {
    if (p < 1 || p % 2 == 0) {
        throw std::invalid_argument("dedekind_closed_form_succ: p must be odd and positive");
    }
    BigInt pb(p);
    BigInt num = (pb * pb - 1) * (pb * pb * pb + 3 * pb * pb + 9 * pb - 27);
    return BigRational(num, BigInt(1344) * pb * pb);  // 2^6 * 3 * 7 = 1344
}

BigRational duality_defect(long p, long q) {
    validate_pair(p, q);
    BigInt pb(p), qb(q);
    BigInt p2 = pb * pb, q2 = qb * qb;
    BigRational correction(BigInt(64) + 16 * (p2 + q2) + (p2 * p2 + q2 * q2),
                           BigInt(1792) * p2 * q2);  // 2^8 * 7 = 1792
    return generalized_dedekind_sum(p, q) + generalized_dedekind_sum(q, p) - correction +
           BigRational(7, 128);
}

namespace detail {

BigRational dedekind_sum_bignum(long p, long q) {
    validate_pair(p, q);
    if (p == 1) return BigRational(0);
    FieldPtr field = CycloField::get(4 * p);
    std::vector<BigRational> coeffs = accumulate_dedekind<RatOps>(p, q, *field, 1, p);
    std::optional<BigRational> value =
        CycloElement::from_coeffs(field, std::move(coeffs)).as_rational();
    if (!value) {
        throw internal_error("Dedekind sum: cyclotomic value failed to extract to a rational");
    }
    return *value;
}

}  // namespace detail

}  // namespace ek7

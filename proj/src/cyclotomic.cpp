#include "ek7/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ek7 {

namespace {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long mod_reduce(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Exact division of integer polynomials, ascending coefficients.
// Requires the divisor to be monic (ours always are) and the division
// to be exact; remainder is checked to vanish.
std::vector<BigInt> exact_poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    if (dd < 0 || den[dd] != 1) {
        throw internal_error("exact_poly_div: divisor must be monic");
    }
    std::vector<BigInt> quot(dn - dd + 1);
    for (long i = dn - dd; i >= 0; --i) {
        BigInt c = num[i + dd];
        quot[i] = c;
        if (sgn(c) == 0) continue;
        for (long j = 0; j <= dd; ++j) {
            num[i + j] -= c * den[j];
        }
    }
    for (const BigInt& c : num) {
        if (sgn(c) != 0) throw internal_error("exact_poly_div: nonzero remainder");
    }
    return quot;
}

std::map<long, std::vector<BigInt>> g_cyclo_memo;
std::mutex g_cyclo_mutex;

std::vector<BigInt> cyclotomic_polynomial_locked(long n) {
    auto it = g_cyclo_memo.find(n);
    if (it != g_cyclo_memo.end()) return it->second;

    // x^n - 1 divided by the product of Phi_d over proper divisors d.
    std::vector<BigInt> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    std::vector<BigInt> den{1};  // constant 1
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<BigInt>& phi_d = cyclotomic_polynomial_locked(d);
        std::vector<BigInt> prod(den.size() + phi_d.size() - 1);
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (sgn(den[i]) == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j) {
                prod[i + j] += den[i] * phi_d[j];
            }
        }
        den = std::move(prod);
    }
    std::vector<BigInt> result = n == 1 ? std::move(num) : exact_poly_div(std::move(num), den);
    g_cyclo_memo[n] = result;
    return result;
}

std::map<long, FieldPtr> g_field_cache;
std::mutex g_field_mutex;

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_polynomial_locked(n);
}

CycloField::CycloField(long n) : order_(n) {
    minpoly_ = cyclotomic_polynomial(n);
    degree_ = static_cast<long>(minpoly_.size()) - 1;
    if (degree_ != euler_phi(n)) {
        throw internal_error("CycloField: degree of Phi_n differs from phi(n)");
    }

    // zeta^j rows for 0 <= j <= max(n - 1, 2*degree - 2). Row j+1 is the
    // shift of row j with the overflowing top coefficient folded back in
    // through x^degree = -(lower part of Phi_n).
    long max_index = std::max(n - 1, 2 * degree_ - 2);
    table_.reserve(max_index + 1);
    std::vector<long long> phi_low(degree_);
    for (long i = 0; i < degree_; ++i) {
        if (!minpoly_[i].fits_slong_p()) {
            throw std::invalid_argument("CycloField: order outside supported table range");
        }
        phi_low[i] = minpoly_[i].get_si();
    }
    std::vector<long long> row(degree_);
    row[0] = 1;
    table_.push_back(row);
    for (long j = 1; j <= max_index; ++j) {
        long long top = row[degree_ - 1];
        for (long i = degree_ - 1; i >= 1; --i) {
            row[i] = row[i - 1];
        }
        row[0] = 0;
        if (top != 0) {
            for (long i = 0; i < degree_; ++i) {
                __int128 v = static_cast<__int128>(row[i]) -
                             static_cast<__int128>(top) * phi_low[i];
                if (v > INT64_MAX / 4 || v < INT64_MIN / 4) {
                    throw std::invalid_argument("CycloField: power table overflow; order unsupported");
                }
                row[i] = static_cast<long long>(v);
            }
        }
        table_.push_back(row);
    }
}

FieldPtr CycloField::get(long n) {
    if (n < 1) {
        throw std::invalid_argument("CycloField: order must be positive");
    }
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_field_cache.find(n);
    if (it != g_field_cache.end()) return it->second;
    FieldPtr field(new CycloField(n));
    g_field_cache[n] = field;
    return field;
}

const std::vector<long long>& CycloField::power_row(long j) const {
    if (j < 0 || j >= static_cast<long>(table_.size())) {
        j = mod_reduce(j, order_);
    }
    return table_[j];
}

namespace {

void require_same_field(const CycloElement& a, const CycloElement& b) {
    if (a.field()->order() != b.field()->order()) {
        throw std::invalid_argument("CycloElement: operands live in different fields");
    }
}

}  // namespace

CycloElement::CycloElement(FieldPtr field, std::vector<BigRational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != field_->degree()) {
        throw internal_error("CycloElement: coefficient vector has wrong length");
    }
}

CycloElement CycloElement::zero(FieldPtr field) {
    std::vector<BigRational> c(field->degree());
    return CycloElement(std::move(field), std::move(c));
}

CycloElement CycloElement::one(FieldPtr field) {
    return from_rational(std::move(field), BigRational(1));
}

CycloElement CycloElement::from_rational(FieldPtr field, const BigRational& r) {
    std::vector<BigRational> c(field->degree());
    c[0] = r;
    return CycloElement(std::move(field), std::move(c));
}

CycloElement CycloElement::from_coeffs(FieldPtr field, std::vector<BigRational> coeffs) {
    if (static_cast<long>(coeffs.size()) != field->degree()) {
        throw std::invalid_argument("CycloElement: expected phi(n) coefficients");
    }
    return CycloElement(std::move(field), std::move(coeffs));
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c.is_zero(); });
}

CycloElement CycloElement::operator-() const {
    std::vector<BigRational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    std::vector<BigRational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return CycloElement(a.field_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    std::vector<BigRational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return CycloElement(a.field_, std::move(c));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    const long deg = a.field_->degree();
    std::vector<BigRational> conv(2 * deg - 1);
    for (long i = 0; i < deg; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (long j = 0; j < deg; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<BigRational> c(conv.begin(), conv.begin() + deg);
    for (long j = deg; j < 2 * deg - 1; ++j) {
        if (conv[j].is_zero()) continue;
        const std::vector<long long>& row = a.field_->power_row(j);
        for (long i = 0; i < deg; ++i) {
            if (row[i] != 0) c[i] += conv[j] * BigRational(row[i]);
        }
    }
    return CycloElement(a.field_, std::move(c));
}

CycloElement operator*(const CycloElement& a, const BigRational& s) {
    std::vector<BigRational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] * s;
    return CycloElement(a.field_, std::move(c));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.field_->order() == b.field_->order() && a.coeffs_ == b.coeffs_;
}

namespace {

// Integer polynomial helpers for the extended gcd, ascending coefficients.

long poly_degree(const std::vector<BigInt>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
        if (sgn(p[i]) != 0) return i;
    }
    return -1;
}

BigInt poly_content(const std::vector<BigInt>& p, BigInt acc) {
    for (const BigInt& c : p) {
        if (sgn(c) != 0) {
            mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_mpz_t());
        }
        if (acc == 1) break;
    }
    return acc;
}

void poly_divexact(std::vector<BigInt>& p, const BigInt& g) {
    if (g == 1) return;
    for (BigInt& c : p) {
        if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

CycloElement CycloElement::invert() const {
    if (is_zero()) {
        throw std::domain_error("CycloElement: inverse of zero");
    }
    const long deg = field_->degree();

    // Clear denominators: *this = a(x) / d with a integral.
    BigInt d(1);
    for (const BigRational& c : coeffs_) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<BigInt> a(deg);
    for (long i = 0; i < deg; ++i) {
        a[i] = coeffs_[i].numerator() * (d / coeffs_[i].denominator());
    }

    // Extended Euclid on (Phi_n, a) tracking only the cofactor of a.
    // Invariant: r = u * a (mod Phi_n), up to a common rational scale that
    // the joint content stripping keeps exact. Phi_n is irreducible, so
    // the loop must terminate in a nonzero constant r.
    std::vector<BigInt> r0 = field_->minimal_poly();
    std::vector<BigInt> u0(1);
    std::vector<BigInt> r1 = a;
    std::vector<BigInt> u1{BigInt(1)};

    while (true) {
        long d1 = poly_degree(r1);
        if (d1 < 0) {
            throw internal_error("CycloElement: extended gcd degenerated (Phi_n not coprime?)");
        }
        if (d1 == 0) break;
        long d0 = poly_degree(r0);
        // Pseudo-division: lc(r1)^(d0-d1+1) * r0 = q * r1 + r2.
        BigInt lc1 = r1[d1];
        std::vector<BigInt> rem = r0;
        std::vector<BigInt> q(d0 - d1 + 1);
        for (long i = d0; i >= d1; --i) {
            for (BigInt& c : q) c *= lc1;
            for (long j = 0; j < i; ++j) rem[j] *= lc1;
            BigInt c = rem[i];
            rem[i] = 0;
            q[i - d1] = c;
            if (sgn(c) != 0) {
                for (long j = 0; j < d1; ++j) {
                    rem[j + i - d1] -= c * r1[j];
                }
            }
        }
        // u2 = lc1^(d0-d1+1) * u0 - q * u1
        BigInt lc_pow(1);
        mpz_pow_ui(lc_pow.get_mpz_t(), lc1.get_mpz_t(), d0 - d1 + 1);
        std::vector<BigInt> u2(std::max(u0.size(), u1.size() + q.size() - 1));
        for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i] * lc_pow;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) {
                u2[i + j] -= q[i] * u1[j];
            }
        }
        rem.resize(std::max<long>(d1, 1));
        BigInt g = poly_content(u2, poly_content(rem, BigInt(0)));
        if (sgn(g) != 0 && g != 1) {
            poly_divexact(rem, g);
            poly_divexact(u2, g);
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(rem);
        u1 = std::move(u2);
    }

    // r1 = c (nonzero constant), u1 * a = c (mod Phi_n), so the inverse
    // of a/d is (d/c) * u1, reduced mod Phi_n.
    BigRational scale = BigRational(d, BigInt(r1[0]));
    std::vector<BigRational> out(deg);
    for (std::size_t j = 0; j < u1.size(); ++j) {
        if (sgn(u1[j]) == 0) continue;
        BigRational c = BigRational(u1[j]) * scale;
        if (static_cast<long>(j) < deg) {
            out[j] += c;
        } else {
            const std::vector<long long>& row = field_->power_row(static_cast<long>(j));
            for (long i = 0; i < deg; ++i) {
                if (row[i] != 0) out[i] += c * BigRational(row[i]);
            }
        }
    }
    return CycloElement(field_, std::move(out));
}

CycloElement CycloElement::pow(unsigned long e) const {
    CycloElement result = one(field_);
    CycloElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return result;
}

std::optional<BigRational> CycloElement::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return std::nullopt;
    }
    return coeffs_[0];
}

CycloElement CycloElement::galois(long k) const {
    const long n = field_->order();
    long kr = mod_reduce(k, n);
    if (std::gcd(kr, n) != 1) {
        throw std::invalid_argument("CycloElement: Galois substitution needs gcd(k, n) = 1");
    }
    const long deg = field_->degree();
    std::vector<BigRational> out(deg);
    for (long j = 0; j < deg; ++j) {
        if (coeffs_[j].is_zero()) continue;
        const std::vector<long long>& row = field_->power_row(mod_reduce(j * kr, n));
        for (long i = 0; i < deg; ++i) {
            if (row[i] != 0) out[i] += coeffs_[j] * BigRational(row[i]);
        }
    }
    return CycloElement(field_, std::move(out));
}

CycloElement root_of_unity(FieldPtr field, long k) {
    const long deg = field->degree();
    const std::vector<long long>& row = field->power_row(mod_reduce(k, field->order()));
    std::vector<BigRational> c(deg);
    for (long i = 0; i < deg; ++i) {
        if (row[i] != 0) c[i] = BigRational(row[i]);
    }
    return CycloElement::from_coeffs(std::move(field), std::move(c));
}

CycloElement sin_pi_frac(long a, long p) {
    if (p < 1) {
        throw std::invalid_argument("sin_pi_frac: p must be positive");
    }
    FieldPtr field = CycloField::get(4 * p);
    CycloElement diff = root_of_unity(field, 2 * a) - root_of_unity(field, -2 * a);
    // 1/(2 zeta^p) = zeta^{3p} / 2.
    return diff * root_of_unity(field, 3 * p) * BigRational(1, 2);
}

CycloElement cos_pi_frac(long a, long p) {
    if (p < 1) {
        throw std::invalid_argument("cos_pi_frac: p must be positive");
    }
    FieldPtr field = CycloField::get(4 * p);
    return (root_of_unity(field, 2 * a) + root_of_unity(field, -2 * a)) * BigRational(1, 2);
}

ComplexApprox eval_float(const CycloElement& a, long bits) {
    if (bits < 64) {
        throw std::invalid_argument("eval_float: need at least 64 bits");
    }
    const long n = a.field()->order();
    BigFloat theta = BigFloat::pi(bits);
    theta.mul_long(2).div_long(n);
    BigFloat re(bits), im(bits), s(bits), c(bits);
    const std::vector<BigRational>& coeffs = a.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        BigFloat angle = theta;
        angle.mul_long(static_cast<long>(j));
        angle.sin_cos(s, c);
        BigFloat w = BigFloat::from(coeffs[j], bits);
        re += w * c;
        im += w * s;
    }
    return ComplexApprox{std::move(re), std::move(im)};
}

}  // namespace ek7

#ifndef EK7_CYCLOTOMIC_HPP
#define EK7_CYCLOTOMIC_HPP

#include <memory>
#include <optional>
#include <vector>

#include "ek7/bigfloat.hpp"
#include "ek7/rational.hpp"

namespace ek7 {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// monic, degree phi(n). Computed by dividing x^n - 1 by the product of
/// all lower-order cyclotomic polynomials; results are memoized.
std::vector<BigInt> cyclotomic_polynomial(long n);

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

/**
 * The field Q(zeta_n) presented as Q[x]/(Phi_n). Immutable and shared;
 * obtain instances through CycloField::get, which caches one object per
 * order so field identity is pointer identity.
 *
 * The field precomputes zeta^j reduced mod Phi_n for every exponent that
 * can appear while reducing a product of two reduced elements. Rows are
 * stored as int64 vectors; the entries for the orders used here are tiny
 * (construction checks this and refuses orders where they would not fit).
 */
class CycloField {
public:
    static FieldPtr get(long n);

    long order() const { return order_; }
    long degree() const { return degree_; }  // phi(n)
    const std::vector<BigInt>& minimal_poly() const { return minpoly_; }

    /// zeta^j as a reduced coefficient row of length degree(); j is taken
    /// mod order. Also valid for the product-reduction range
    /// [degree, 2*degree - 2].
    const std::vector<long long>& power_row(long j) const;

    long max_power_index() const { return static_cast<long>(table_.size()) - 1; }

private:
    explicit CycloField(long n);

    long order_;
    long degree_;
    std::vector<BigInt> minpoly_;
    std::vector<std::vector<long long>> table_;
};

/**
 * An element of Q(zeta_n): a coefficient vector of length phi(n),
 * representing a polynomial in zeta reduced mod Phi_n. Reduction is
 * maintained eagerly, so the vector length never varies. Elements are
 * immutable values; all operations are pure and exact.
 */
class CycloElement {
public:
    static CycloElement zero(FieldPtr field);
    static CycloElement one(FieldPtr field);
    static CycloElement from_rational(FieldPtr field, const BigRational& r);
    static CycloElement from_coeffs(FieldPtr field, std::vector<BigRational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const BigRational& s);
    friend CycloElement operator*(const BigRational& s, const CycloElement& a) { return a * s; }
    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

    CycloElement& operator+=(const CycloElement& o) { return *this = *this + o; }
    CycloElement& operator-=(const CycloElement& o) { return *this = *this - o; }
    CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }

    /// Multiplicative inverse via the extended gcd of the representing
    /// polynomial with Phi_n over Q. Phi_n is irreducible, so every
    /// nonzero element is invertible; zero input is a domain error.
    CycloElement invert() const;

    /// Small-exponent power by repeated squaring.
    CycloElement pow(unsigned long e) const;

    /// The exact rational value, iff all coefficients of index >= 1
    /// vanish. Never approximates: a non-rational element yields nullopt.
    std::optional<BigRational> as_rational() const;

    /// The Galois substitution zeta -> zeta^k; requires gcd(k, n) = 1.
    CycloElement galois(long k) const;

private:
    CycloElement(FieldPtr field, std::vector<BigRational> coeffs);

    FieldPtr field_;
    std::vector<BigRational> coeffs_;
};

/// zeta_n^k reduced mod Phi_n (k arbitrary, reduced mod n).
CycloElement root_of_unity(FieldPtr field, long k);

/// Exact sin(a*pi/p) and cos(a*pi/p) as elements of Q(zeta_{4p}):
/// with z = zeta_{4p}, sin = (z^{2a} - z^{-2a}) / (2 z^p) and
/// cos = (z^{2a} + z^{-2a}) / 2.
CycloElement sin_pi_frac(long a, long p);
CycloElement cos_pi_frac(long a, long p);

/// Evaluates the representing polynomial at e^{2 pi i / n} with `bits`
/// of working precision (bits >= 64). The result differs from the true
/// value by at most 2^(8 - bits) * (sum of |coeff|).
ComplexApprox eval_float(const CycloElement& a, long bits);

}  // namespace ek7

#endif

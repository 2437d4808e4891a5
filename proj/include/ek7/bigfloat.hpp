#ifndef EK7_BIGFLOAT_HPP
#define EK7_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "ek7/rational.hpp"

namespace ek7 {

/**
 * Minimal RAII wrapper around an mpfr_t working value. Only the handful
 * of operations the numeric oracle needs; everything rounds to nearest
 * at the value's own precision.
 */
class BigFloat {
public:
    explicit BigFloat(long bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long precision() const { return mpfr_get_prec(v_); }

    static BigFloat from(const BigRational& r, long bits);
    static BigFloat from_long(long n, long bits);
    static BigFloat pi(long bits);

    /// 2^e at this precision.
    static BigFloat pow2(long e, long bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    BigFloat& mul_long(long n);
    BigFloat& div_long(long n);

    BigFloat abs() const;
    void sin_cos(BigFloat& s, BigFloat& c) const;
    BigFloat sqrt() const;

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 40) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

/// A complex approximation as a (re, im) pair of BigFloats.
struct ComplexApprox {
    BigFloat re;
    BigFloat im;
};

/// |x - r| <= tol, evaluated at x's precision.
bool approx_equals(const BigFloat& x, const BigRational& r, const BigRational& tol);

}  // namespace ek7

#endif

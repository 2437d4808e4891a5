#include "ek7/bigfloat.hpp"

#include <stdexcept>

namespace ek7 {

BigFloat::BigFloat(long bits) {
    if (bits < 2) {
        throw std::invalid_argument("BigFloat: precision must be at least 2 bits");
    }
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::from(const BigRational& r, long bits) {
    BigFloat x(bits);
    mpfr_set_q(x.v_, r.raw().get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_long(long n, long bits) {
    BigFloat x(bits);
    mpfr_set_si(x.v_, n, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::pi(long bits) {
    BigFloat x(bits);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::pow2(long e, long bits) {
    BigFloat x(bits);
    mpfr_set_si_2exp(x.v_, 1, e, MPFR_RNDN);
    return x;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::mul_long(long n) {
    mpfr_mul_si(v_, v_, n, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::div_long(long n) {
    mpfr_div_si(v_, v_, n, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::abs() const {
    BigFloat x(*this);
    mpfr_abs(x.v_, x.v_, MPFR_RNDN);
    return x;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::sqrt() const {
    BigFloat x(*this);
    mpfr_sqrt(x.v_, x.v_, MPFR_RNDN);
    return x;
}

std::string BigFloat::str(int digits) const {
    char* out = nullptr;
    if (mpfr_asprintf(&out, "%.*Rg", digits, v_) < 0) {
        throw internal_error("BigFloat: formatting failed");
    }
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

bool approx_equals(const BigFloat& x, const BigRational& r, const BigRational& tol) {
    long bits = x.precision();
    BigFloat diff = (x - BigFloat::from(r, bits)).abs();
    return diff <= BigFloat::from(tol, bits);
}

}  // namespace ek7

#ifndef EK7_RATIONAL_HPP
#define EK7_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ek7 {

using BigInt = mpz_class;

/// Error for states that are impossible under the library's contracts
/// (e.g. a cyclotomic sum that fails to extract to a rational). Reaching
/// one of these indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Arbitrary-precision rational number in canonical form.
 *
 * Invariants: denominator > 0, gcd(|numerator|, denominator) = 1,
 * zero is 0/1. All arithmetic is exact; there is no rounding anywhere.
 * Values are immutable in spirit: every operation returns a new value.
 */
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses the canonical text form: "-27/1120", "3", "0".
    static BigRational parse(const std::string& text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Largest integer <= *this.
    BigInt floor() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) {
        return !(a == b);
    }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical text form; integers print without the "/1".
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
    explicit BigRational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;  // mpq_class keeps gcd=1 and den>0 once canonicalized
};

BigRational pow(const BigRational& base, unsigned long exp);

}  // namespace ek7

#endif

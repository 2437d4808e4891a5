#ifndef EK7_QMODZ_HPP
#define EK7_QMODZ_HPP

#include <iosfwd>
#include <string>

#include "ek7/rational.hpp"

namespace ek7 {

/**
 * A rational considered modulo 1, stored as its canonical representative
 * in [0, 1). Two rationals give the same QmodZ exactly when their
 * difference is an integer, so equality is plain syntactic comparison.
 */
class QmodZ {
public:
    QmodZ() = default;  // zero class

    const BigRational& value() const { return value_; }

    /// Representative in (-1/2, 1/2]; the natural way of quoting small
    /// negative classes such as -27/1120.
    BigRational symmetric() const;

    friend bool operator==(const QmodZ& a, const QmodZ& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const QmodZ& a, const QmodZ& b) { return !(a == b); }

    QmodZ operator-() const;
    friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b);

    std::string str() const { return value_.str(); }
    friend std::ostream& operator<<(std::ostream& os, const QmodZ& q);

    friend QmodZ qmodz_reduce(const BigRational& r);

private:
    explicit QmodZ(BigRational v) : value_(std::move(v)) {}
    BigRational value_;  // always in [0, 1)
};

/// r mod 1, i.e. r - floor(r).
QmodZ qmodz_reduce(const BigRational& r);

}  // namespace ek7

#endif

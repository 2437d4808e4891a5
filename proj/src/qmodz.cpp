#include "ek7/qmodz.hpp"

#include <ostream>

namespace ek7 {

QmodZ qmodz_reduce(const BigRational& r) {
    return QmodZ(r - BigRational(r.floor()));
}

BigRational QmodZ::symmetric() const {
    if (value_ <= BigRational(1, 2)) {
        return value_;
    }
    return value_ - BigRational(1);
}

QmodZ QmodZ::operator-() const {
    return qmodz_reduce(-value_);
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    return qmodz_reduce(a.value_ + b.value_);
}

QmodZ operator-(const QmodZ& a, const QmodZ& b) {
    return qmodz_reduce(a.value_ - b.value_);
}

std::ostream& operator<<(std::ostream& os, const QmodZ& q) {
    return os << q.value_;
}

}  // namespace ek7

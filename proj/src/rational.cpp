#include "ek7/rational.hpp"

#include <cctype>
#include <ostream>

namespace ek7 {

namespace {

void require_nonzero_den(const BigInt& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
}

}  // namespace

BigRational::BigRational(long num, long den) : v_(num, den) {
    require_nonzero_den(BigInt(den));
    v_.canonicalize();
}

BigRational::BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    require_nonzero_den(den);
    v_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        throw std::invalid_argument("BigRational: cannot parse \"" + text + "\"");
    }
    return BigRational(BigInt(num), BigInt(den));
}

BigInt BigRational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigRational BigRational::operator-() const {
    return BigRational(mpq_class(-v_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string BigRational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += "/" + v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.str();
}

BigRational pow(const BigRational& base, unsigned long exp) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return BigRational(n, d);
}

}  // namespace ek7

#pragma once

#include "errors.hpp"
#include "integers.hpp"

#include <ostream>
#include <string>

namespace spinq {

/// Element of Q/Z in lowest terms with representative in [0, 1).
/// All arithmetic is exact; equality is plain field comparison.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}

    QmodZ(const Int& num, const Int& den) { reduce(num, den); }

    explicit QmodZ(const Rational& r) {
        reduce(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    /// The canonical rational representative in [0, 1).
    Rational representative() const { return Rational(num_, den_); }

    bool is_zero() const { return num_ == 0; }

    QmodZ operator+(const QmodZ& o) const {
        return QmodZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    QmodZ operator-(const QmodZ& o) const {
        return QmodZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    QmodZ operator-() const { return QmodZ(-num_, den_); }

    /// Integer scaling; n * (p/q) stays well defined modulo 1.
    QmodZ operator*(const Int& n) const { return QmodZ(num_ * n, den_); }

    QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }
    QmodZ& operator-=(const QmodZ& o) { return *this = *this - o; }

    bool operator==(const QmodZ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QmodZ& o) const { return !(*this == o); }

    /// Order by canonical representative; gives maps a deterministic layout.
    bool operator<(const QmodZ& o) const { return num_ * o.den_ < o.num_ * den_; }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    long double to_long_double() const {
        return num_.convert_to<long double>() / den_.convert_to<long double>();
    }

private:
    void reduce(Int num, Int den) {
        if (den == 0)
            throw Error("zero denominator in Q/Z element");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) num += den;
        Int g = gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    Int num_, den_;
};

inline QmodZ operator*(const Int& n, const QmodZ& x) { return x * n; }

inline std::ostream& operator<<(std::ostream& os, const QmodZ& x) {
    return os << x.str();
}

/// Representative of a rational number in [0, 1), as an exact rational.
inline Rational fractional_part(const Rational& r) {
    const Int& p = boost::multiprecision::numerator(r);
    const Int& q = boost::multiprecision::denominator(r);
    return Rational(floor_mod(p, q), q);
}

} // namespace spinq

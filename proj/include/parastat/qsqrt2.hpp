#pragma once

#include "parastat/rational.hpp"

#include <stdexcept>
#include <string>

namespace parastat {

// Element a + b*sqrt(2) of the quadratic field Q(sqrt(2)).
// Equality is componentwise; the field is closed under +,-,*,/.
struct QSqrt2 {
    Rational a;
    Rational b;

    QSqrt2() = default;
    QSqrt2(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    QSqrt2(long n) : a(n), b(0) {}

    static QSqrt2 sqrt2(Rational coeff = Rational(1)) { return QSqrt2(Rational(0), coeff); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    QSqrt2 operator-() const { return QSqrt2(-a, -b); }
    QSqrt2 operator+(const QSqrt2 &o) const { return QSqrt2(a + o.a, b + o.b); }
    QSqrt2 operator-(const QSqrt2 &o) const { return QSqrt2(a - o.a, b - o.b); }

    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s, s^2 = 2.
    QSqrt2 operator*(const QSqrt2 &o) const {
        return QSqrt2(a * o.a + Rational(2) * b * o.b, a * o.b + o.a * b);
    }

    // 1/(a + b s) = (a - b s) / (a^2 - 2 b^2); the norm a^2 - 2b^2 vanishes
    // only at zero since sqrt(2) is irrational.
    QSqrt2 inverse() const {
        if (is_zero())
            throw std::domain_error("QSqrt2: inverse of zero");
        Rational norm = a * a - Rational(2) * b * b;
        return QSqrt2(a / norm, -b / norm);
    }

    QSqrt2 operator/(const QSqrt2 &o) const { return *this * o.inverse(); }

    QSqrt2 &operator+=(const QSqrt2 &o) { a += o.a; b += o.b; return *this; }
    QSqrt2 &operator-=(const QSqrt2 &o) { a -= o.a; b -= o.b; return *this; }
    QSqrt2 &operator*=(const QSqrt2 &o) { *this = *this * o; return *this; }

    bool operator==(const QSqrt2 &o) const { return a == o.a && b == o.b; }
    bool operator!=(const QSqrt2 &o) const { return !(*this == o); }

    // As the rational it is, or throws. Used where cancellation of all
    // sqrt(2) terms is a structural guarantee (engine structure constants).
    Rational rational_part_checked() const {
        if (!b.is_zero())
            throw std::domain_error("QSqrt2: residual sqrt(2) component " + b.str());
        return a;
    }

    std::string str() const {
        if (b.is_zero())
            return a.str();
        if (a.is_zero())
            return b.str() + "*sqrt2";
        return a.str() + (b.sign() < 0 ? "" : "+") + b.str() + "*sqrt2";
    }
};

inline QSqrt2 operator*(const Rational &r, const QSqrt2 &x) { return QSqrt2(r, Rational(0)) * x; }
inline QSqrt2 operator*(long n, const QSqrt2 &x) { return Rational(n) * x; }

} // namespace parastat

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parastat {

// Arbitrary-precision rational, always in reduced canonical form with a
// positive denominator. Canonical zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(int n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    // Parses "p/q", "p", or "-p/q". Used by the CLI and JSON readers.
    static Rational parse(const std::string &s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        if (q.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        return Rational(q);
    }

    const mpq_class &raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Canonical reduced string: "0", "3", "-1/2", ...
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational &o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational &o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational &o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational &o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o) { *this = *this / o; return *this; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rational &o) const { return q_ == o.q_; }
    bool operator!=(const Rational &o) const { return q_ != o.q_; }
    bool operator<(const Rational &o) const { return q_ < o.q_; }
    bool operator<=(const Rational &o) const { return q_ <= o.q_; }
    bool operator>(const Rational &o) const { return q_ > o.q_; }
    bool operator>=(const Rational &o) const { return q_ >= o.q_; }

  private:
    mpq_class q_;
};

inline Rational operator*(long n, const Rational &r) { return Rational(n) * r; }

} // namespace parastat

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpalg {

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; zero is 0/1. Immutable values are safe to share
/// across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "num", "-num" or "num/den".
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// "num" for integers, "num/den" otherwise (GMP canonical form).
    std::string to_string() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// C_p = (4p)^(2p-1) / ((2p-1)!)^2, the structure constant of the quotient
/// ring presentations. Rejects p < 2.
Rational cp_constant(int p);

}  // namespace wpalg

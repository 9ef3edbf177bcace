#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tle {

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "a/b", integers and decimal literals such as "0.9342" or "-1.5e-3"; all exact.
    static Rational parse(std::string_view text);
    static Rational from_double(double x);

    const mpq_class& q() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    std::string str() const;
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational pow(int e) const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace tle

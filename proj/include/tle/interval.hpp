#pragma once

#include "tle/rational.hpp"

#include <string>

namespace tle {

class Interval {
public:
    Interval() = default;
    Interval(const Rational& x) : lo_(x), hi_(x) {}
    Interval(int x) : lo_(x), hi_(x) {}
    Interval(const Rational& lo, const Rational& hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return !(o.hi_ < lo_ || hi_ < o.lo_); }
    bool positive() const { return lo_.sign() > 0; }
    bool negative() const { return hi_.sign() < 0; }
    bool straddles_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0 && !(lo_.is_zero() && hi_.is_zero()); }
    bool is_point() const { return lo_ == hi_; }

    Interval intersect(const Interval& o) const;
    Interval hull(const Interval& o) const;
    // Smallest interval with endpoints on the grid 2^-bits that contains this one.
    Interval round_out(unsigned bits) const;

    Interval operator-() const { return Interval(-hi_, -lo_); }
    friend Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }
    friend Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval pow(int e) const;

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

    std::string str() const;

private:
    Rational lo_, hi_;
};

// a < b for every point of both intervals.
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }

Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);
Interval sqrt_out(const Interval& x, unsigned bits);
Interval cbrt_out(const Interval& x, unsigned bits);

}  // namespace tle

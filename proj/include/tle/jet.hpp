#pragma once

#include <cstddef>
#include <vector>

namespace tle {

// Truncated Taylor series in long double. c[j] holds f^(j)(x0) / j!.
class Jet {
public:
    Jet() = default;
    Jet(std::size_t order, long double value);

    static Jet variable(long double x, std::size_t order);
    static Jet constant(long double c, std::size_t order) { return Jet(order, c); }

    std::size_t order() const { return c_.size() - 1; }
    long double value() const { return c_[0]; }
    long double coeff(std::size_t j) const { return j < c_.size() ? c_[j] : 0.0L; }
    long double& coeff(std::size_t j) { return c_[j]; }
    // f^(j)(x0)
    long double deriv(std::size_t j) const;

    Jet derivative() const;
    Jet truncate(std::size_t order) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(long double s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(Jet a, long double s) { return a *= s; }
    friend Jet operator*(long double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, long double s);
    friend Jet operator+(long double s, Jet a) { return a + s; }
    friend Jet operator-(Jet a, long double s) { return a + (-s); }
    friend Jet operator-(long double s, const Jet& a) { return (-a) + s; }

private:
    std::vector<long double> c_{0.0L};
};

Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sin(const Jet& x);
Jet cos(const Jet& x);
// x^a with x(x0) > 0
Jet pow(const Jet& x, long double a);
Jet ipow(const Jet& x, unsigned m);

}  // namespace tle

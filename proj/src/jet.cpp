#include "tle/jet.hpp"

#include "tle/error.hpp"

#include <algorithm>
#include <cmath>

namespace tle {

Jet::Jet(std::size_t order, long double value) : c_(order + 1, 0.0L) { c_[0] = value; }

Jet Jet::variable(long double x, std::size_t order)
{
    Jet j(order, x);
    if (order >= 1)
        j.c_[1] = 1.0L;
    return j;
}

long double Jet::deriv(std::size_t j) const
{
    long double f = 1.0L;
    for (std::size_t i = 2; i <= j; ++i)
        f *= static_cast<long double>(i);
    return coeff(j) * f;
}

Jet Jet::derivative() const
{
    Jet d(order() == 0 ? 0 : order() - 1, 0.0L);
    for (std::size_t j = 1; j < c_.size(); ++j)
        d.c_[j - 1] = static_cast<long double>(j) * c_[j];
    return d;
}

Jet Jet::truncate(std::size_t order) const
{
    Jet t(order, 0.0L);
    for (std::size_t j = 0; j <= order && j < c_.size(); ++j)
        t.c_[j] = c_[j];
    return t;
}

Jet& Jet::operator+=(const Jet& o)
{
    if (o.c_.size() < c_.size())
        c_.resize(o.c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j)
        c_[j] += o.c_[j];
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    if (o.c_.size() < c_.size())
        c_.resize(o.c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j)
        c_[j] -= o.c_[j];
    return *this;
}

Jet& Jet::operator*=(long double s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

Jet operator-(Jet a)
{
    for (auto& x : a.c_)
        x = -x;
    return a;
}

Jet operator+(Jet a, long double s)
{
    a.c_[0] += s;
    return a;
}

Jet operator*(const Jet& a, const Jet& b)
{
    std::size_t n = std::min(a.order(), b.order());
    Jet r(n, 0.0L);
    for (std::size_t k = 0; k <= n; ++k) {
        long double s = 0.0L;
        for (std::size_t i = 0; i <= k; ++i)
            s += a.c_[i] * b.c_[k - i];
        r.c_[k] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b)
{
    if (b.c_[0] == 0.0L)
        throw Error(ErrorKind::domain, "jet division by a series vanishing at the base point");
    std::size_t n = std::min(a.order(), b.order());
    Jet q(n, 0.0L);
    for (std::size_t k = 0; k <= n; ++k) {
        long double s = a.c_[k];
        for (std::size_t i = 1; i <= k; ++i)
            s -= b.c_[i] * q.c_[k - i];
        q.c_[k] = s / b.c_[0];
    }
    return q;
}

Jet exp(const Jet& x)
{
    std::size_t n = x.order();
    Jet e(n, std::exp(x.value()));
    for (std::size_t k = 1; k <= n; ++k) {
        long double s = 0.0L;
        for (std::size_t i = 1; i <= k; ++i)
            s += static_cast<long double>(i) * x.coeff(i) * e.coeff(k - i);
        e.coeff(k) = s / static_cast<long double>(k);
    }
    return e;
}

Jet log(const Jet& x)
{
    if (x.value() <= 0.0L)
        throw Error(ErrorKind::domain, "jet logarithm of a nonpositive value");
    std::size_t n = x.order();
    Jet l(n, std::log(x.value()));
    for (std::size_t k = 1; k <= n; ++k) {
        long double s = static_cast<long double>(k) * x.coeff(k);
        for (std::size_t i = 1; i < k; ++i)
            s -= static_cast<long double>(i) * l.coeff(i) * x.coeff(k - i);
        l.coeff(k) = s / (static_cast<long double>(k) * x.value());
    }
    return l;
}

namespace {

void sincos(const Jet& x, Jet& s, Jet& c)
{
    std::size_t n = x.order();
    s = Jet(n, std::sin(x.value()));
    c = Jet(n, std::cos(x.value()));
    for (std::size_t k = 1; k <= n; ++k) {
        long double ss = 0.0L, cc = 0.0L;
        for (std::size_t i = 1; i <= k; ++i) {
            long double w = static_cast<long double>(i) * x.coeff(i);
            ss += w * c.coeff(k - i);
            cc -= w * s.coeff(k - i);
        }
        s.coeff(k) = ss / static_cast<long double>(k);
        c.coeff(k) = cc / static_cast<long double>(k);
    }
}

}  // namespace

Jet sin(const Jet& x)
{
    Jet s, c;
    sincos(x, s, c);
    return s;
}

Jet cos(const Jet& x)
{
    Jet s, c;
    sincos(x, s, c);
    return c;
}

Jet pow(const Jet& x, long double a)
{
    if (x.value() <= 0.0L)
        throw Error(ErrorKind::domain, "jet power of a nonpositive value");
    // (x^a)' x = a x' x^a, solved term by term
    std::size_t n = x.order();
    Jet r(n, std::pow(x.value(), a));
    for (std::size_t k = 1; k <= n; ++k) {
        long double s = 0.0L;
        for (std::size_t i = 1; i <= k; ++i)
            s += (a * static_cast<long double>(i) - static_cast<long double>(k - i)) * x.coeff(i) * r.coeff(k - i);
        r.coeff(k) = s / (static_cast<long double>(k) * x.value());
    }
    return r;
}

Jet ipow(const Jet& x, unsigned m)
{
    Jet r = Jet::constant(1.0L, x.order());
    Jet b = x;
    while (m) {
        if (m & 1u)
            r = r * b;
        b = b * b;
        m >>= 1u;
    }
    return r;
}

}  // namespace tle

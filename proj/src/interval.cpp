#include "tle/interval.hpp"

#include "tle/error.hpp"

namespace tle {

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi)
{
    if (hi_ < lo_)
        throw Error(ErrorKind::domain, "interval with lo > hi");
}

Interval Interval::intersect(const Interval& o) const
{
    if (!intersects(o))
        throw Error(ErrorKind::domain, "disjoint intervals " + str() + " and " + o.str());
    return Interval(max(lo_, o.lo_), min(hi_, o.hi_));
}

Interval Interval::hull(const Interval& o) const { return Interval(min(lo_, o.lo_), max(hi_, o.hi_)); }

namespace {

mpz_class scaled_floor(const Rational& x, unsigned bits)
{
    mpz_class n = x.num();
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), bits);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
    return r;
}

mpz_class scaled_ceil(const Rational& x, unsigned bits)
{
    mpz_class n = x.num();
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), bits);
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
    return r;
}

Rational on_grid(const mpz_class& m, unsigned bits)
{
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
    return Rational(m, d);
}

mpz_class root_floor(const mpz_class& m, unsigned long k)
{
    mpz_class r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
    return r;
}

mpz_class root_ceil(const mpz_class& m, unsigned long k)
{
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
    if (!exact)
        r += 1;
    return r;
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits)
{
    if (x.den() == 1)
        return x;
    return on_grid(scaled_floor(x, bits), bits);
}

Rational round_up(const Rational& x, unsigned bits)
{
    if (x.den() == 1)
        return x;
    return on_grid(scaled_ceil(x, bits), bits);
}

Interval Interval::round_out(unsigned bits) const { return Interval(round_down(lo_, bits), round_up(hi_, bits)); }

Interval operator*(const Interval& a, const Interval& b)
{
    Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    Rational lo = p[0], hi = p[0];
    for (const auto& v : p) {
        lo = min(lo, v);
        hi = max(hi, v);
    }
    return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
        throw Error(ErrorKind::domain, "interval division by an interval containing zero");
    return a * Interval(Rational(1) / b.hi_, Rational(1) / b.lo_);
}

Interval Interval::pow(int e) const
{
    if (e < 0)
        return Interval(1) / pow(-e);
    if (e == 0)
        return Interval(1);
    Rational a = lo_.pow(e), b = hi_.pow(e);
    if (e % 2 == 1)
        return Interval(a, b);
    if (lo_.sign() >= 0)
        return Interval(a, b);
    if (hi_.sign() <= 0)
        return Interval(b, a);
    return Interval(Rational(0), max(a, b));
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval sqrt_out(const Interval& x, unsigned bits)
{
    if (x.lo().sign() < 0)
        throw Error(ErrorKind::domain, "square root of an interval reaching below zero");
    // floor/ceil of sqrt(x * 4^bits) on the grid 2^-bits
    mpz_class lo = root_floor(scaled_floor(x.lo(), 2 * bits), 2);
    mpz_class hi = root_ceil(scaled_ceil(x.hi(), 2 * bits), 2);
    return Interval(on_grid(lo, bits), on_grid(hi, bits));
}

Interval cbrt_out(const Interval& x, unsigned bits)
{
    auto down = [&](const Rational& v) {
        if (v.sign() >= 0)
            return on_grid(root_floor(scaled_floor(v, 3 * bits), 3), bits);
        return -on_grid(root_ceil(scaled_ceil(-v, 3 * bits), 3), bits);
    };
    auto up = [&](const Rational& v) {
        if (v.sign() >= 0)
            return on_grid(root_ceil(scaled_ceil(v, 3 * bits), 3), bits);
        return -on_grid(root_floor(scaled_floor(-v, 3 * bits), 3), bits);
    };
    return Interval(down(x.lo()), up(x.hi()));
}

}  // namespace tle

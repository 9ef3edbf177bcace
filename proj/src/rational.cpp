#include "tle/rational.hpp"

#include "tle/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace tle {

Rational::Rational(long long v) : q_(static_cast<long>(v))
{
    static_assert(sizeof(long) == sizeof(long long));
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw Error(ErrorKind::domain, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::usage, "not a rational number: '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational a = parse(s.substr(0, slash));
        Rational b = parse(s.substr(slash + 1));
        if (b.is_zero())
            throw bad();
        return a / b;
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long exp10 = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_point)
                --exp10;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit)
        throw bad();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E')
            throw bad();
        std::string e = s.substr(i + 1);
        if (e.empty())
            throw bad();
        char* end = nullptr;
        long v = std::strtol(e.c_str(), &end, 10);
        if (*end != '\0')
            throw bad();
        exp10 += v;
    }
    mpz_class m(digits, 10);
    if (neg)
        m = -m;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    return exp10 >= 0 ? Rational(mpz_class(m * p10)) : Rational(m, p10);
}

Rational Rational::from_double(double x)
{
    if (!std::isfinite(x))
        throw Error(ErrorKind::domain, "non-finite value has no rational form");
    return Rational(mpq_class(x));
}

std::string Rational::str() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long double Rational::to_long_double() const
{
    // mpq -> long double through a 80-bit mantissa: scale the quotient by a power of two
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (n == 0)
        return 0.0L;
    long shift = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 70;
    mpz_class scaled;
    if (shift >= 0)
        mpz_mul_2exp(scaled.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_fdiv_q_2exp(scaled.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_class quo = scaled / d;
    long double m = std::strtold(quo.get_str().c_str(), nullptr);
    return std::ldexp(m, static_cast<int>(-shift));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(int e) const
{
    if (e < 0) {
        if (is_zero())
            throw Error(ErrorKind::domain, "zero to a negative power");
        return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::domain, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tle

#include "tle/polynomial.hpp"

#include "tle/error.hpp"

#include <algorithm>
#include <sstream>

namespace tle {

Polynomial::Polynomial(std::vector<Rational> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var))
{
    trim();
}

Polynomial Polynomial::from_ints(std::initializer_list<long long> ascending, std::string var)
{
    std::vector<Rational> c;
    for (long long v : ascending)
        c.emplace_back(v);
    return Polynomial(std::move(c), std::move(var));
}

Polynomial Polynomial::from_ints_desc(std::initializer_list<long long> descending, std::string var)
{
    std::vector<Rational> c;
    for (long long v : descending)
        c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return Polynomial(std::move(c), std::move(var));
}

Polynomial Polynomial::identity(std::string var)
{
    return Polynomial({Rational(0), Rational(1)}, std::move(var));
}

Polynomial Polynomial::monomial(const Rational& c, int degree, std::string var)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v), std::move(var));
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Polynomial Polynomial::with_var(std::string var) const
{
    Polynomial p = *this;
    p.var_ = std::move(var);
    return p;
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d), var_);
}

Polynomial Polynomial::compose(const Polynomial& inner) const
{
    Polynomial acc(std::vector<Rational>{}, inner.var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + *it;
    return acc.with_var(inner.var_);
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / lead());
}

Polynomial Polynomial::squarefree_part() const
{
    if (degree() < 1)
        return *this;
    Polynomial g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
}

Polynomial Polynomial::scaled_argument(const Rational& s) const
{
    Polynomial p = *this;
    Rational f(1);
    for (auto& c : p.c_) {
        c *= f;
        f *= s;
    }
    p.trim();
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    if (var_ == "x" && o.var_ != "x")
        var_ = o.var_;
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    if (var_ == "x" && o.var_ != "x")
        var_ = o.var_;
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    if (var_ == "x" && o.var_ != "x")
        var_ = o.var_;
    trim();
    return *this;
}

Polynomial operator*(Polynomial a, const Rational& b)
{
    for (auto& c : a.c_)
        c *= b;
    a.trim();
    return a;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw Error(ErrorKind::domain, "negative polynomial power");
    Polynomial r(std::vector<Rational>{Rational(1)}, var_);
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Rational a = c.abs();
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        std::string num = a.is_integer() ? a.num().get_str() : "(" + a.num().get_str() + "/" + a.den().get_str() + ")";
        if (i == 0) {
            os << num;
            continue;
        }
        if (!(a == Rational(1)))
            os << num << "*";
        os << var_;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::domain, "polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db)
        return {Polynomial(std::vector<Rational>{}, a.var()), a};
    std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
    Rational inv = Rational(1) / b.lead();
    for (int i = da; i >= db; --i) {
        const Rational c = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(q), a.var()), Polynomial(std::move(r), a.var())};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace tle

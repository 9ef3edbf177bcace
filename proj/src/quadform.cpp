#include "tle/quadform.hpp"

#include "tle/error.hpp"

namespace tle {

LinearForm LinearForm::g(std::size_t j)
{
    LinearForm f;
    f.a_.assign(j + 1, Rational(0));
    f.a_[j] = 1;
    return f;
}

void LinearForm::trim()
{
    while (!a_.empty() && a_.back().is_zero())
        a_.pop_back();
}

LinearForm LinearForm::D() const
{
    LinearForm r;
    r.a_.assign(a_.size() + 1, Rational(0));
    for (std::size_t j = 0; j < a_.size(); ++j) {
        r.a_[j] += a_[j] * Rational(static_cast<long>(j));
        r.a_[j + 1] += a_[j];
    }
    r.trim();
    return r;
}

LinearForm LinearForm::shifted_D(const Rational& c) const
{
    return D() - *this * c;
}

LinearForm& LinearForm::operator+=(const LinearForm& o)
{
    if (o.a_.size() > a_.size())
        a_.resize(o.a_.size(), Rational(0));
    for (std::size_t j = 0; j < o.a_.size(); ++j)
        a_[j] += o.a_[j];
    trim();
    return *this;
}

LinearForm LinearForm::operator+(const LinearForm& o) const
{
    LinearForm r = *this;
    return r += o;
}

LinearForm LinearForm::operator-(const LinearForm& o) const
{
    return *this + o * Rational(-1);
}

LinearForm LinearForm::operator*(const Rational& c) const
{
    LinearForm r = *this;
    for (auto& x : r.a_)
        x *= c;
    r.trim();
    return r;
}

long double LinearForm::eval(const std::vector<long double>& g) const
{
    if (a_.size() > g.size())
        throw Error(ErrorKind::usage, "linear form needs more derivatives than supplied");
    long double s = 0.0L;
    for (std::size_t j = 0; j < a_.size(); ++j)
        s += a_[j].to_long_double() * g[j];
    return s;
}

QuadForm QuadForm::product(const LinearForm& a, const LinearForm& b)
{
    QuadForm q;
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero())
                q.add(i, j, x[i] * y[j]);
    }
    return q;
}

QuadForm QuadForm::square(std::size_t j, const Rational& c)
{
    QuadForm q;
    q.add(j, j, c);
    return q;
}

void QuadForm::add(std::size_t i, std::size_t j, const Rational& c)
{
    if (i > j)
        std::swap(i, j);
    auto& v = t_[{i, j}];
    v += c;
    if (v.is_zero())
        t_.erase({i, j});
}

Rational QuadForm::coeff(std::size_t i, std::size_t j) const
{
    if (i > j)
        std::swap(i, j);
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

bool QuadForm::diagonal() const
{
    for (const auto& [k, c] : t_)
        if (k.first != k.second)
            return false;
    return true;
}

QuadForm& QuadForm::operator+=(const QuadForm& o)
{
    for (const auto& [k, c] : o.t_)
        add(k.first, k.second, c);
    return *this;
}

QuadForm QuadForm::operator+(const QuadForm& o) const
{
    QuadForm r = *this;
    return r += o;
}

QuadForm QuadForm::operator-(const QuadForm& o) const
{
    return *this + o * Rational(-1);
}

QuadForm QuadForm::operator*(const Rational& c) const
{
    QuadForm r;
    for (const auto& [k, v] : t_)
        r.add(k.first, k.second, v * c);
    return r;
}

bool QuadForm::operator==(const QuadForm& o) const
{
    return t_ == o.t_;
}

std::size_t QuadForm::max_index() const
{
    std::size_t m = 0;
    for (const auto& [k, c] : t_)
        m = std::max(m, k.second);
    return m;
}

long double QuadForm::eval(const std::vector<long double>& g) const
{
    long double s = 0.0L;
    for (const auto& [k, c] : t_) {
        if (k.second >= g.size())
            throw Error(ErrorKind::usage, "quadratic form needs more derivatives than supplied");
        s += c.to_long_double() * g[k.first] * g[k.second];
    }
    return s;
}

long double QuadForm::eval_derivative(const std::vector<long double>& g, long double lambda) const
{
    auto dg = [&](std::size_t i) {
        if (i + 1 >= g.size())
            throw Error(ErrorKind::usage, "boundary derivative needs more derivatives than supplied");
        return (static_cast<long double>(i) * g[i] + g[i + 1]) / lambda;
    };
    long double s = 0.0L;
    for (const auto& [k, c] : t_)
        s += c.to_long_double() * (dg(k.first) * g[k.second] + g[k.first] * dg(k.second));
    return s;
}

nlohmann::ordered_json QuadForm::to_json() const
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [k, c] : t_)
        j.push_back({{"i", k.first}, {"j", k.second}, {"coeff", c.str()}});
    return j;
}

Reduction reduce(const QuadForm& flux)
{
    Reduction r;
    QuadForm work = flux;
    for (;;) {
        const QuadForm::Key* pick = nullptr;
        for (const auto& [k, c] : work.terms())
            if (k.first != k.second && (!pick || k.second > pick->second))
                pick = &k;
        if (!pick)
            break;
        auto [i, j] = *pick;
        Rational c = work.coeff(i, j);
        work.add(i, j, -c);
        if (j == i + 1) {
            // c lam^{2i} f_i f_{i+1} = (c/2 lam^{2i} f_i^2)' - c i lam^{2i-1} f_i^2
            r.boundary.add(i, i, c / Rational(2));
            work.add(i, i, -c * Rational(static_cast<long>(i)));
        } else {
            // c lam^e f_i f_j = (c lam^e f_i f_{j-1})' - c e lam^{e-1} f_i f_{j-1} - c lam^e f_{i+1} f_{j-1}
            Rational e(static_cast<long>(i + j) - 1);
            r.boundary.add(i, j - 1, c);
            work.add(i, j - 1, -c * e);
            work.add(i + 1, j - 1, -c);
        }
    }
    r.canonical = work;
    return r;
}

}  // namespace tle

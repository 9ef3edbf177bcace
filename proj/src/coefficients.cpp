#include "tle/coefficients.hpp"

#include "tle/error.hpp"
#include "tle/exponents.hpp"

namespace tle {

namespace {

using json = nlohmann::ordered_json;

Polynomial kvar() { return Polynomial::identity("k"); }

void put(json& j, const std::string& key, const Rational& v)
{
    j[key] = v.str();
}

}  // namespace

Rational k_of_p(const Rational& p)
{
    if (p <= Rational(1))
        throw Error(ErrorKind::domain, "exponent p must exceed 1, got " + p.str());
    return Rational(6) / (p - 1);
}

Rational p_of_k(const Rational& k)
{
    if (k.sign() <= 0)
        throw Error(ErrorKind::domain, "k must be positive, got " + k.str());
    return (k + 6) / k;
}

Params Params::from_p(long n, const Rational& p)
{
    if (n <= 6)
        throw Error(ErrorKind::domain, "dimension below triharmonic range: n = " + std::to_string(n));
    return Params{n, p, k_of_p(p)};
}

Params Params::from_k(long n, const Rational& k)
{
    if (n <= 6)
        throw Error(ErrorKind::domain, "dimension below triharmonic range: n = " + std::to_string(n));
    return Params{n, p_of_k(k), k};
}

bool Params::supercritical() const { return k.sign() > 0 && k < Rational(n - 6, 2); }

Rational hardy_rellich_constant(long n) { return coef::hardy_rellich(Rational(n)); }

std::array<Rational, 4> deltas(const Params& p, DeltaSource source)
{
    Rational n(p.n);
    if (source == DeltaSource::derived)
        return coef::deltas(n, p.k);
    return coef::deltas_printed(n, p.k, coef::b(n, p.k));
}

CoefficientSet coefficient_set(const Params& p)
{
    Rational n(p.n);
    const Rational& k = p.k;
    CoefficientSet s;
    s.params = p;
    s.delta = coef::deltas(n, k);
    s.alpha = coef::alpha(n, k);
    s.beta = coef::beta(n, k);
    s.a = coef::a(n, k);
    s.b = coef::b(n, k);
    s.A1 = coef::A1(n, k);
    s.A2 = coef::A2(n, k);
    s.B1 = coef::B1(n, k);
    s.k0 = coef::k0(n, k);
    s.k1 = coef::k1(n, k);
    s.k2 = coef::k2(n, k);
    s.c0 = coef::c0(n, k);
    s.c1 = coef::c1(n, k);
    s.c2 = coef::c2(n, k);
    s.hardy_rellich = coef::hardy_rellich(n);
    return s;
}

json CoefficientSet::to_json() const
{
    json j;
    j["n"] = params.n;
    put(j, "p", params.p);
    put(j, "k", params.k);
    j["supercritical"] = params.supercritical();
    json v;
    for (int i = 0; i < 4; ++i)
        put(v, "delta" + std::to_string(i + 1), delta[i]);
    put(v, "alpha", alpha);
    put(v, "beta", beta);
    put(v, "a", a);
    put(v, "b", b);
    put(v, "A1", A1);
    put(v, "A2", A2);
    put(v, "B1", B1);
    put(v, "k0", k0);
    put(v, "k1", k1);
    put(v, "k2", k2);
    put(v, "c0", c0);
    put(v, "c1", c1);
    put(v, "c2", c2);
    put(v, "hardy_rellich", hardy_rellich);
    json approx;
    for (auto it = v.begin(); it != v.end(); ++it)
        approx[it.key()] = Rational::parse(it.value().get<std::string>()).to_double();
    j["coefficients"] = v;
    j["approx"] = approx;
    return j;
}

json delta_consistency_report(const Params& p)
{
    auto d = deltas(p, DeltaSource::derived);
    auto q = deltas(p, DeltaSource::printed);
    json j;
    j["n"] = p.n;
    j["k"] = p.k.str();
    j["b_substituted"] = coef::b(Rational(p.n), p.k).str();
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json r;
        r["component"] = "delta" + std::to_string(i + 1);
        r["derived"] = d[i].str();
        r["printed"] = q[i].str();
        r["agree"] = d[i] == q[i];
        rows.push_back(r);
    }
    j["components"] = rows;
    return j;
}

Polynomial c0_in_k(long n) { return coef::c0(Rational(n), kvar()); }
Polynomial c1_in_k(long n) { return coef::c1(Rational(n), kvar()); }
Polynomial c2_in_k(long n) { return coef::c2(Rational(n), kvar()); }
Polynomial A2_in_k(long n) { return coef::A2(Rational(n), kvar()); }
Polynomial B1_in_k(long n) { return coef::B1(Rational(n), kvar()); }

Polynomial c0_cubic(long n) { return pc_cubic(n); }

Polynomial c0_substituted(long n)
{
    Polynomial shift = Polynomial(Rational(n - 8, 2)) + Polynomial::identity("a");
    Polynomial in_a = c0_in_k(n).compose(shift);
    std::vector<Rational> even;
    for (int i = 0; i <= in_a.degree(); ++i) {
        if (i % 2 == 1) {
            if (!in_a.coeff(i).is_zero())
                throw Error(ErrorKind::data, "odd power of a survives in c0 at n = " + std::to_string(n));
        } else {
            even.push_back(in_a.coeff(i));
        }
    }
    return Polynomial(even).with_var("t");
}

Rational singular_amplitude(const Params& p)
{
    Rational v = coef::k0(Rational(p.n), p.k);
    if (v.sign() <= 0)
        throw Error(ErrorKind::domain, "no positive singular amplitude at n = " + std::to_string(p.n) +
                                           ", k = " + p.k.str());
    return v;
}

std::string to_string(Stability s)
{
    switch (s) {
    case Stability::stable:
        return "stable";
    case Stability::unstable:
        return "unstable";
    default:
        return "boundary-inconclusive";
    }
}

Stability singular_stability(const Params& p)
{
    if (!p.supercritical())
        throw Error(ErrorKind::domain, "singular stability needs p above the Sobolev exponent");
    return coef::c0(Rational(p.n), p.k).sign() <= 0 ? Stability::stable : Stability::unstable;
}

Stability singular_stability(long n, const Interval& k)
{
    if (!k.positive() || !(k.hi() < Rational(n - 6, 2)))
        throw Error(ErrorKind::domain, "singular stability needs p above the Sobolev exponent");
    Interval c = coef::c0(Rational(n), k);
    if (c.positive())
        return Stability::unstable;
    if (!(Rational(0) < c.hi()))
        return Stability::stable;
    return Stability::boundary_inconclusive;
}

}  // namespace tle

#include "tle/profiles.hpp"

#include "tle/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>

#include <cmath>

namespace tle {

std::string to_string(ProfileKind k)
{
    switch (k) {
    case ProfileKind::gaussian: return "gaussian";
    case ProfileKind::power: return "power";
    case ProfileKind::polynomial_bump: return "polynomial-bump";
    case ProfileKind::exponential_decay: return "exponential-decay";
    }
    return "?";
}

ProfileKind profile_kind_from_string(const std::string& s)
{
    if (s == "gaussian")
        return ProfileKind::gaussian;
    if (s == "power" || s == "homogeneous")
        return ProfileKind::power;
    if (s == "polynomial-bump" || s == "bump")
        return ProfileKind::polynomial_bump;
    if (s == "exponential-decay" || s == "exponential")
        return ProfileKind::exponential_decay;
    throw Error(ErrorKind::usage, "unknown profile kind '" + s + "'");
}

HarmonicTestFunction HarmonicTestFunction::gaussian(long n, unsigned l, long double sigma, long double amplitude)
{
    if (!(sigma > 0))
        throw Error(ErrorKind::usage, "gaussian width must be positive");
    HarmonicTestFunction u;
    u.n = n;
    u.l = l;
    u.shape.kind = ProfileKind::gaussian;
    u.shape.sigma = sigma;
    u.shape.amplitude = amplitude;
    return u;
}

HarmonicTestFunction HarmonicTestFunction::power(long n, unsigned l, long double exponent, long double amplitude)
{
    HarmonicTestFunction u;
    u.n = n;
    u.l = l;
    u.shape.kind = ProfileKind::power;
    u.shape.exponent = exponent;
    u.shape.amplitude = amplitude;
    return u;
}

HarmonicTestFunction HarmonicTestFunction::polynomial_bump(long n, unsigned l, std::vector<long double> coeffs,
                                                           long double support, unsigned m, long double amplitude)
{
    if (!(support > 0))
        throw Error(ErrorKind::usage, "bump support must be positive");
    if (coeffs.empty())
        throw Error(ErrorKind::usage, "bump needs at least one coefficient");
    HarmonicTestFunction u;
    u.n = n;
    u.l = l;
    u.shape.kind = ProfileKind::polynomial_bump;
    u.shape.coeffs = std::move(coeffs);
    u.shape.support = support;
    u.shape.bump_power = m;
    u.shape.amplitude = amplitude;
    return u;
}

HarmonicTestFunction HarmonicTestFunction::exponential_decay(long n, unsigned l, long double rate, long double amplitude)
{
    if (!(rate > 0))
        throw Error(ErrorKind::usage, "decay rate must be positive");
    HarmonicTestFunction u;
    u.n = n;
    u.l = l;
    u.shape.kind = ProfileKind::exponential_decay;
    u.shape.rate = rate;
    u.shape.amplitude = amplitude;
    return u;
}

HarmonicTestFunction HarmonicTestFunction::homogeneous(long n, unsigned l, long double k)
{
    return power(n, l, -k);
}

long double HarmonicTestFunction::mu() const
{
    return static_cast<long double>(l) * static_cast<long double>(static_cast<long>(l) + n - 2);
}

long double HarmonicTestFunction::kink() const
{
    return shape.kind == ProfileKind::polynomial_bump ? shape.support : 0.0L;
}

Jet HarmonicTestFunction::radial(const Jet& r) const
{
    const RadialShape& s = shape;
    std::size_t N = r.order();
    switch (s.kind) {
    case ProfileKind::gaussian:
        return s.amplitude * ipow(r, l) * exp(r * r * (-0.5L / (s.sigma * s.sigma)));
    case ProfileKind::power:
        return s.amplitude * pow(r, s.exponent);
    case ProfileKind::exponential_decay:
        return s.amplitude * ipow(r, l) * exp(r * (-s.rate));
    case ProfileKind::polynomial_bump: {
        if (r.value() >= s.support)
            return Jet::constant(0.0L, N);
        Jet poly = Jet::constant(0.0L, N);
        for (std::size_t i = s.coeffs.size(); i-- > 0;)
            poly = poly * r + s.coeffs[i];
        Jet cap = s.support * s.support - r * r;
        return s.amplitude * ipow(r, l) * poly * ipow(cap, s.bump_power);
    }
    }
    return Jet::constant(0.0L, N);
}

long double HarmonicTestFunction::radial(long double r) const
{
    return radial(Jet::constant(r, 0)).value();
}

nlohmann::ordered_json HarmonicTestFunction::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(shape.kind);
    j["n"] = n;
    j["l"] = l;
    j["amplitude"] = static_cast<double>(shape.amplitude);
    switch (shape.kind) {
    case ProfileKind::gaussian: j["sigma"] = static_cast<double>(shape.sigma); break;
    case ProfileKind::power: j["exponent"] = static_cast<double>(shape.exponent); break;
    case ProfileKind::exponential_decay: j["rate"] = static_cast<double>(shape.rate); break;
    case ProfileKind::polynomial_bump: {
        j["support"] = static_cast<double>(shape.support);
        j["bump_power"] = shape.bump_power;
        auto& c = j["coeffs"] = nlohmann::ordered_json::array();
        for (auto x : shape.coeffs)
            c.push_back(static_cast<double>(x));
        break;
    }
    }
    return j;
}

HarmonicTestFunction scale(const HarmonicTestFunction& u, long double lambda, long double k)
{
    if (!(lambda > 0))
        throw Error(ErrorKind::usage, "scale factor must be positive");
    HarmonicTestFunction s = u;
    RadialShape& sh = s.shape;
    long double lk = std::pow(lambda, k);
    long double ll = std::pow(lambda, static_cast<long double>(u.l));
    switch (sh.kind) {
    case ProfileKind::gaussian:
        sh.amplitude *= lk * ll;
        sh.sigma /= lambda;
        break;
    case ProfileKind::power:
        sh.amplitude *= std::pow(lambda, k + sh.exponent);
        break;
    case ProfileKind::exponential_decay:
        sh.amplitude *= lk * ll;
        sh.rate *= lambda;
        break;
    case ProfileKind::polynomial_bump: {
        sh.amplitude *= lk * ll * std::pow(lambda, 2.0L * sh.bump_power);
        long double li = 1.0L;
        for (auto& c : sh.coeffs) {
            c *= li;
            li *= lambda;
        }
        sh.support /= lambda;
        break;
    }
    }
    return s;
}

long double sphere_area(long n)
{
    using boost::math::constants::pi;
    long double h = static_cast<long double>(n) / 2;
    return 2 * std::pow(pi<long double>(), h) / boost::math::tgamma(h);
}

long double sphere_moment(long n, unsigned l, long double q)
{
    if (n < 3)
        throw Error(ErrorKind::usage, "sphere moments need n >= 3");
    long double nu = static_cast<long double>(n - 2) / 2;
    long double e = static_cast<long double>(n - 3) / 2;
    auto C = [&](long double t) { return l == 0 ? 1.0L : boost::math::gegenbauer(l, nu, t); };
    auto integrate = [&](auto&& f) {
        constexpr int pieces = 256;
        long double s = 0.0L;
        for (int i = 0; i < pieces; ++i) {
            long double a = -1.0L + 2.0L * i / pieces, b = -1.0L + 2.0L * (i + 1) / pieces;
            s += boost::math::quadrature::gauss<long double, 30>::integrate(
                [&](long double t) { return f(t) * std::pow(std::max(0.0L, 1 - t * t), e); }, a, b);
        }
        return s;
    };
    long double lower = sphere_area(n - 1);
    long double norm2 = lower * integrate([&](long double t) { return C(t) * C(t); });
    long double c = 1.0L / std::sqrt(norm2);
    return lower * integrate([&](long double t) { return std::pow(std::fabs(c * C(t)), q); });
}

}  // namespace tle

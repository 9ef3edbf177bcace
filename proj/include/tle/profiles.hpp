#pragma once

#include "tle/jet.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tle {

enum class ProfileKind { gaussian, power, polynomial_bump, exponential_decay };

std::string to_string(ProfileKind k);
ProfileKind profile_kind_from_string(const std::string& s);

// Radial part R(r) of a single-mode test function u = R(r) Y_l(theta).
//   gaussian           A r^l exp(-r^2 / (2 sigma^2))
//   power              A r^s                       (no r^l factor)
//   polynomial_bump    A r^l (sum_i c_i r^i) (S^2 - r^2)^m  for r < S, 0 beyond
//   exponential_decay  A r^l exp(-a r)
struct RadialShape {
    ProfileKind kind = ProfileKind::gaussian;
    long double amplitude = 1.0L;
    long double sigma = 1.0L;
    long double exponent = 0.0L;
    long double rate = 1.0L;
    long double support = 1.0L;
    unsigned bump_power = 6;
    std::vector<long double> coeffs{1.0L};
};

struct HarmonicTestFunction {
    RadialShape shape;
    unsigned l = 0;
    long n = 0;

    static HarmonicTestFunction gaussian(long n, unsigned l, long double sigma, long double amplitude = 1.0L);
    static HarmonicTestFunction power(long n, unsigned l, long double exponent, long double amplitude = 1.0L);
    static HarmonicTestFunction polynomial_bump(long n, unsigned l, std::vector<long double> coeffs,
                                                long double support, unsigned m = 6, long double amplitude = 1.0L);
    static HarmonicTestFunction exponential_decay(long n, unsigned l, long double rate, long double amplitude = 1.0L);
    // r^{-k}: invariant under the blow-down scaling with exponent k
    static HarmonicTestFunction homogeneous(long n, unsigned l, long double k);

    // Laplace-Beltrami eigenvalue l(l+n-2)
    long double mu() const;
    // Breakpoint of the radial part (bump support), or 0 if none.
    long double kink() const;

    Jet radial(const Jet& r) const;
    long double radial(long double r) const;

    nlohmann::ordered_json to_json() const;
};

// u^lambda(x) = lambda^k u(lambda x), with the parameters transformed exactly.
HarmonicTestFunction scale(const HarmonicTestFunction& u, long double lambda, long double k);

// Integral over S^{n-1} of |Y|^q for the unit-normalized zonal harmonic of degree l.
long double sphere_moment(long n, unsigned l, long double q);
long double sphere_area(long n);

}  // namespace tle

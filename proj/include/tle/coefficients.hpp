#pragma once

#include "tle/interval.hpp"
#include "tle/polynomial.hpp"
#include "tle/rational.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>

namespace tle {

Rational k_of_p(const Rational& p);
Rational p_of_k(const Rational& k);

struct Params {
    long n = 0;
    Rational p, k;

    static Params from_p(long n, const Rational& p);
    static Params from_k(long n, const Rational& k);

    // 0 < k < (n-6)/2
    bool supercritical() const;
};

// The formulas below take n exactly and k as any scalar supporting ring arithmetic with
// Rational: Rational, Polynomial (in k), Interval.
namespace coef {

template <class K>
std::array<K, 4> deltas(const Rational& n, const K& k)
{
    Rational m = n - 1;
    return {
        K(2 * m) - 4 * k,
        6 * k * (k + 1) - 6 * m * k + K(m * (m - 2)),
        -4 * k * (k + 1) * (k + 2) + 6 * m * k * (k + 1) - m * (m - 2) * (2 * k + 1),
        k * (k + 1) * (k + 2) * (k + 3) - 2 * m * k * (k + 1) * (k + 2) + m * (m - 2) * k * (k + 2),
    };
}

// The deltas exactly as displayed in the statement of the formula, with the undefined b of the
// third one supplied by the caller.
template <class K>
std::array<K, 4> deltas_printed(const Rational& n, const K& k, const K& b)
{
    return {
        K(2 * n) - 4 * k,
        K(n * (n - 2)) - 6 * n * k - 6 * k * (6 * k + 1),
        -4 * k * (k + 1) * (k + 2) + 4 * n * k * (k + 1) - (b + n) * (b + n - 2) * (2 * k + 1),
        (k + 3) * (k + 2) * (k + 1) * k - 2 * n * (k + 1) * (k + 2) * k + n * (n - 2) * (k + 2) * k,
    };
}

template <class K> K alpha(const Rational& n, const K& k) { return K(n - 3) - 2 * k; }
template <class K> K beta(const Rational& n, const K& k) { return k * (k + 4 - n); }
template <class K> K a(const Rational& n, const K& k) { return K(n - 1) - 2 * k; }
template <class K> K b(const Rational& n, const K& k) { return k * (k - n + 2); }

template <class K>
K A1(const Rational& n, const K& k)
{
    auto d = deltas(n, k);
    K av = a(n, k), bv = b(n, k);
    return 10 * d[0] - 2 * d[1] - 56 + av * av - 2 * av - 2 * bv - 4;
}

template <class K>
K A2(const Rational& n, const K& k)
{
    auto d = deltas(n, k);
    K av = a(n, k), bv = b(n, k);
    return -18 * d[0] + 6 * d[1] - 4 * d[2] + 2 * d[3] + 72 - av * av + bv * bv + 2 * av + 2 * bv;
}

template <class K>
K B1(const Rational& n, const K& k)
{
    return 8 * alpha(n, k) - 4 * beta(n, k) - 2 * b(n, k) + K(4 * n - 18);
}

template <class K>
K A1_expanded(const Rational& n, const K& k)
{
    return -10 * k * k + (10 * n - 60) * k + K(-n * n + 24 * n - 83);
}

template <class K>
K A2_expanded(const Rational& n, const K& k)
{
    K k2 = k * k;
    return 3 * k2 * k2 + (36 - 6 * n) * k2 * k + (3 * n * n - 48 * n + 150) * k2 + (12 * n * n - 114 * n + 252) * k +
           K(9 * n * n - 72 * n + 135);
}

template <class K>
K A2_factored(const Rational& n, const K& k)
{
    return 3 * (k + 1) * (k + 3) * (k - (n - 5)) * (k - (n - 3));
}

template <class K>
K B1_expanded(const Rational& n, const K& k)
{
    return -6 * k * k + (6 * n - 36) * k + K(12 * n - 42);
}

template <class K>
K k0_over_k(const Rational& n, const K& k)
{
    return (k + 2) * (k + 4) * (K(n - 2) - k) * (K(n - 4) - k) * (K(n - 6) - k);
}

template <class K> K k0(const Rational& n, const K& k) { return k * k0_over_k(n, k); }

template <class K>
K k1(const Rational& n, const K& k)
{
    return k * (k + 2 - n) * (k + 4) * (k + 6 - n) + (k + 2) * (k + 4 - n) * (k + 4) * (k + 6 - n) +
           k * (k + 2 - n) * (k + 2) * (k + 4 - n);
}

template <class K>
K k2(const Rational& n, const K& k)
{
    return (k + 4) * (K(n - 6) - k) + k * (K(n - 2) - k) + (k + 2) * (K(n - 4) - k);
}

inline Rational hardy_rellich(const Rational& n)
{
    Rational x = (n - 6) * (n - 2) * (n + 2);
    return x * x / 64;
}

template <class K> K c0(const Rational& n, const K& k) { return (k + 6) * k0_over_k(n, k) - hardy_rellich(n); }

template <class K>
K c1(const Rational& n, const K& k)
{
    return (k + 6) * k1(n, k) - (n - 6) * (n + 2) * (3 * n * n - 12 * n - 4) / 16 * k;
}

template <class K>
K c2(const Rational& n, const K& k)
{
    return (k + 6) * k2(n, k) - (3 * n * n - 12 * n - 20) / 4 * k;
}

}  // namespace coef

Rational hardy_rellich_constant(long n);

struct CoefficientSet {
    Params params;
    std::array<Rational, 4> delta;
    Rational alpha, beta, a, b;
    Rational A1, A2, B1;
    Rational k0, k1, k2;
    Rational c0, c1, c2;
    Rational hardy_rellich;

    nlohmann::ordered_json to_json() const;
};

CoefficientSet coefficient_set(const Params& p);

enum class DeltaSource { derived, printed };

std::array<Rational, 4> deltas(const Params& p, DeltaSource source = DeltaSource::derived);

// Per-component comparison of the printed deltas against the derived ones.
nlohmann::ordered_json delta_consistency_report(const Params& p);

// Polynomials in k at fixed n.
Polynomial c0_in_k(long n);
Polynomial c1_in_k(long n);
Polynomial c2_in_k(long n);
Polynomial A2_in_k(long n);
Polynomial B1_in_k(long n);

// The printed cubic in t = a^2.
Polynomial c0_cubic(long n);
// c0(k) with k = (n-8)/2 + a, rewritten in t = a^2; throws if an odd power of a survives.
Polynomial c0_substituted(long n);

Rational singular_amplitude(const Params& p);

enum class Stability { stable, unstable, boundary_inconclusive };

std::string to_string(Stability s);

Stability singular_stability(const Params& p);
// For an exponent known only through an enclosure of k.
Stability singular_stability(long n, const Interval& k);

}  // namespace tle

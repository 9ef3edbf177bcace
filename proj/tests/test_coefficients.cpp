#include <doctest.h>

#include "tle/coefficients.hpp"
#include "tle/error.hpp"
#include "tle/exponents.hpp"
#include "tle/roots.hpp"

#include <random>

using namespace tle;

namespace {

Polynomial kv() { return Polynomial::identity("k"); }

struct RandomParams {
    std::mt19937 rng{12345};
    Params next()
    {
        std::uniform_int_distribution<long> nd(7, 80), num(1, 997), den(1, 97);
        long n = nd(rng);
        return Params::from_k(n, Rational(mpz_class(num(rng)), mpz_class(den(rng))));
    }
};

// Delta^3 acting on r^-k w(theta) is r^-k-6 times the product over j = 0, 1, 2 of
// (Delta_theta + (k+2j)(k+2j+2-n)); the k's are read off from its expansion.
std::array<Polynomial, 3> polar_k_coeffs(long n)
{
    std::array<Polynomial, 3> s;
    for (int j = 0; j < 3; ++j)
        s[j] = (kv() + 2 * j) * (kv() + (2 * j + 2 - n));
    Polynomial e1 = s[0] + s[1] + s[2];
    Polynomial e2 = s[0] * s[1] + s[0] * s[2] + s[1] * s[2];
    Polynomial e3 = s[0] * s[1] * s[2];
    return {-e3, e2, -e1};
}

}  // namespace

TEST_CASE("k and p conversions")
{
    for (long n : {7L, 12L, 31L}) {
        Rational ps(n + 6, n - 6);
        CHECK(k_of_p(ps) == Rational(n - 6, 2));
    }
    CHECK(p_of_k(Rational(6)) == Rational(2));
    CHECK(p_of_k(k_of_p(Rational(7))) == Rational(7));
    CHECK_THROWS_AS(k_of_p(Rational(1)), Error);
    CHECK_THROWS_AS(p_of_k(Rational(0)), Error);
    CHECK(Params::from_p(15, Rational(7)).k == Rational(1));
    CHECK(Params::from_p(15, Rational(7)).supercritical());
    CHECK(!Params::from_p(15, Rational(2)).supercritical());
}

TEST_CASE("deltas")
{
    Params p = Params::from_k(15, Rational(1));
    CHECK(deltas(p, DeltaSource::printed)[0] == Rational(26));
    CHECK(deltas(p)[0] == Rational(24));
    Rational tiny(1, 1000000);
    Rational d1 = deltas(Params::from_k(20, tiny), DeltaSource::printed)[0];
    CHECK((d1 - 40).abs() < Rational(1, 100000));

    auto report = delta_consistency_report(p);
    CHECK(report["components"].size() == 4);
    CHECK(report["components"][0]["agree"] == false);
}

TEST_CASE("alpha, beta, a, b")
{
    Params p = Params::from_k(15, Rational(2));
    auto s = coefficient_set(p);
    CHECK(s.alpha == Rational(8));
    CHECK(s.beta == Rational(-18));
    CHECK(coef::alpha(Rational(15), Rational(0)) == Rational(12));
    CHECK(coef::beta(Rational(15), Rational(0)) == Rational(0));
    RandomParams gen;
    for (int i = 0; i < 20; ++i) {
        auto c = coefficient_set(gen.next());
        CHECK(c.a - c.alpha == Rational(2));
    }
}

TEST_CASE("A1, A2, B1")
{
    CHECK(coef::A2(Rational(21), Rational(0)) == Rational(2592));
    for (long n = 7; n <= 60; ++n) {
        CHECK(coef::A2(Rational(n), kv()) == coef::A2_factored(Rational(n), kv()));
        CHECK(coef::A2(Rational(n), kv()) == coef::A2_expanded(Rational(n), kv()));
        CHECK(coef::A1(Rational(n), kv()) == coef::A1_expanded(Rational(n), kv()));
        CHECK(coef::B1(Rational(n), kv()) == coef::B1_expanded(Rational(n), kv()));
        Rational x(n);
        Polynomial from_roots = -6 * (kv() * kv() - (x - 6) * kv() + ((x - 6) * (x - 6) - (x * x - 4 * x + 8)) / 4);
        CHECK(B1_in_k(n) == from_roots);
    }
    RandomParams gen;
    for (int i = 0; i < 100; ++i) {
        Params p = gen.next();
        Rational n(p.n);
        CHECK(coef::A2(n, p.k) == coef::A2_factored(n, p.k));
    }
}

TEST_CASE("A2 and B1 positive on the supercritical range")
{
    for (long n = 7; n <= 60; ++n) {
        Domain d = Domain::open(0, Rational(n - 6, 2));
        INFO("n = " << n);
        CHECK(certify_sign(A2_in_k(n), d, SignClaim::positive).verified());
        CHECK(certify_sign(B1_in_k(n), d, SignClaim::positive).verified());
    }
}

TEST_CASE("k coefficients")
{
    CHECK(coefficient_set(Params::from_k(15, Rational(1))).k0 == Rational(14400));
    CHECK(coef::k0(Rational(18), Rational(6)) == Rational(230400));
    for (long n = 7; n <= 30; ++n) {
        auto polar = polar_k_coeffs(n);
        Rational x(n);
        CHECK(coef::k0(x, kv()) == polar[0]);
        CHECK(coef::k1(x, kv()) == polar[1]);
        CHECK(coef::k2(x, kv()) == polar[2]);
    }
}

TEST_CASE("c coefficients")
{
    RandomParams gen;
    for (int i = 0; i < 100; ++i) {
        Params p = gen.next();
        Rational n(p.n);
        CHECK(coef::c0(n, p.k) == p.p * coef::k0(n, p.k) - hardy_rellich_constant(p.n));
    }
    for (long n = 7; n <= 40; ++n) {
        Rational x(n);
        Polynomial printed = 3 * kv().pow(5) + (54 - 6 * x) * kv().pow(4) + (3 * x * x - 84 * x + 372) * kv().pow(3) +
                             (30 * x * x - 408 * x + 1224) * kv() * kv() +
                             (Rational(159, 2) * x * x - 810 * x + 1917 - Rational(3, 16) * x.pow(4) +
                              Rational(3, 2) * x.pow(3)) *
                                 kv() +
                             (48 * x * x - 480 * x + 1152);
        CHECK(c1_in_k(n) == printed);
        Polynomial c2_cubic = -3 * kv().pow(3) + (3 * x - 36) * kv() * kv() +
                              (-135 + 27 * x - Rational(3, 4) * x * x) * kv() + (36 * x - 192);
        CHECK(c2_in_k(n) == c2_cubic);
    }
}

TEST_CASE("the cubic in t")
{
    CHECK(c0_cubic(4).coeff(2) == Rational(20));
    CHECK(c0_cubic(2).coeff(0) == Rational(9));
    for (long n = 7; n <= 60; ++n) {
        INFO("n = " << n);
        CHECK(c0_substituted(n) == c0_cubic(n));
    }
}

TEST_CASE("hardy rellich constant")
{
    CHECK(hardy_rellich_constant(8) == Rational(225));
    CHECK(hardy_rellich_constant(6) == Rational(0));
    CHECK(hardy_rellich_constant(10) == Rational(2304));
}

TEST_CASE("singular amplitude")
{
    CHECK(singular_amplitude(Params::from_k(15, Rational(1))) == Rational(14400));
    Rational near_top = Rational(9, 2) - Rational(1, 1000);
    CHECK(singular_amplitude(Params::from_k(15, near_top)).sign() > 0);
    CHECK(singular_amplitude(Params::from_k(15, Rational(1, 1000000))) < Rational(1, 10));
    CHECK_THROWS_WITH(singular_amplitude(Params::from_k(15, Rational(10))),
                      doctest::Contains("no positive singular amplitude"));
}

TEST_CASE("singular stability")
{
    for (long n : {15L, 20L, 50L}) {
        Rational mid = joseph_lundgren_triharmonic(n).enclosure().mid();
        Rational below = mid * (1 - Rational(1, 1000)), above = mid * (1 + Rational(1, 1000));
        INFO("n = " << n);
        CHECK(singular_stability(Params::from_p(n, below)) == Stability::unstable);
        CHECK(singular_stability(Params::from_p(n, above)) == Stability::stable);
    }
    for (Rational k : {Rational(1, 10), Rational(1), Rational(2), Rational(29, 10)})
        CHECK(singular_stability(Params::from_k(12, k)) == Stability::unstable);
    CHECK_THROWS_AS(singular_stability(Params::from_p(15, Rational(2))), Error);

    Interval pc = joseph_lundgren_triharmonic(20).enclosure();
    Interval kc = Interval(6) / (pc - Interval(1));
    CHECK(singular_stability(20, kc) == Stability::boundary_inconclusive);
}
